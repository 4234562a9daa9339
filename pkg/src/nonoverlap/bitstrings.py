"""Binary strings, prefix/suffix overlap, and the forbidden-run family V_n^(k).

Bit strings are plain ``str`` values over the characters ``'0'`` and ``'1'``,
leftmost symbol first.
"""
from __future__ import annotations

from typing import Iterable


class DomainError(ValueError):
    """Raised when an operation is called outside its parameter domain."""


def check_bits(u: str, *, allow_empty: bool = True) -> str:
    if not isinstance(u, str):
        raise DomainError(f"bit string must be str, got {type(u).__name__}")
    if not allow_empty and not u:
        raise DomainError("empty bit string")
    if u.strip("01"):
        raise DomainError(f"not a binary string: {u!r}")
    return u


def check_k(k: int) -> int:
    if k < 3:
        raise DomainError(f"forbidden run length must be >= 3, got {k}")
    return k


def overlap_length(u: str, v: str) -> int:
    """Longest ℓ in 1..min(|u|,|v|)-1 with a prefix of one equal to a suffix
    of the other, or 0 when ``u`` and ``v`` do not overlap."""
    check_bits(u, allow_empty=False)
    check_bits(v, allow_empty=False)
    for ell in range(min(len(u), len(v)) - 1, 0, -1):
        if v.endswith(u[:ell]) or u.endswith(v[:ell]):
            return ell
    return 0


def strings_overlap(u: str, v: str) -> bool:
    """True iff some proper prefix of one string equals a proper suffix of the other.

    Containment of one string inside the other does not count.
    """
    return overlap_length(u, v) > 0


def is_bifix_free(u: str) -> bool:
    check_bits(u, allow_empty=False)
    return not any(u[:ell] == u[-ell:] for ell in range(1, len(u)))


def is_factor(u: str, v: str) -> bool:
    check_bits(u, allow_empty=False)
    check_bits(v)
    return u in v


def has_run(u: str, k: int) -> bool:
    """True iff ``u`` contains k consecutive equal symbols."""
    return "0" * k in u or "1" * k in u


def gen_inner_strings(length: int, k: int) -> list[str]:
    """Strings of the given length that start with 0, end with 1 and have no
    run of k equal symbols, in lexicographic order.

    Length 0 yields the single empty string.
    """
    check_k(k)
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length}")
    if length == 0:
        return [""]
    out: list[str] = []
    buf = ["0"]

    def extend(run: int) -> None:
        if len(buf) == length:
            if buf[-1] == "1":
                out.append("".join(buf))
            return
        last = buf[-1]
        for sym in "01":
            nrun = run + 1 if sym == last else 1
            if nrun >= k:
                continue
            buf.append(sym)
            extend(nrun)
            buf.pop()

    extend(1)
    return out


def gen_V_level(i: int, k: int) -> list[str]:
    """All strings 1^k 0u1 0^k of length ``i`` whose middle 0u1 avoids 0^k and 1^k."""
    check_k(k)
    if i < 2 * k + 2:
        raise DomainError(f"level length must be >= 2k+2 = {2 * k + 2}, got {i}")
    head, tail = "1" * k, "0" * k
    return [head + mid + tail for mid in gen_inner_strings(i - 2 * k, k)]


def gen_V_family(n: int, k: int) -> list[str]:
    """Union of the levels 2k+2..n, sorted lexicographically."""
    check_k(k)
    if n < 2 * k + 2:
        raise DomainError(f"n must be >= 2k+2 = {2 * k + 2}, got {n}")
    out: list[str] = []
    for i in range(2 * k + 2, n + 1):
        out.extend(gen_V_level(i, k))
    return sorted(out)


def _check_row_length(s: int, k: int) -> None:
    check_k(k)
    if s < 2 * k + 3:
        raise DomainError(f"row length must be >= 2k+3 = {2 * k + 3}, got {s}")


def canonical_T(s: int, k: int) -> str:
    """Fixed top row for matrices with ``s`` columns: alternating middle starting with 1."""
    _check_row_length(s, k)
    if s % 2 == 0:
        u = "10" * ((s - 2 * k - 2) // 2)
    else:
        u = "1" + "01" * ((s - 2 * k - 3) // 2)
    return "1" * k + "0" + u + "1" + "0" * k


def canonical_B(s: int, k: int) -> str:
    """Fixed bottom row for matrices with ``s`` columns: alternating middle starting with 0."""
    _check_row_length(s, k)
    if s % 2 == 0:
        v = "01" * ((s - 2 * k - 2) // 2)
    else:
        v = "0" + "10" * ((s - 2 * k - 3) // 2)
    return "1" * k + "0" + v + "1" + "0" * k


def format_strings(strings: Iterable[str]) -> str:
    """One string per line, lexicographic, newline-terminated."""
    return "".join(s + "\n" for s in sorted(strings))


def parse_strings(text: str) -> list[str]:
    return [check_bits(line.strip(), allow_empty=False) for line in text.splitlines() if line.strip()]
