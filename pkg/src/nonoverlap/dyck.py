"""Dyck words (1 = up-step, 0 = down-step) and the family D_n of strings 1w0."""
from __future__ import annotations

from nonoverlap.bitstrings import DomainError, check_bits


def is_dyck(w: str) -> bool:
    check_bits(w)
    height = 0
    for ch in w:
        height += 1 if ch == "1" else -1
        if height < 0:
            return False
    return height == 0


def gen_dyck(semilength: int) -> list[str]:
    """All Dyck words of length 2*semilength, lexicographic."""
    if semilength < 0:
        raise DomainError(f"semilength must be >= 0, got {semilength}")
    out: list[str] = []
    buf: list[str] = []

    # '0' tried before '1' keeps the output sorted
    def walk(ups: int, downs: int) -> None:
        if downs == semilength:
            out.append("".join(buf))
            return
        if downs < ups:
            buf.append("0")
            walk(ups, downs + 1)
            buf.pop()
        if ups < semilength:
            buf.append("1")
            walk(ups + 1, downs)
            buf.pop()

    walk(0, 0)
    return out


def gen_D_family(n: int) -> list[str]:
    """Strings 1w0 with w a Dyck word of length 0, 2, ..., 2*floor((n-2)/2)."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    out = ["1" + w + "0" for i in range((n - 2) // 2 + 1) for w in gen_dyck(i)]
    return sorted(out)


def _semilength(cols: int) -> int:
    if cols % 2 or cols < 6:
        raise DomainError(f"column count must be even and >= 6, got {cols}")
    return cols // 2


def canonical_T_dyck(cols: int) -> str:
    """Zig-zag top row 1(10)^(s-1)0 for 2s columns."""
    s = _semilength(cols)
    return "1" + "10" * (s - 1) + "0"


def canonical_B_dyck(cols: int) -> str:
    """Pyramid bottom row 1^s 0^s for 2s columns."""
    s = _semilength(cols)
    return "1" * s + "0" * s
