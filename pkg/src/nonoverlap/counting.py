"""Closed-form counts: k-bonacci numbers, r_l, Catalan numbers and the
cardinalities of the matrix families.

Everything returns exact ``int`` or ``Fraction`` values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from nonoverlap.bitstrings import DomainError, check_k

PUBLISHED = "published"
CORRECTED = "corrected"


@dataclass(frozen=True)
class BoundPair:
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    def brackets(self, value) -> bool:
        return self.lower <= value <= self.upper


def kbonacci(k: int, ell: int) -> int:
    """k-generalized Fibonacci number with base f_l = 2^l for l <= k-1."""
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if ell < 0:
        raise DomainError(f"index must be >= 0, got {ell}")
    if ell < k:
        return 2**ell
    window = [2**i for i in range(k)]
    total = sum(window)
    for _ in range(k, ell + 1):
        window.append(total)
        total += total - window.pop(0)
    return window[-1]


def d_correction(k: int, ell: int) -> int:
    rem = ell % k
    if rem == 0:
        return 1
    if rem == 1:
        return -1
    return 0


def r_count(k: int, ell: int) -> int:
    """Number of length-l strings starting with 0, ending with 1 and avoiding 0^k, 1^k."""
    check_k(k)
    if ell < 0:
        raise DomainError(f"length must be >= 0, got {ell}")
    if ell == 0:
        return 1
    numerator = kbonacci(k - 1, ell - 1) + d_correction(k, ell)
    assert numerator % 2 == 0, f"odd numerator {numerator} at k={k}, l={ell}"
    return numerator // 2


def catalan(s: int) -> int:
    if s < 0:
        raise DomainError(f"index must be >= 0, got {s}")
    return math.comb(2 * s, s) // (s + 1)


def _check_mk(m: int, k: int) -> None:
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    check_k(k)


def card_V_cell(h: int, s: int, k: int) -> int:
    """|M_{h,s}^(k)|; Python's 0**0 == 1 gives the single (T, B) matrix at h=2."""
    return (r_count(k, s - 2 * k) - 2) ** (h - 2)


def card_V_matrices(m: int, n: int, k: int) -> int:
    _check_mk(m, k)
    return sum(card_V_cell(h, s, k) for h in range(2, m + 1) for s in range(2 * k + 3, n + 1))


def card_V_bounds(m: int, n: int, k: int) -> BoundPair:
    """Lower/upper sums with bases (f_{s-1} - 5)/2 and (f_{s-1} - 3)/2,
    f being the (k-1)-bonacci sequence."""
    _check_mk(m, k)
    lower = upper = Fraction(0)
    for s in range(3, n - 2 * k + 1):
        f = kbonacci(k - 1, s - 1)
        lo_base, up_base = Fraction(f - 5, 2), Fraction(f - 3, 2)
        for h in range(2, m + 1):
            lower += lo_base ** (h - 2)
            upper += up_base ** (h - 2)
    return BoundPair(lower, upper)


def card_D_cell(h: int, s: int, mode: str = CORRECTED) -> int:
    """Count for h rows and 2s columns under either formula."""
    base = catalan(s - 1) - 2
    if mode == PUBLISHED:
        return base**h
    if mode == CORRECTED:
        return base ** (h - 2) if s >= 3 else 0
    raise DomainError(f"unknown mode {mode!r}")


def card_D_matrices(m: int, n: int, mode: str = CORRECTED) -> int:
    """Size of D_{m,n}.

    ``published`` evaluates the printed sum (exponent h, s from 2), which
    disagrees with enumeration; ``corrected`` uses exponent h-2 and s from 3.
    """
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if mode not in (PUBLISHED, CORRECTED):
        raise DomainError(f"unknown mode {mode!r}")
    first = 2 if mode == PUBLISHED else 3
    return sum(card_D_cell(h, s, mode) for h in range(2, m + 1) for s in range(first, n // 2 + 1))
