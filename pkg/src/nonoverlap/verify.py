"""Brute-force oracles: pairwise set verification, count reconciliation and
non-expandability witnesses."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from nonoverlap import counting
from nonoverlap.bitstrings import (
    DomainError,
    canonical_T,
    check_k,
    gen_V_family,
    is_bifix_free,
    overlap_length,
)
from nonoverlap.matrices import (
    BinaryMatrix,
    OverlapMode,
    OverlapReport,
    scan_offsets,
    build_D_matrix_family,
    build_V_matrix_family,
    is_containment,
    matrix_overlap,
    overlap_report,
    placement_matches,
)

MAX_ORACLE_LENGTH = 24
MAX_FAMILY_SIZE = 20_000


class RefusalError(DomainError):
    """Raised when an exhaustive check would exceed its time guard."""


@dataclass(frozen=True)
class FamilyParams:
    family: str
    m: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self):
        fam = self.family.upper()
        if fam not in ("V", "D"):
            raise DomainError(f"family must be V or D, got {self.family!r}")
        object.__setattr__(self, "family", fam)
        if fam == "V":
            if self.k is None:
                raise DomainError("family V needs k")
            check_k(self.k)
        else:
            object.__setattr__(self, "k", None)

    def to_json(self) -> dict:
        out = {"m": self.m, "n": self.n}
        if self.family == "V":
            out["k"] = self.k
        return out


@dataclass(frozen=True)
class Violation:
    """Elements ``left`` and ``right`` (indices into the checked sequence) overlap.

    The witness is the overlap length for strings, an OverlapReport for matrices.
    """

    left: int
    right: int
    witness: Union[int, OverlapReport]

    def recheck(self, items: Sequence) -> bool:
        u, v = items[self.left], items[self.right]
        if isinstance(self.witness, OverlapReport):
            w = self.witness
            if u == v and w.row_offset == 0 and w.col_offset == 0:
                return False
            return placement_matches(u, v, w.row_offset, w.col_offset)
        ell = self.witness
        if not 1 <= ell < min(len(u), len(v)):
            return False
        return v.endswith(u[:ell]) or u.endswith(v[:ell])

    def to_json(self) -> dict:
        w = self.witness
        return {
            "left": self.left,
            "right": self.right,
            "witness": w.to_json() if isinstance(w, OverlapReport) else {"overlap_length": w},
        }


@dataclass(frozen=True)
class WitnessOutcome:
    candidate: Union[str, BinaryMatrix]
    self_ok: bool
    set_ok: bool

    def __post_init__(self):
        if self.set_ok and not self.self_ok:
            raise ValueError("set_ok without self_ok")


def _as_sequence(items: Iterable) -> list:
    if isinstance(items, (list, tuple)):
        return list(items)
    return sorted(items, key=lambda x: x.sort_key() if isinstance(x, BinaryMatrix) else x)


def verify_string_set(strings: Iterable[str]) -> list[Violation]:
    """All overlapping pairs, self-pairs included, one Violation per unordered pair.

    Each witness is the longest overlap length. Element ids index the input
    sequence; unordered sets are sorted first.
    """
    items = _as_sequence(strings)
    out = []
    for i, j in itertools.combinations_with_replacement(range(len(items)), 2):
        ell = overlap_length(items[i], items[j])
        if ell:
            out.append(Violation(i, j, ell))
    return out


def _check_family_size(n_items: int) -> None:
    if n_items > MAX_FAMILY_SIZE:
        raise RefusalError(f"family of {n_items} matrices exceeds the {MAX_FAMILY_SIZE} limit")


def _pair_violation(items, i, j, mode) -> Optional[Violation]:
    forward = matrix_overlap(items[i], items[j], mode)
    backward = matrix_overlap(items[j], items[i], mode)
    if (forward is None) != (backward is None):
        raise AssertionError(f"overlap predicate asymmetric on elements {i}, {j}")
    return None if forward is None else Violation(i, j, forward)


def _region_keys(bits: np.ndarray, rows: slice, cols: slice, weights: np.ndarray) -> np.ndarray:
    sub = bits[:, rows, cols]
    w = weights[: sub.shape[1], : sub.shape[2]]
    return (sub * w).sum(axis=(1, 2), dtype=np.uint64)


def _ordered_hits(items: list[BinaryMatrix], mode: OverlapMode) -> dict:
    """Map each ordered pair (i, j) that overlaps to its first placement in scan order.

    Matrices are grouped by shape; for every ordered pair of shapes and every
    offset the overlap regions are hashed and joined, and each hash match is
    confirmed cell by cell.
    """
    groups: dict[tuple[int, int], list[int]] = {}
    for idx, mat in enumerate(items):
        groups.setdefault((mat.row_count, mat.col_count), []).append(idx)
    max_h = max((h for h, _ in groups), default=1)
    max_w = max((w for _, w in groups), default=1)
    # random linear hash mod 2^64; equal regions always collide, so candidates are exhaustive
    weights = np.random.default_rng(0).integers(0, 2**63, size=(max_h, max_w), dtype=np.uint64) | np.uint64(1)
    arrays = {
        shape: np.array([[[ch == "1" for ch in row] for row in items[i].rows] for i in idxs], dtype=np.uint64)
        for shape, idxs in groups.items()
    }
    tolerant = mode is OverlapMode.FACTOR_TOLERANT
    hits: dict[tuple[int, int], tuple[int, int, int, int]] = {}
    for (ha, wa), ia in groups.items():
        for (hb, wb), ib in groups.items():
            a_arr, b_arr = arrays[(ha, wa)], arrays[(hb, wb)]
            proto_a, proto_b = items[ia[0]], items[ib[0]]
            for r_rank, r in enumerate(scan_offsets(ha, hb)):
                a_rows = slice(max(r, 0), min(ha, r + hb))
                b_rows = slice(a_rows.start - r, a_rows.stop - r)
                for c_rank, c in enumerate(scan_offsets(wa, wb)):
                    if (ha, wa) == (hb, wb) and r == 0 and c == 0:
                        continue
                    if tolerant and is_containment(proto_a, proto_b, r, c):
                        continue
                    a_cols = slice(max(c, 0), min(wa, c + wb))
                    b_cols = slice(a_cols.start - c, a_cols.stop - c)
                    ka = _region_keys(a_arr, a_rows, a_cols, weights)
                    kb = _region_keys(b_arr, b_rows, b_cols, weights)
                    common = np.intersect1d(ka, kb)
                    if common.size == 0:
                        continue
                    by_key: dict[int, list[int]] = {}
                    for pos in np.nonzero(np.isin(ka, common))[0]:
                        by_key.setdefault(int(ka[pos]), []).append(ia[pos])
                    for pos in np.nonzero(np.isin(kb, common))[0]:
                        j = ib[pos]
                        for i in by_key.get(int(kb[pos]), ()):
                            rank = (r_rank, c_rank, r, c)
                            if (i, j) in hits and hits[(i, j)] <= rank:
                                continue
                            if placement_matches(items[i], items[j], r, c):
                                hits[(i, j)] = rank
    return hits


def verify_matrix_family(matrices: Iterable[BinaryMatrix], mode=OverlapMode.STRICT) -> list[Violation]:
    """Exhaustive overlap check over both orders of every pair plus self-pairs.

    Violations are reported once per unordered pair, sorted by element ids,
    with the same witness ``matrix_overlap`` would return.
    """
    mode = OverlapMode.parse(mode)
    items = _as_sequence(matrices)
    _check_family_size(len(items))
    hits = _ordered_hits(items, mode)
    out = []
    for i, j in sorted({tuple(sorted(p)) for p in hits}):
        if ((i, j) in hits) != ((j, i) in hits):
            raise AssertionError(f"overlap predicate asymmetric on elements {i}, {j}")
        _, _, r, c = hits[(i, j)]
        out.append(Violation(i, j, overlap_report(items[i], items[j], r, c)))
    return out


def brute_r_oracle(ell: int, k: int) -> int:
    """Count length-l strings starting with 0, ending with 1 and free of k-runs
    by testing all 2^l candidates."""
    if ell > MAX_ORACLE_LENGTH:
        raise RefusalError(f"length {ell} exceeds oracle limit {MAX_ORACLE_LENGTH}")
    if ell < 0:
        raise DomainError(f"length must be >= 0, got {ell}")
    if ell == 0:
        return 1
    zeros, ones = "0" * k, "1" * k
    count = 0
    for x in range(2**ell):
        s = format(x, f"0{ell}b")
        if s[0] == "0" and s[-1] == "1" and zeros not in s and ones not in s:
            count += 1
    return count


def string_witness(ell: int) -> str:
    return "1" * ((ell + 1) // 2) + "0" * (ell // 2)


def string_expansion_witnesses(n: int, k: int) -> list[WitnessOutcome]:
    """Check that each 1^ceil(l/2) 0^floor(l/2), 2k <= l <= n, can join V_n^(k)."""
    check_k(k)
    if n < 2 * k:
        raise DomainError(f"n must be >= 2k = {2 * k}, got {n}")
    family = gen_V_family(n, k) if n >= 2 * k + 2 else []
    base_ok = not verify_string_set(family)
    out = []
    for ell in range(2 * k, n + 1):
        w = string_witness(ell)
        self_ok = is_bifix_free(w)
        set_ok = self_ok and base_ok and w not in family and not any(overlap_length(w, u) for u in family)
        out.append(WitnessOutcome(w, self_ok, set_ok))
    return out


def matrix_expansion_witnesses(m: int, n: int, k: int) -> list[WitnessOutcome]:
    """Check that each 2 x s matrix (T^s; 1^ceil(s/2) 0^floor(s/2)) can join V_{m,n}^(k)."""
    check_k(k)
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if n < 2 * k + 3:
        raise DomainError(f"n must be >= 2k+3 = {2 * k + 3}, got {n}")
    family = build_V_matrix_family(m, n, k)
    _check_family_size(len(family) + 1)
    base_ok = not verify_matrix_family(family, OverlapMode.STRICT)
    out = []
    for s in range(2 * k + 3, n + 1):
        w = BinaryMatrix((canonical_T(s, k), string_witness(s)))
        items = family + [w]
        last = len(family)
        self_ok = _pair_violation(items, last, last, OverlapMode.STRICT) is None
        set_ok = (
            self_ok
            and base_ok
            and w not in family
            and all(_pair_violation(items, i, last, OverlapMode.STRICT) is None for i in range(last))
        )
        out.append(WitnessOutcome(w, self_ok, set_ok))
    return out


def reconcile_counts(params: FamilyParams) -> dict:
    """Per (rows, cols) cell: enumerated size next to the closed form(s).

    For family D both the published and the corrected formula are reported;
    ``agree`` tracks the corrected one.
    """
    m, n = params.m, params.n
    if params.family == "V":
        k = params.k
        family = build_V_matrix_family(m, n, k)
        sizes = Counter((x.row_count, x.col_count) for x in family)
        cells = []
        for s in range(2 * k + 3, n + 1):
            for h in range(2, m + 1):
                closed = counting.card_V_cell(h, s, k)
                enumerated = sizes[(h, s)]
                cells.append(
                    {"rows": h, "cols": s, "enumerated": enumerated, "closed_form": closed, "agree": closed == enumerated}
                )
        totals = {"enumerated": len(family), "closed_form": counting.card_V_matrices(m, n, k)}
        agree = all(c["agree"] for c in cells) and totals["enumerated"] == totals["closed_form"]
    else:
        family = build_D_matrix_family(m, n)
        sizes = Counter((x.row_count, x.col_count) for x in family)
        cells = []
        for s in range(2, n // 2 + 1):
            for h in range(2, m + 1):
                enumerated = sizes[(h, 2 * s)]
                published = counting.card_D_cell(h, s, counting.PUBLISHED)
                corrected = counting.card_D_cell(h, s, counting.CORRECTED)
                cells.append(
                    {
                        "rows": h,
                        "cols": 2 * s,
                        "enumerated": enumerated,
                        "published": published,
                        "corrected": corrected,
                        "published_agrees": published == enumerated,
                        "agree": corrected == enumerated,
                    }
                )
        totals = {
            "enumerated": len(family),
            "corrected": counting.card_D_matrices(m, n, counting.CORRECTED),
            "published": counting.card_D_matrices(m, n, counting.PUBLISHED),
        }
        agree = all(c["agree"] for c in cells) and totals["enumerated"] == totals["corrected"]
    return {
        "family": params.family,
        "params": params.to_json(),
        "cells": cells,
        "totals": totals,
        "agree": agree,
    }


def verification_report(family: str, params: dict, violations: list[Violation], cells: list = ()) -> dict:
    return {
        "family": family,
        "params": params,
        "violations": [v.to_json() for v in violations],
        "cells": list(cells),
    }
