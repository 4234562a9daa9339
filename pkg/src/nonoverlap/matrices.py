"""Binary matrices, two-dimensional overlap detection, and the matrix
families built from fixed top/bottom rows."""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Optional

from nonoverlap.bitstrings import (
    DomainError,
    canonical_B,
    canonical_T,
    check_bits,
    check_k,
    gen_V_level,
)
from nonoverlap.dyck import canonical_B_dyck, canonical_T_dyck, gen_dyck


@dataclass(frozen=True, order=True)
class BinaryMatrix:
    rows: tuple[str, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise DomainError("matrix needs at least one row")
        for row in rows:
            check_bits(row, allow_empty=False)
        if len({len(r) for r in rows}) != 1:
            raise DomainError(f"ragged rows: {rows}")

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def col_count(self) -> int:
        return len(self.rows[0])

    @property
    def popcount(self) -> int:
        return sum(r.count("1") for r in self.rows)

    def sort_key(self):
        return (self.col_count, self.row_count, self.rows)

    def to_text(self) -> str:
        return "\n".join(self.rows) + "\n"

    def to_json(self) -> dict:
        return {"rows": list(self.rows)}

    def __str__(self):
        return "\n".join(self.rows)


class OverlapMode(str, enum.Enum):
    STRICT = "strict"
    FACTOR_TOLERANT = "factor_tolerant"

    @classmethod
    def parse(cls, value) -> "OverlapMode":
        if isinstance(value, cls):
            return value
        return cls(str(value).replace("-", "_"))


HORIZONTAL = "horizontal"
VERTICAL = "vertical"
DIAGONAL = "diagonal"
CONTAINMENT = "containment"


@dataclass(frozen=True)
class OverlapReport:
    """A matching placement of the second matrix's top-left cell at
    (row_offset, col_offset) in the first matrix's coordinates."""

    row_offset: int
    col_offset: int
    region_rows: int
    region_cols: int
    kind: str

    def to_json(self) -> dict:
        return {
            "row_offset": self.row_offset,
            "col_offset": self.col_offset,
            "region_rows": self.region_rows,
            "region_cols": self.region_cols,
            "kind": self.kind,
        }


def scan_offsets(n_first: int, n_second: int) -> list[int]:
    # down/right moves from the aligned corner first, then up/left
    return list(range(n_first)) + list(range(-1, -n_second, -1))


def is_containment(a: BinaryMatrix, b: BinaryMatrix, r: int, c: int) -> bool:
    b_in_a = r >= 0 and c >= 0 and r + b.row_count <= a.row_count and c + b.col_count <= a.col_count
    a_in_b = r <= 0 and c <= 0 and r + b.row_count >= a.row_count and c + b.col_count >= a.col_count
    return b_in_a or a_in_b


def classify(a: BinaryMatrix, b: BinaryMatrix, r: int, c: int) -> str:
    if is_containment(a, b, r, c):
        return CONTAINMENT
    if r == 0 and c != 0:
        return HORIZONTAL
    if c == 0 and r != 0:
        return VERTICAL
    # both offsets nonzero, or (0, 0) with the domains crossing
    return DIAGONAL


def placement_matches(a: BinaryMatrix, b: BinaryMatrix, r: int, c: int) -> bool:
    """True iff ``b`` placed at (r, c) over ``a`` agrees on a non-empty intersection."""
    a0, a1 = max(c, 0), min(a.col_count, c + b.col_count)
    i0, i1 = max(0, -r), min(b.row_count, a.row_count - r)
    if a0 >= a1 or i0 >= i1:
        return False
    b0, b1 = a0 - c, a1 - c
    arows, brows = a.rows, b.rows
    for i in range(i0, i1):
        if arows[i + r][a0:a1] != brows[i][b0:b1]:
            return False
    return True


def overlap_report(a: BinaryMatrix, b: BinaryMatrix, r: int, c: int) -> OverlapReport:
    region_rows = min(a.row_count, r + b.row_count) - max(0, r)
    region_cols = min(a.col_count, c + b.col_count) - max(0, c)
    return OverlapReport(r, c, region_rows, region_cols, classify(a, b, r, c))


def matrix_overlap(
    a: BinaryMatrix, b: BinaryMatrix, mode=OverlapMode.STRICT
) -> Optional[OverlapReport]:
    """First matching placement of ``b`` over ``a``, or None.

    Placements are scanned row-major over the full offset rectangle. The
    aligned placement of two equal matrices is skipped; in factor-tolerant
    mode every placement where one domain contains the other is skipped too.
    """
    mode = OverlapMode.parse(mode)
    same = a == b
    tolerant = mode is OverlapMode.FACTOR_TOLERANT
    for r in scan_offsets(a.row_count, b.row_count):
        for c in scan_offsets(a.col_count, b.col_count):
            if same and r == 0 and c == 0:
                continue
            if tolerant and is_containment(a, b, r, c):
                continue
            if placement_matches(a, b, r, c):
                return overlap_report(a, b, r, c)
    return None


def sort_family(matrices: Iterable[BinaryMatrix]) -> list[BinaryMatrix]:
    return sorted(matrices, key=BinaryMatrix.sort_key)


def _framed(h: int, top: str, bottom: str, inner: list[str]) -> list[BinaryMatrix]:
    return [
        BinaryMatrix((top, *middle, bottom))
        for middle in itertools.product(inner, repeat=h - 2)
    ]


def build_M(h: int, s: int, k: int) -> list[BinaryMatrix]:
    """h x s matrices with rows T, A_2..A_{h-1}, B; inner rows from V^s minus {T, B}."""
    check_k(k)
    if h < 2:
        raise DomainError(f"h must be >= 2, got {h}")
    top, bottom = canonical_T(s, k), canonical_B(s, k)
    inner = [w for w in gen_V_level(s, k) if w not in (top, bottom)]
    return _framed(h, top, bottom, inner)


def build_V_matrix_family(m: int, n: int, k: int) -> list[BinaryMatrix]:
    check_k(k)
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    out: list[BinaryMatrix] = []
    for s in range(2 * k + 3, n + 1):
        for h in range(2, m + 1):
            out.extend(build_M(h, s, k))
    return sort_family(out)


def build_D_matrix_family(m: int, n: int) -> list[BinaryMatrix]:
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    out: list[BinaryMatrix] = []
    for s in range(3, n // 2 + 1):
        top, bottom = canonical_T_dyck(2 * s), canonical_B_dyck(2 * s)
        inner = ["1" + w + "0" for w in gen_dyck(s - 1)]
        inner = [w for w in inner if w not in (top, bottom)]
        for h in range(2, m + 1):
            out.extend(_framed(h, top, bottom, inner))
    return sort_family(out)


def format_matrices(matrices: Iterable[BinaryMatrix]) -> str:
    """Text form: rows one per line, matrices separated by a blank line."""
    return "\n".join(mat.to_text() for mat in matrices)


def format_matrices_json(matrices: Iterable[BinaryMatrix]) -> str:
    """Newline-delimited JSON, one {"rows": [...]} object per matrix."""
    return "".join(json.dumps(mat.to_json()) + "\n" for mat in matrices)


def parse_matrices(text: str) -> list[BinaryMatrix]:
    blocks: list[list[str]] = [[]]
    for line in text.splitlines():
        line = line.strip()
        if line:
            blocks[-1].append(line)
        elif blocks[-1]:
            blocks.append([])
    return [BinaryMatrix(tuple(b)) for b in blocks if b]
