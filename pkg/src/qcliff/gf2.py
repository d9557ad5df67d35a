"""Dense GF(2) matrices stored as per-row bitmasks.

Row ``i`` is a python int whose bit ``j`` is the entry ``(i, j)``.  That
keeps elimination down to word operations, which matters in the solver's
sign-assignment sweep where thousands of small matrices are reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Gf2Matrix:
    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.bits) != self.rows:
            raise ValueError(f"expected {self.rows} row masks, got {len(self.bits)}")
        full = (1 << self.cols) - 1
        if any(r & ~full for r in self.bits):
            raise ValueError("row mask has bits beyond the column count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        masks = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            masks.append(sum((1 & int(v)) << j for j, v in enumerate(r)))
        return cls(nrows, ncols, tuple(masks))

    @classmethod
    def from_row_masks(cls, masks: Iterable[int], cols: int) -> "Gf2Matrix":
        masks = tuple(masks)
        return cls(len(masks), cols, masks)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ValueError(f"index ({i}, {j}) out of range for {self.rows}x{self.cols}")
        return (self.bits[i] >> j) & 1

    def row_mask(self, i: int) -> int:
        if not 0 <= i < self.rows:
            raise ValueError(f"row {i} out of range")
        return self.bits[i]

    def to_rows(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.bits]

    def transpose(self) -> "Gf2Matrix":
        cols = []
        for j in range(self.cols):
            mask = 0
            for i, r in enumerate(self.bits):
                mask |= ((r >> j) & 1) << i
            cols.append(mask)
        return Gf2Matrix(self.cols, self.rows, tuple(cols))

    def mul_vector(self, v: int) -> int:
        """Matrix times column vector, both over GF(2); vectors are bitmasks."""
        out = 0
        for i, r in enumerate(self.bits):
            out |= ((r & v).bit_count() & 1) << i
        return out

    def rank(self) -> int:
        rows = [r for r in self.bits if r]
        rank = 0
        while rows:
            pivot = rows.pop()
            rank += 1
            low = pivot & -pivot
            rows = [r ^ pivot if r & low else r for r in rows]
            rows = [r for r in rows if r]
        return rank

    def nullity(self) -> int:
        return self.cols - self.rank()

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Gf2Matrix":
        """Gauss-Jordan inverse; raises ``ValueError`` if singular."""
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        work = list(self.bits)
        aug = [1 << i for i in range(n)]
        for col in range(n):
            pivot = next(
                (r for r in range(col, n) if (work[r] >> col) & 1),
                None,
            )
            if pivot is None:
                raise ValueError("matrix is singular over GF(2)")
            work[col], work[pivot] = work[pivot], work[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
            for r in range(n):
                if r != col and (work[r] >> col) & 1:
                    work[r] ^= work[col]
                    aug[r] ^= aug[col]
        return Gf2Matrix(n, n, tuple(aug))

    def solve(self, v: int) -> int:
        """One solution ``x`` of ``self @ x = v``; raises if inconsistent."""
        if self.rows != self.cols:
            raise ValueError("solve is implemented for square systems")
        return self.inverse().mul_vector(v)

    def __str__(self) -> str:
        return "\n".join(
            "".join(str((r >> j) & 1) for j in range(self.cols)) for r in self.bits
        )
