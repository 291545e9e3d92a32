"""Null-boundary binary grid, bit-packed row-major into one integer.

Row ``r`` occupies bits ``[r*cols, (r+1)*cols)``; bit ``r*cols + c`` is
cell ``(r, c)``. Python integers carry across machine words on shifts,
so moving the whole grid by a stencil offset is one shift plus a mask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_CELLS = 1 << 26


class InvalidDimensionError(ValueError):
    pass


@lru_cache(maxsize=64)
def masks(rows: int, cols: int) -> tuple[int, int, int, int]:
    """(full, no_first_col, no_last_col, outer_ring) masks for a grid shape."""
    full = (1 << (rows * cols)) - 1
    row_all = (1 << cols) - 1
    first_col = 0
    last_col = 0
    for r in range(rows):
        first_col |= 1 << (r * cols)
        last_col |= 1 << (r * cols + cols - 1)
    ring = row_all | (row_all << ((rows - 1) * cols)) | first_col | last_col
    return full, full & ~first_col, full & ~last_col, ring


@dataclass(frozen=True)
class Grid:
    rows: int
    cols: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> (self.rows * self.cols):
            raise ValueError("bits outside the grid")

    def in_range(self, r: int, c: int) -> bool:
        return 0 <= r < self.rows and 0 <= c < self.cols

    def get(self, r: int, c: int) -> int:
        # out-of-range reads are the null boundary
        if not self.in_range(r, c):
            return 0
        return (self.bits >> (r * self.cols + c)) & 1

    def set(self, r: int, c: int, value: int = 1) -> Grid:
        if not self.in_range(r, c):
            raise IndexError(f"cell ({r}, {c}) outside {self.rows}x{self.cols} grid")
        bit = 1 << (r * self.cols + c)
        bits = self.bits | bit if value else self.bits & ~bit
        return Grid(self.rows, self.cols, bits)

    def row(self, r: int) -> int:
        """Packed lane for row ``r``; bit ``c`` is column ``c``."""
        if not 0 <= r < self.rows:
            raise IndexError(r)
        return (self.bits >> (r * self.cols)) & ((1 << self.cols) - 1)

    def popcount(self) -> int:
        return self.bits.bit_count()

    def touches_boundary(self) -> bool:
        return bool(self.bits & masks(self.rows, self.cols)[3])

    def to_array(self) -> np.ndarray:
        n = self.rows * self.cols
        raw = np.frombuffer(self.bits.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
        flat = np.unpackbits(raw, bitorder="little")[:n]
        return flat.reshape(self.rows, self.cols).astype(bool)

    @classmethod
    def from_array(cls, array) -> Grid:
        a = np.asarray(array, dtype=bool)
        if a.ndim != 2:
            raise InvalidDimensionError("expected a 2-D array")
        rows, cols = a.shape
        check_dimensions(rows, cols)
        packed = np.packbits(a.ravel(), bitorder="little")
        return cls(rows, cols, int.from_bytes(packed.tobytes(), "little"))

    def coords(self) -> frozenset[tuple[int, int]]:
        if not self.bits:
            return frozenset()
        rs, cs = np.nonzero(self.to_array())
        return frozenset(zip(rs.tolist(), cs.tolist()))


@dataclass(frozen=True)
class PatternSnapshot:
    coords: frozenset
    rows: int
    cols: int
    iteration: int
    rule: int
    touched_boundary: bool = False

    def relative_to(self, origin: tuple[int, int]) -> frozenset[tuple[int, int]]:
        r0, c0 = origin
        return frozenset((r - r0, c - c0) for r, c in self.coords)


def check_dimensions(rows: int, cols: int) -> None:
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise InvalidDimensionError(f"grid dimensions must be positive, got {rows}x{cols}")
    if rows * cols > MAX_CELLS:
        raise InvalidDimensionError(f"{rows}x{cols} grid exceeds {MAX_CELLS} cells")


def new_grid(rows: int, cols: int) -> Grid:
    check_dimensions(rows, cols)
    return Grid(rows, cols, 0)


def place_seed(grid: Grid, r: int, c: int) -> Grid:
    return grid.set(r, c, 1)


def snapshot(grid: Grid, iteration: int = 0, rule: int = 0, touched: bool = False) -> PatternSnapshot:
    return PatternSnapshot(
        coords=grid.coords(),
        rows=grid.rows,
        cols=grid.cols,
        iteration=iteration,
        rule=rule,
        touched_boundary=touched,
    )


def grid_from_coords(rows: int, cols: int, coords) -> Grid:
    g = new_grid(rows, cols)
    bits = 0
    for r, c in coords:
        if not g.in_range(r, c):
            raise IndexError(f"cell ({r}, {c}) outside {rows}x{cols} grid")
        bits |= 1 << (r * cols + c)
    return Grid(rows, cols, bits)
