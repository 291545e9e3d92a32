"""Synchronous XOR evolution of a null-boundary grid.

``next(r, c) = XOR of get(r + dr, c + dc)`` over the rule's stencil
offsets, every cell reading the old grid. A dependency on offset
``(dr, dc)`` therefore carries a lone seed by ``(-dr, -dc)`` per step.
"""

from __future__ import annotations

from functools import lru_cache

from xorca.grid import Grid, masks, new_grid, place_seed
from xorca.rules import check_rule, rule_offsets


@lru_cache(maxsize=4096)
def _plan(rule: int, rows: int, cols: int) -> tuple[tuple[int, int], ...]:
    """(shift, mask) per offset; positive shift moves bits toward bit 0."""
    full, no_first, no_last, _ = masks(rows, cols)
    plan = []
    for dr, dc in rule_offsets(rule):
        # reading column c+1 is invalid in the last column, c-1 in the first
        mask = no_last if dc > 0 else no_first if dc < 0 else full
        plan.append((dr * cols + dc, mask))
    return tuple(plan)


def _step_bits(bits: int, plan) -> int:
    acc = 0
    for shift, mask in plan:
        acc ^= (bits >> shift if shift >= 0 else bits << -shift) & mask
    return acc


def step(grid: Grid, rule: int) -> Grid:
    check_rule(rule)
    return Grid(grid.rows, grid.cols, _step_bits(grid.bits, _plan(rule, grid.rows, grid.cols)))


def step_scalar(grid: Grid, rule: int) -> Grid:
    """Cell-by-cell reference implementation of :func:`step`."""
    offsets = rule_offsets(rule)
    bits = 0
    for r in range(grid.rows):
        for c in range(grid.cols):
            v = 0
            for dr, dc in offsets:
                v ^= grid.get(r + dr, c + dc)
            if v:
                bits |= 1 << (r * grid.cols + c)
    return Grid(grid.rows, grid.cols, bits)


def evolve(grid: Grid, rule: int, n: int) -> tuple[Grid, bool]:
    """Apply ``n`` steps; also report whether any state, initial included,
    had a live cell on the outer ring."""
    check_rule(rule)
    if n < 0:
        raise ValueError(f"iteration count must be non-negative, got {n}")
    plan = _plan(rule, grid.rows, grid.cols)
    ring = masks(grid.rows, grid.cols)[3]
    bits = grid.bits
    touched = bool(bits & ring)
    for _ in range(n):
        bits = _step_bits(bits, plan)
        if bits & ring:
            touched = True
        elif not bits:
            break
    return Grid(grid.rows, grid.cols, bits), touched


def kernel(rule: int, n: int) -> frozenset[tuple[int, int]]:
    """Seed-relative pattern after ``n`` steps with no boundary in reach.

    By linearity and shift invariance, evolving any interior state equals
    its GF(2) convolution with this stencil.
    """
    if n < 0:
        raise ValueError(f"iteration count must be non-negative, got {n}")
    size = 2 * n + 3
    seed = place_seed(new_grid(size, size), n + 1, n + 1)
    out, touched = evolve(seed, rule, n)
    assert not touched, "kernel grid reached its boundary"
    return frozenset((r - n - 1, c - n - 1) for r, c in out.coords())
