"""Two-dimensional nine-neighborhood XOR-linear cellular automata.

Bit-parallel evolution of the 512 linear rules on a null-boundary grid,
plus shape (convex hull) and continuity (connected components)
classifiers, a 512-rule census, and exact rule-count formulas.
"""

from xorca.rules import (
    ALL_RULES,
    WEIGHTS,
    InvalidWeightError,
    NeighborOffset,
    group_of,
    rule_offsets,
    weight_to_offset,
)
from xorca.grid import Grid, PatternSnapshot, new_grid, place_seed, snapshot
from xorca.evolve import evolve, kernel, step, step_scalar
from xorca.shape import ShapeClass, classify_shape, convex_hull
from xorca.connectivity import Connectivity, classify_connectivity, connected_components
from xorca.census import CensusConfig, CensusRecord, run_census

__version__ = "0.1.0"

__all__ = [
    "ALL_RULES",
    "WEIGHTS",
    "InvalidWeightError",
    "NeighborOffset",
    "group_of",
    "rule_offsets",
    "weight_to_offset",
    "Grid",
    "PatternSnapshot",
    "new_grid",
    "place_seed",
    "snapshot",
    "evolve",
    "kernel",
    "step",
    "step_scalar",
    "ShapeClass",
    "classify_shape",
    "convex_hull",
    "Connectivity",
    "classify_connectivity",
    "connected_components",
    "CensusConfig",
    "CensusRecord",
    "run_census",
]
