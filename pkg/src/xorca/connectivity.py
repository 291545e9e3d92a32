"""Continuous vs discrete patterns.

A pattern is continuous when every convex-hull vertex can be reached from
every other by stepping between occupied cells, diagonal steps included.
"""

from __future__ import annotations

from enum import Enum

import numpy as np
from scipy import ndimage

from xorca.grid import PatternSnapshot
from xorca.shape import convex_hull

_STRUCTURE = {
    4: ndimage.generate_binary_structure(2, 1),
    8: ndimage.generate_binary_structure(2, 2),
}


class Connectivity(str, Enum):
    CONTINUOUS = "continuous"
    DISCRETE = "discrete"
    EMPTY = "empty"

    def __str__(self) -> str:
        return self.value


def connected_components(coords, adjacency: int = 8) -> tuple[dict[tuple[int, int], int], int]:
    """Label occupied cells with component ids ``0..count-1``.

    Ids are numbered in row-major order of each component's first cell.
    """
    if adjacency not in _STRUCTURE:
        raise ValueError(f"adjacency must be 4 or 8, got {adjacency!r}")
    cells = list(set(map(tuple, coords)))
    if not cells:
        return {}, 0
    rc = np.array(cells)
    lo = rc.min(axis=0)
    shifted = rc - lo
    image = np.zeros(shifted.max(axis=0) + 1, dtype=bool)
    image[shifted[:, 0], shifted[:, 1]] = True
    labeled, count = ndimage.label(image, structure=_STRUCTURE[adjacency])
    ids = labeled[shifted[:, 0], shifted[:, 1]] - 1
    return dict(zip(cells, ids.tolist())), int(count)


def classify_connectivity(snap: PatternSnapshot, hull=None) -> Connectivity:
    if not snap.coords:
        return Connectivity.EMPTY
    labels, count = connected_components(snap.coords, 8)
    if count == 1:
        return Connectivity.CONTINUOUS
    if hull is None:
        hull = convex_hull(snap.coords)
    ids = {labels[v] for v in hull}
    return Connectivity.CONTINUOUS if len(ids) == 1 else Connectivity.DISCRETE
