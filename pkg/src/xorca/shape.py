"""Shape of a pattern as the vertex count of its convex hull.

Hulls are computed over occupied cell centres with integer cross
products only; boundary points collinear with their neighbours are
dropped, so a filled triangle still has three vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from xorca.grid import PatternSnapshot

_NAMES = {
    0: "empty",
    1: "point",
    2: "line",
    3: "triangle",
    4: "quadrilateral",
    5: "pentagon",
    6: "hexagon",
}


class EmptyPatternError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ShapeClass:
    vertices: int

    @property
    def name(self) -> str:
        return _NAMES.get(self.vertices, f"other-{self.vertices}")

    def __str__(self) -> str:
        return self.name

    @classmethod
    def from_name(cls, name: str) -> ShapeClass:
        for v, n in _NAMES.items():
            if n == name:
                return cls(v)
        if name.startswith("other-") and name[6:].isdigit() and int(name[6:]) >= 7:
            return cls(int(name[6:]))
        raise ValueError(f"unknown shape {name!r}")


EMPTY = ShapeClass(0)
POINT = ShapeClass(1)
LINE = ShapeClass(2)
TRIANGLE = ShapeClass(3)
QUADRILATERAL = ShapeClass(4)
PENTAGON = ShapeClass(5)
HEXAGON = ShapeClass(6)


def cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(coords) -> list[tuple[int, int]]:
    """Strictly convex hull, counter-clockwise with (row, col) read as (x, y).

    One point gives one vertex; a collinear set gives its two extremes.
    """
    # only the leftmost and rightmost cell of a row can be a hull vertex
    ends: dict[int, list[int]] = {}
    for r, c in coords:
        e = ends.get(r)
        if e is None:
            ends[r] = [c, c]
        elif c < e[0]:
            e[0] = c
        elif c > e[1]:
            e[1] = c
    if not ends:
        raise EmptyPatternError("cannot take the hull of an empty pattern")
    pts = sorted({(r, c) for r, e in ends.items() for c in e})
    if len(pts) == 1:
        return pts

    def half(points):
        chain: list[tuple[int, int]] = []
        for p in points:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def classify_shape(snap: PatternSnapshot, hull=None) -> ShapeClass:
    if not snap.coords:
        return EMPTY
    if hull is None:
        hull = convex_hull(snap.coords)
    return ShapeClass(len(hull))
