"""ASCII and PBM (P1) rendering of grids."""

from __future__ import annotations

from xorca.grid import Grid, check_dimensions


class PBMError(ValueError):
    pass


def to_ascii(grid: Grid, on: str = "#", off: str = ".") -> str:
    lines = []
    for r in range(grid.rows):
        lane = grid.row(r)
        lines.append("".join(on if lane >> c & 1 else off for c in range(grid.cols)))
    return "\n".join(lines) + "\n"


def to_pbm(grid: Grid) -> str:
    """Plain PBM: ``P1``, ``<width> <height>``, then one raster row per line."""
    out = ["P1", f"{grid.cols} {grid.rows}"]
    for r in range(grid.rows):
        lane = grid.row(r)
        out.append(" ".join("1" if lane >> c & 1 else "0" for c in range(grid.cols)))
    return "\n".join(out) + "\n"


def parse_pbm(text: str) -> Grid:
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if not tokens or tokens[0] != "P1":
        raise PBMError("not a plain PBM (P1) image")
    try:
        width, height = int(tokens[1]), int(tokens[2])
    except (IndexError, ValueError):
        raise PBMError("missing or bad PBM dimensions") from None
    check_dimensions(height, width)
    # P1 rasters may also be written without separators between pixels
    pixels = "".join(tokens[3:])
    if len(pixels) != width * height or set(pixels) - {"0", "1"}:
        raise PBMError(f"expected {width * height} 0/1 pixels, got {len(pixels)}")
    bits = 0
    for i, ch in enumerate(pixels):
        if ch == "1":
            bits |= 1 << i
    return Grid(height, width, bits)
