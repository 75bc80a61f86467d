"""ASCII pictures of the region between the two bounding paths."""

from typing import List, Optional, Set, Tuple

from services.lattice.domain.entities import EAST, PathPresentation, PathWord
from services.lattice.domain.squares import square_at

UPPER = "#"
LOWER = "*"
BOTH = "@"
EMPTY = "."
CORNER = "+"

Point = Tuple[int, int]


def _points(word: PathWord) -> List[Point]:
    x = y = 0
    points = [(0, 0)]
    for step in word.steps:
        if step == EAST:
            x += 1
        else:
            y += 1
        points.append((x, y))
    return points


def square_corners(pres: PathPresentation, position: int) -> Set[Point]:
    k = square_at(pres, position)
    right = pres.lower.prefix(position).m
    bottom = pres.lower.prefix(position).r
    return {
        (right - k, bottom),
        (right, bottom),
        (right - k, bottom + k),
        (right, bottom + k),
    }


def render(pres: PathPresentation, square: Optional[int] = None) -> str:
    """Grid of lattice points, top row first.

    ``#`` upper path, ``*`` lower path, ``@`` both, ``+`` corners of the square
    at prefix position ``square``.
    """
    upper = set(_points(pres.upper))
    lower = set(_points(pres.lower))
    corners = square_corners(pres, square) if square is not None else set()
    rows = []
    for y in range(pres.r, -1, -1):
        cells = []
        for x in range(pres.m + 1):
            point = (x, y)
            if point in corners:
                cells.append(CORNER)
            elif point in upper and point in lower:
                cells.append(BOTH)
            elif point in upper:
                cells.append(UPPER)
            elif point in lower:
                cells.append(LOWER)
            else:
                cells.append(EMPTY)
        rows.append(" ".join(cells))
    return "\n".join(rows) + "\n"
