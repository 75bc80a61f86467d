"""Deterministic enumeration and seeded random sampling of presentations."""

import random
from itertools import combinations
from typing import Dict, Iterator, List, Optional

from services.lattice.domain.entities import EAST, NORTH, PathPresentation, PathWord
from services.lattice.domain.errors import PreconditionError


def iter_words(m: int, r: int) -> Iterator[str]:
    """All words with m E steps and r N steps, in lexicographic order."""
    if m < 0 or r < 0:
        raise PreconditionError(f"need m, r >= 0, got m={m}, r={r}")
    n = m + r
    words = (
        "".join(NORTH if i in norths else EAST for i in range(n))
        for norths in map(set, combinations(range(n), r))
    )
    yield from sorted(words)


def _dominated(lower: str, upper: str) -> bool:
    low = high = 0
    for p, q in zip(lower, upper):
        low += p == NORTH
        high += q == NORTH
        if low > high:
            return False
    return True


def iter_presentations(size: int, rank: Optional[int] = None) -> Iterator[PathPresentation]:
    """Every presentation with ``size`` elements, by rank then lower then upper word."""
    if size < 0:
        raise PreconditionError(f"size must be non-negative, got {size}")
    ranks = range(size + 1) if rank is None else [rank]
    for r in ranks:
        words = list(iter_words(size - r, r))
        for lower in words:
            for upper in words:
                if _dominated(lower, upper):
                    yield PathPresentation.from_words(lower, upper)


def envelope(first: str, second: str) -> PathPresentation:
    """Presentation bounded by the pointwise lowest and highest of two paths
    with the same end point.
    """
    if len(first) != len(second) or first.count(NORTH) != second.count(NORTH):
        raise PreconditionError("paths must share their end point")
    a = PathWord(first).north_counts()
    b = PathWord(second).north_counts()
    lower = _word_from_heights([min(x, y) for x, y in zip(a, b)])
    upper = _word_from_heights([max(x, y) for x, y in zip(a, b)])
    return PathPresentation.from_words(lower, upper)


def _word_from_heights(heights: List[int]) -> str:
    steps = []
    previous = 0
    for height in heights:
        steps.append(NORTH if height > previous else EAST)
        previous = height
    return "".join(steps)


def random_word(rng: random.Random, size: int, rank: int) -> str:
    norths = set(rng.sample(range(size), rank))
    return "".join(NORTH if i in norths else EAST for i in range(size))


def random_presentation(
    rng: random.Random,
    size: int,
    max_square_width: Optional[int] = None,
    rank: Optional[int] = None,
) -> PathPresentation:
    """Random upper path, then a lower path drawn uniformly among those below it
    whose gap never exceeds ``max_square_width``.
    """
    if size < 0:
        raise PreconditionError(f"size must be non-negative, got {size}")
    r = rng.randint(0, size) if rank is None else rank
    if not 0 <= r <= size:
        raise PreconditionError(f"rank {r} outside [0, {size}]")
    width = size if max_square_width is None else max_square_width
    if width < 0:
        raise PreconditionError(f"max_square_width must be non-negative, got {width}")

    upper = random_word(rng, size, r)
    ceiling = [0] + PathWord(upper).north_counts()
    floor = [max(0, c - width) for c in ceiling]

    # completions[t][h]: lower paths from height h after t steps to the end point
    completions: List[Dict[int, int]] = [dict() for _ in range(size + 1)]
    completions[size][r] = 1
    for t in range(size - 1, -1, -1):
        for h in range(floor[t], ceiling[t] + 1):
            total = sum(completions[t + 1].get(nxt, 0) for nxt in (h, h + 1))
            if total:
                completions[t][h] = total

    steps = []
    height = 0
    for t in range(size):
        stay = completions[t + 1].get(height, 0)
        climb = completions[t + 1].get(height + 1, 0)
        if rng.randrange(stay + climb) < climb:
            steps.append(NORTH)
            height += 1
        else:
            steps.append(EAST)
    return PathPresentation.from_words("".join(steps), upper)


def random_presentations(
    count: int,
    size: int,
    seed: int = 0,
    max_square_width: Optional[int] = None,
) -> List[PathPresentation]:
    rng = random.Random(seed)
    return [random_presentation(rng, size, max_square_width) for _ in range(count)]
