"""Hypothesis strategies for presentations and witnesses."""

from hypothesis import strategies as st

from services.lattice.domain.entities import EAST, NORTH, PathPresentation
from services.lattice.domain.sampling import envelope


@st.composite
def presentations(draw, min_size: int = 0, max_size: int = 8, rank=None) -> PathPresentation:
    """Any valid presentation: the envelope of two random paths to the same end point."""
    size = draw(st.integers(min_value=min_size, max_value=max_size))
    r = draw(st.integers(min_value=0, max_value=size)) if rank is None else rank
    steps = [EAST] * (size - r) + [NORTH] * r
    first = draw(st.permutations(steps))
    second = draw(st.permutations(steps))
    return envelope("".join(first), "".join(second))


@st.composite
def presentations_with_square(draw, k: int, max_size: int = 14) -> PathPresentation:
    """Presentation containing a k x k square."""
    before = draw(presentations(max_size=max(0, (max_size - 2 * k) // 2)))
    after = draw(presentations(max_size=max(0, (max_size - 2 * k) // 2)))
    inner = draw(presentations(max_size=max(0, max_size - 2 * k - before.size - after.size)))
    lower = before.lower.steps + EAST * k + inner.lower.steps + NORTH * k + after.lower.steps
    upper = before.upper.steps + NORTH * k + inner.upper.steps + EAST * k + after.upper.steps
    return PathPresentation.from_words(lower, upper)
