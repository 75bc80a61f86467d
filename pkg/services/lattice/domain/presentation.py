"""Lattice path presentations: parsing, independence, rank, bases, duality, sums."""

import logging
import re
from typing import Iterable, List, Optional, Set, Tuple

import networkx as nx

from services.lattice.domain.entities import (
    EAST,
    NORTH,
    ExplicitMatroid,
    IntervalSystem,
    PathPresentation,
    PathWord,
)
from services.lattice.domain.errors import (
    PreconditionError,
    PresentationFormatError,
    SizeLimitError,
)
from shared.config import get_search_settings

logger = logging.getLogger(__name__)

_KEYED_LINE = re.compile(r"^\s*(P|Q|offset)\s*=\s*(.*?)\s*$", re.IGNORECASE)


def parse_presentation(text: str) -> PathPresentation:
    """Parse a presentation.

    Accepted forms: the canonical ``P=<word>`` / ``Q=<word>`` lines with an
    optional ``offset=<int>`` line, two bare lines (lower first), or a single
    ``lower/upper`` string.
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    offset = 1
    lower: Optional[str] = None
    upper: Optional[str] = None

    if len(lines) == 1 and "/" in lines[0]:
        parts = [part.strip() for part in lines[0].split("/")]
        if len(parts) != 2:
            raise PresentationFormatError("expected exactly one '/' between the two words")
        lower, upper = parts
    elif lines and all(_KEYED_LINE.match(line) for line in lines):
        for line in lines:
            key, value = _KEYED_LINE.match(line).groups()
            key = key.lower()
            if key == "p":
                lower = value
            elif key == "q":
                upper = value
            else:
                try:
                    offset = int(value)
                except ValueError:
                    raise PresentationFormatError(f"offset must be an integer, got {value!r}")
    elif len(lines) == 2:
        lower, upper = lines
    else:
        raise PresentationFormatError("expected two words over {E, N}")

    if lower is None or upper is None:
        raise PresentationFormatError("both P (lower) and Q (upper) words are required")
    return PathPresentation(PathWord(lower), PathWord(upper), offset)


def format_presentation(pres: PathPresentation) -> str:
    """Canonical text form."""
    text = f"P={pres.lower.steps}\nQ={pres.upper.steps}\n"
    if pres.label_offset != 1:
        text += f"offset={pres.label_offset}\n"
    return text


def word_of_subset(pres: PathPresentation, labels: Iterable[int]) -> PathWord:
    """The word P(X): N at the positions of X, E elsewhere."""
    chosen = pres.check_labels(labels)
    return PathWord(
        "".join(NORTH if label in chosen else EAST for label in pres.ground_set)
    )


def _is_sandwiched(pres: PathPresentation, word: PathWord) -> bool:
    lower = pres.lower.north_counts()
    upper = pres.upper.north_counts()
    return all(
        low <= mid <= high for low, mid, high in zip(lower, word.north_counts(), upper)
    )


def is_basis(pres: PathPresentation, labels: Iterable[int]) -> bool:
    chosen = pres.check_labels(labels)
    if len(chosen) != pres.r:
        return False
    return _is_sandwiched(pres, word_of_subset(pres, chosen))


def intervals(pres: PathPresentation) -> IntervalSystem:
    offset = pres.label_offset - 1
    lows = [offset + i for i in pres.upper.north_positions()]
    highs = [offset + i for i in pres.lower.north_positions()]
    return IntervalSystem(tuple(zip(lows, highs)))


def _matching_size(pres: PathPresentation, chosen: Set[int]) -> int:
    if not chosen or pres.r == 0:
        return 0
    graph = nx.Graph()
    elements = [("x", label) for label in sorted(chosen)]
    graph.add_nodes_from(elements, bipartite=0)
    graph.add_nodes_from((("N", i) for i in range(pres.r)), bipartite=1)
    system = intervals(pres)
    for label in chosen:
        graph.add_edges_from((("x", label), ("N", i)) for i in system.containing(label))
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=elements)
    return sum(1 for node in matching if node[0] == "x")


def rank_of(pres: PathPresentation, labels: Iterable[int]) -> int:
    """Size of a maximum partial transversal inside X."""
    return _matching_size(pres, set(pres.check_labels(labels)))


def is_independent(pres: PathPresentation, labels: Iterable[int]) -> bool:
    """Partial-transversal test by bipartite matching."""
    chosen = pres.check_labels(labels)
    return _matching_size(pres, set(chosen)) == len(chosen)


def is_independent_by_paths(pres: PathPresentation, labels: Iterable[int]) -> bool:
    """Independence as "P(I) is part of a path between the bounding paths".

    Tracks the set of reachable heights of a path that takes an N step at every
    element of I and stays inside the region.
    """
    chosen = pres.check_labels(labels)
    if len(chosen) > pres.r:
        return False
    lower = pres.lower.north_counts()
    upper = pres.upper.north_counts()
    heights = {0}
    for index, label in enumerate(pres.ground_set):
        moves = (1,) if label in chosen else (0, 1)
        heights = {
            h + move
            for h in heights
            for move in moves
            if lower[index] <= h + move <= upper[index]
        }
        if not heights:
            return False
    return pres.r in heights


def _feasible_heights(pres: PathPresentation) -> List[Set[int]]:
    """feasible[t] = heights after t steps from which the end point is reachable."""
    lower = [0] + pres.lower.north_counts()
    upper = [0] + pres.upper.north_counts()
    n = pres.size
    feasible: List[Set[int]] = [set() for _ in range(n + 1)]
    feasible[n] = {pres.r}
    for t in range(n - 1, -1, -1):
        feasible[t] = {
            h
            for h in range(lower[t], upper[t] + 1)
            if h in feasible[t + 1] or h + 1 in feasible[t + 1]
        }
    return feasible


def count_bases(pres: PathPresentation) -> int:
    """Number of lattice paths inside the region, by a prefix-position DP."""
    lower = pres.lower.north_counts()
    upper = pres.upper.north_counts()
    ways = {0: 1}
    for index in range(pres.size):
        step: dict = {}
        for h, count in ways.items():
            for nxt in (h, h + 1):
                if lower[index] <= nxt <= upper[index]:
                    step[nxt] = step.get(nxt, 0) + count
        ways = step
    return ways.get(pres.r, 0)


def enumerate_bases(pres: PathPresentation, cap: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Bases in lexicographic order, at most ``cap`` of them (all when ``cap`` is None)."""
    if cap is not None and cap < 0:
        raise PreconditionError(f"cap must be non-negative, got {cap}")
    feasible = _feasible_heights(pres)
    labels = list(pres.ground_set)
    found: List[Tuple[int, ...]] = []
    chosen: List[int] = []

    def walk(t: int, h: int) -> None:
        if cap is not None and len(found) >= cap:
            return
        if t == pres.size:
            found.append(tuple(chosen))
            return
        # N first: including the smaller label gives the lexicographically smaller set
        if h + 1 in feasible[t + 1]:
            chosen.append(labels[t])
            walk(t + 1, h + 1)
            chosen.pop()
        if h in feasible[t + 1]:
            walk(t + 1, h)

    if 0 in feasible[0]:
        walk(0, 0)
    return found


def dual(pres: PathPresentation) -> PathPresentation:
    """Swap E and N in both words and exchange lower and upper."""
    return PathPresentation(pres.upper.swapped(), pres.lower.swapped(), pres.label_offset)


def direct_sum(a: PathPresentation, b: PathPresentation) -> PathPresentation:
    return PathPresentation(a.lower + b.lower, a.upper + b.upper, a.label_offset)


def to_explicit(pres: PathPresentation, limit: Optional[int] = None) -> ExplicitMatroid:
    """Explicit matroid on [n]; labels are shifted to start at 1."""
    limit = get_search_settings().BRUTE_FORCE_LIMIT if limit is None else limit
    if pres.size > limit:
        raise SizeLimitError("to_explicit", pres.size, limit)
    shift = pres.label_offset - 1
    logger.debug(f"Expanding {pres} into an explicit basis family")
    bases = [tuple(x - shift for x in basis) for basis in enumerate_bases(pres)]
    return ExplicitMatroid(pres.size, tuple(bases))


def uniform_presentation(r: int, n: int) -> PathPresentation:
    """E^{n-r} N^r / N^r E^{n-r}, the presentation of U_{r,n}."""
    if not 0 <= r <= n:
        raise PreconditionError(f"need 0 <= r <= n, got r={r}, n={n}")
    return PathPresentation.from_words(EAST * (n - r) + NORTH * r, NORTH * r + EAST * (n - r))


def is_uniform_presentation(pres: PathPresentation) -> bool:
    return pres.key == uniform_presentation(pres.r, pres.size).key


def is_nested(pres: PathPresentation) -> bool:
    """Lower word of the form E^m N^r."""
    return pres.lower.steps == EAST * pres.m + NORTH * pres.r


def add_coloop(pres: PathPresentation) -> PathPresentation:
    return pres.with_words(pres.lower.steps + NORTH, pres.upper.steps + NORTH)


def add_loop(pres: PathPresentation) -> PathPresentation:
    return pres.with_words(pres.lower.steps + EAST, pres.upper.steps + EAST)
