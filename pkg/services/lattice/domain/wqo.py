"""Finite minor posets over presentations: the loop/coloop base case, chains
and anti-chains, and the evidence table built from random samples.
"""

import logging
import random
from typing import Callable, List, Optional, Sequence, TypeVar

import networkx as nx

from services.lattice.domain.entities import (
    ElementClass,
    EvidenceRow,
    ExplicitMatroid,
    LoopColoopCode,
    MinorPoset,
    PathPresentation,
)
from services.lattice.domain.errors import (
    InconsistentOrderError,
    PreconditionError,
    SizeLimitError,
)
from services.lattice.domain.minors import classify_element, is_presentation_minor
from services.lattice.domain.oracle import is_minor_oracle
from services.lattice.domain.sampling import random_presentation
from services.lattice.domain.squares import square_width
from shared.config import get_search_settings
from shared.logging import log_duration

logger = logging.getLogger(__name__)

T = TypeVar("T")


def loops_coloops_code(pres: PathPresentation) -> LoopColoopCode:
    if square_width(pres) != 0:
        raise PreconditionError(f"{pres} has square-width {square_width(pres)}, expected 0")
    classes = [classify_element(pres, label) for label in pres.ground_set]
    return LoopColoopCode(
        loops=classes.count(ElementClass.LOOP),
        coloops=classes.count(ElementClass.ISTHMUS),
    )


def base_case_order(a: LoopColoopCode, b: LoopColoopCode) -> bool:
    return a.loops <= b.loops and a.coloops <= b.coloops


def subword_order(a: PathPresentation, b: PathPresentation) -> bool:
    """Presentation-minor order between square-width-0 presentations.

    Every element is a loop or a coloop and each removal drops one letter,
    so the order is "a's word is a subsequence of b's word".
    """
    for pres in (a, b):
        if square_width(pres) != 0:
            raise PreconditionError(f"{pres} has square-width {square_width(pres)}, expected 0")
    letters = iter(b.lower.steps)
    return all(step in letters for step in a.lower.steps)


def _assemble(
    items: Sequence[T],
    sizes: Sequence[int],
    le: Callable[[T, T], bool],
) -> MinorPoset:
    count = len(items)
    relation = [[False] * count for _ in range(count)]
    for i in range(count):
        for j in range(count):
            relation[i][j] = i == j or le(items[i], items[j])

    for i in range(count):
        for j in range(count):
            if relation[i][j] and sizes[i] > sizes[j]:
                raise InconsistentOrderError(f"item {i} <= item {j} but it is larger")
            if not relation[i][j]:
                continue
            for k in range(count):
                if relation[j][k] and not relation[i][k]:
                    raise InconsistentOrderError(
                        f"item {i} <= item {j} <= item {k} but not item {i} <= item {k}"
                    )
    return MinorPoset(tuple(items), tuple(tuple(row) for row in relation))


def _check_items(count: int, limit: Optional[int]) -> None:
    limit = get_search_settings().POSET_ITEM_LIMIT if limit is None else limit
    if count > limit:
        raise SizeLimitError("poset", count, limit)


def build_poset(items: Sequence[PathPresentation], limit: Optional[int] = None) -> MinorPoset:
    """Pairwise presentation-minor relation; fails if it is not a consistent order."""
    _check_items(len(items), limit)
    with log_duration(logger, f"presentation poset on {len(items)} items"):
        return _assemble(
            items,
            [pres.size for pres in items],
            lambda small, large: is_presentation_minor(small, large) is not None,
        )


def build_oracle_poset(
    matroids: Sequence[ExplicitMatroid], limit: Optional[int] = None
) -> MinorPoset:
    """Pairwise matroid-minor relation between explicit matroids."""
    _check_items(len(matroids), limit)
    with log_duration(logger, f"oracle poset on {len(matroids)} items"):
        return _assemble(
            matroids,
            [matroid.ground_size for matroid in matroids],
            lambda small, large: is_minor_oracle(small, large) is not None,
        )


def max_antichain(poset: MinorPoset, limit: Optional[int] = None) -> List[int]:
    """Largest set of pairwise incomparable items, as a maximum clique of the
    incomparability graph.
    """
    limit = get_search_settings().ANTICHAIN_LIMIT if limit is None else limit
    if len(poset) > limit:
        raise SizeLimitError("max_antichain", len(poset), limit)
    if len(poset) == 0:
        return []
    graph = nx.Graph()
    graph.add_nodes_from(range(len(poset)))
    graph.add_edges_from(
        (i, j)
        for i in range(len(poset))
        for j in range(i + 1, len(poset))
        if not poset.comparable(i, j)
    )
    clique, _ = nx.max_weight_clique(graph, weight=None)
    return sorted(clique)


def longest_chain(poset: MinorPoset) -> List[int]:
    """Longest chain, as a longest path of the order's DAG.

    Equivalent items (each below the other) are ordered by index.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(poset)))
    for i in range(len(poset)):
        for j in range(len(poset)):
            if i != j and poset.le(i, j) and (not poset.le(j, i) or i < j):
                graph.add_edge(i, j)
    order = list(nx.lexicographical_topological_sort(graph))
    return nx.dag_longest_path(graph, topo_order=order)


def random_sample(
    rng: random.Random,
    count: int,
    max_size: int,
    max_square_width: Optional[int] = None,
) -> List[PathPresentation]:
    if max_size < 1:
        raise PreconditionError(f"max_size must be at least 1, got {max_size}")
    return [
        random_presentation(rng, rng.randint(1, max_size), max_square_width)
        for _ in range(count)
    ]


def evidence_row(sample_id: int, sample: Sequence[PathPresentation]) -> EvidenceRow:
    poset = build_poset(sample)
    return EvidenceRow(
        sample_id=sample_id,
        size=len(sample),
        square_width=max((square_width(pres) for pres in sample), default=0),
        max_antichain=len(max_antichain(poset)),
        longest_chain=len(longest_chain(poset)),
    )


def evidence_report(samples: Sequence[Sequence[PathPresentation]]) -> List[EvidenceRow]:
    """One row per sample: size, square-width, largest anti-chain, longest chain.

    Finite evidence only; nothing here bounds anti-chains in general.
    """
    rows = [evidence_row(sample_id, sample) for sample_id, sample in enumerate(samples, start=1)]
    logger.info(f"evidence report over {len(rows)} samples")
    return rows
