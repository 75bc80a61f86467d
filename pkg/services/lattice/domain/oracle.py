"""Brute-force matroids given by their basis families.

Everything here is exhaustive and guarded by the limits in
``SearchSettings``; it serves as the independent check for the
presentation-level operations.
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from services.lattice.domain.entities import (
    ExplicitMatroid,
    OracleMinorCertificate,
    PathPresentation,
)
from services.lattice.domain.errors import PreconditionError, SizeLimitError
from services.lattice.domain.presentation import count_bases, to_explicit
from services.lattice.domain.sampling import iter_presentations
from shared.config import get_search_settings
from shared.logging import log_duration

logger = logging.getLogger(__name__)


def make_matroid(
    ground_size: int, bases: Iterable[Iterable[int]], validate: bool = True
) -> ExplicitMatroid:
    """Build an explicit matroid, validating basis exchange on small families."""
    matroid = ExplicitMatroid.from_bases(ground_size, bases)
    if validate and len(matroid.bases) <= get_search_settings().EXCHANGE_CHECK_LIMIT:
        if not matroid.satisfies_basis_exchange():
            raise PreconditionError("basis family violates the exchange axiom")
    return matroid


def _relabel_without(basis: Iterable[int], x: int) -> Tuple[int, ...]:
    return tuple(y - 1 if y > x else y for y in basis if y != x)


def _check_element(matroid: ExplicitMatroid, x: int) -> None:
    matroid.mask_of([x])


def uniform(r: int, n: int) -> ExplicitMatroid:
    if not 0 <= r <= n:
        raise PreconditionError(f"need 0 <= r <= n, got r={r}, n={n}")
    return make_matroid(n, combinations(range(1, n + 1), r))


def truncate(matroid: ExplicitMatroid, n: int) -> ExplicitMatroid:
    """Independent sets of size n become the bases."""
    if not 1 <= n <= matroid.rank:
        raise PreconditionError(f"truncation rank {n} outside [1, {matroid.rank}]")
    bases = {subset for basis in matroid.bases for subset in combinations(basis, n)}
    return make_matroid(matroid.ground_size, bases)


def oracle_delete(matroid: ExplicitMatroid, x: int, validate: bool = True) -> ExplicitMatroid:
    _check_element(matroid, x)
    if x in matroid.coloops():
        kept = matroid.bases
    else:
        kept = [basis for basis in matroid.bases if x not in basis]
    return make_matroid(matroid.ground_size - 1, (_relabel_without(b, x) for b in kept), validate)


def oracle_contract(matroid: ExplicitMatroid, x: int, validate: bool = True) -> ExplicitMatroid:
    _check_element(matroid, x)
    if x in matroid.loops():
        return oracle_delete(matroid, x, validate)
    kept = [basis for basis in matroid.bases if x in basis]
    return make_matroid(matroid.ground_size - 1, (_relabel_without(b, x) for b in kept), validate)


def oracle_dual(matroid: ExplicitMatroid) -> ExplicitMatroid:
    ground = set(matroid.ground_set)
    return make_matroid(matroid.ground_size, (ground - set(b) for b in matroid.bases))


def oracle_direct_sum(first: ExplicitMatroid, second: ExplicitMatroid) -> ExplicitMatroid:
    shift = first.ground_size
    return make_matroid(
        first.ground_size + second.ground_size,
        (a + tuple(y + shift for y in b) for a in first.bases for b in second.bases),
    )


def cycle_matroid(graph: nx.Graph) -> ExplicitMatroid:
    """Cycle matroid of a connected graph; edges are labelled in sorted order."""
    if not nx.is_connected(graph):
        raise PreconditionError("cycle matroid needs a connected graph")
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges)
    label = {edge: i for i, edge in enumerate(edges, start=1)}
    bases = [
        [label[tuple(sorted(edge))] for edge in tree.edges]
        for tree in nx.SpanningTreeIterator(graph)
    ]
    return make_matroid(len(edges), bases)


def _incidence_graph(matroid: ExplicitMatroid) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from((("e", x) for x in matroid.ground_set), kind="element")
    for index, basis in enumerate(matroid.bases):
        graph.add_node(("b", index), kind="basis")
        graph.add_edges_from((("e", x), ("b", index)) for x in basis)
    return graph


def is_isomorphic(
    first: ExplicitMatroid,
    second: ExplicitMatroid,
    limit: Optional[int] = None,
) -> Optional[Dict[int, int]]:
    """Bijection of ground sets carrying bases onto bases, or None.

    Matches the element/basis incidence graphs, keeping elements on elements.
    """
    limit = get_search_settings().ISOMORPHISM_LIMIT if limit is None else limit
    size = max(first.ground_size, second.ground_size)
    if size > limit:
        raise SizeLimitError("is_isomorphic", size, limit)
    if (
        first.ground_size != second.ground_size
        or first.rank != second.rank
        or len(first.bases) != len(second.bases)
    ):
        return None
    if first.bases == second.bases:
        return {x: x for x in first.ground_set}
    if sorted(first.element_degrees().values()) != sorted(second.element_degrees().values()):
        return None

    matcher = GraphMatcher(
        _incidence_graph(first),
        _incidence_graph(second),
        node_match=lambda a, b: a["kind"] == b["kind"],
    )
    for mapping in matcher.isomorphisms_iter():
        return {node[1]: image[1] for node, image in mapping.items() if node[0] == "e"}
    return None


def _minor_by_removal(
    large: ExplicitMatroid, deleted: Tuple[int, ...], contracted: Tuple[int, ...]
) -> ExplicitMatroid:
    contracted_set = set(contracted)
    minor = large
    # descending labels keep the smaller labels valid after each removal
    for x in sorted(deleted + contracted, reverse=True):
        if x in contracted_set:
            minor = oracle_contract(minor, x, validate=False)
        else:
            minor = oracle_delete(minor, x, validate=False)
    return minor


def is_minor_oracle(
    small: ExplicitMatroid,
    large: ExplicitMatroid,
    limit: Optional[int] = None,
) -> Optional[OracleMinorCertificate]:
    """Search every (delete, contract) split of every removed set."""
    limit = get_search_settings().MINOR_ORACLE_LIMIT if limit is None else limit
    if large.ground_size > limit:
        raise SizeLimitError("is_minor_oracle", large.ground_size, limit)
    removed_count = large.ground_size - small.ground_size
    contract_count = large.rank - small.rank
    if removed_count < 0 or not 0 <= contract_count <= removed_count:
        return None

    with log_duration(logger, f"oracle minor search on {large.ground_size} elements"):
        for removed in combinations(large.ground_set, removed_count):
            remaining = [x for x in large.ground_set if x not in removed]
            for contracted in combinations(removed, contract_count):
                deleted = tuple(x for x in removed if x not in contracted)
                minor = _minor_by_removal(large, deleted, contracted)
                if len(minor.bases) != len(small.bases):
                    continue
                mapping = is_isomorphic(minor, small, limit=limit)
                if mapping is not None:
                    return OracleMinorCertificate(
                        deleted=deleted,
                        contracted=tuple(contracted),
                        mapping={remaining[x - 1]: y for x, y in mapping.items()},
                    )
    return None


def family_F(n: int) -> ExplicitMatroid:
    """T_n(U_{n-2,n-1} + U_{n-2,n-1}) for n >= 4."""
    if n < 4:
        raise PreconditionError(f"family F starts at n = 4, got {n}")
    part = uniform(n - 2, n - 1)
    return truncate(oracle_direct_sum(part, part), n)


def family_G(n: int) -> ExplicitMatroid:
    """T_n(U_{n-1,n+1} + U_{n-1,n+1}) for n >= 2."""
    if n < 2:
        raise PreconditionError(f"family G starts at n = 2, got {n}")
    part = uniform(n - 1, n + 1)
    return truncate(oracle_direct_sum(part, part), n)


def family_H(n: int) -> ExplicitMatroid:
    """T_n(U_{n-2,n-1} + U_{n-1,n+1}) for n >= 3."""
    if n < 3:
        raise PreconditionError(f"family H starts at n = 3, got {n}")
    return truncate(oracle_direct_sum(uniform(n - 2, n - 1), uniform(n - 1, n + 1)), n)


FAMILIES = {"F": family_F, "G": family_G, "H": family_H}


def find_presentation(
    matroid: ExplicitMatroid,
    limit: Optional[int] = None,
) -> Optional[PathPresentation]:
    """First presentation, in enumeration order, whose matroid is isomorphic to ``matroid``."""
    limit = get_search_settings().PRESENTATION_SEARCH_LIMIT if limit is None else limit
    if matroid.ground_size > limit:
        raise SizeLimitError("find_presentation", matroid.ground_size, limit)
    target = len(matroid.bases)
    checked = 0
    with log_duration(logger, f"presentation search on {matroid.ground_size} elements"):
        for pres in iter_presentations(matroid.ground_size, rank=matroid.rank):
            if count_bases(pres) != target:
                continue
            checked += 1
            if is_isomorphic(to_explicit(pres), matroid, limit=limit) is not None:
                logger.debug(f"found {pres} after {checked} isomorphism tests")
                return pres
    logger.debug(f"no presentation after {checked} isomorphism tests")
    return None

