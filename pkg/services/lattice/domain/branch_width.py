"""Exact branch-width of small explicit matroids."""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

from services.lattice.domain.entities import BranchDecomposition, ExplicitMatroid
from services.lattice.domain.errors import PreconditionError, SizeLimitError
from shared.config import get_search_settings
from shared.logging import log_duration

logger = logging.getLogger(__name__)


def _check_size(matroid: ExplicitMatroid, limit: Optional[int], what: str) -> None:
    limit = get_search_settings().BRANCH_WIDTH_LIMIT if limit is None else limit
    if matroid.ground_size < 2:
        raise PreconditionError(f"{what} needs at least 2 elements, got {matroid.ground_size}")
    if matroid.ground_size > limit:
        raise SizeLimitError(what, matroid.ground_size, limit)


def _connectivity_table(matroid: ExplicitMatroid) -> List[int]:
    """lambda(A) = r(A) + r(E - A) - r(E) + 1 for every subset mask A."""
    full = (1 << matroid.ground_size) - 1
    ranks = [matroid.rank_of_mask(mask) for mask in range(full + 1)]
    return [ranks[mask] + ranks[full ^ mask] - matroid.rank + 1 for mask in range(full + 1)]


def _labels(mask: int) -> List[int]:
    return [bit + 1 for bit in range(mask.bit_length()) if mask >> bit & 1]


def branch_width(
    matroid: ExplicitMatroid, limit: Optional[int] = None
) -> Tuple[int, BranchDecomposition]:
    """Minimum width over all branch decompositions, with an optimal tree.

    A rooted subtree with leaf set A hangs off an edge of width lambda(A);
    its best width is the cheapest split of A into two rooted subtrees. The
    whole tree joins the best subtrees on X and E - X.
    """
    _check_size(matroid, limit, "branch_width")
    n = matroid.ground_size
    full = (1 << n) - 1
    connectivity = _connectivity_table(matroid)

    best: Dict[int, int] = {}
    split: Dict[int, int] = {}
    with log_duration(logger, f"branch-width on {n} elements"):
        for mask in range(1, full + 1):
            if mask & (mask - 1) == 0:
                best[mask] = connectivity[mask]
                continue
            low = mask & -mask
            rest = mask ^ low
            # every proper split, listed once by keeping the lowest element on the left
            candidate, chosen = None, 0
            sub = rest
            while True:
                left = low | sub
                if left != mask:
                    right = mask ^ left
                    width = max(connectivity[mask], best[left], best[right])
                    if candidate is None or width < candidate:
                        candidate, chosen = width, left
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            best[mask], split[mask] = candidate, chosen

        width, root_side = None, 0
        sub = full ^ 1
        while True:
            left = 1 | sub
            if left != full:
                value = max(best[left], best[full ^ left])
                if width is None or value < width:
                    width, root_side = value, left
            if sub == 0:
                break
            sub = (sub - 1) & (full ^ 1)

    tree = nx.Graph()

    def build(mask: int):
        if mask & (mask - 1) == 0:
            leaf = mask.bit_length()
            tree.add_node(leaf)
            return leaf
        node = ("node", mask)
        left = split[mask]
        tree.add_edge(node, build(left))
        tree.add_edge(node, build(mask ^ left))
        return node

    tree.add_edge(build(root_side), build(full ^ root_side))
    logger.debug(f"branch-width {width}, root split {_labels(root_side)} | {_labels(full ^ root_side)}")
    return width, BranchDecomposition(tree, width)


def _leaf_set(component, leaves) -> int:
    return sum(1 << (node - 1) for node in component if node in leaves)


def decomposition_width(matroid: ExplicitMatroid, tree: nx.Graph) -> int:
    """Width of a given branch decomposition: the largest lambda over its edges."""
    leaves = {node for node in tree.nodes if isinstance(node, int)}
    if leaves != set(matroid.ground_set):
        raise PreconditionError("tree leaves must be exactly the ground elements")
    if not nx.is_tree(tree):
        raise PreconditionError("branch decomposition must be a tree")
    for node in tree.nodes:
        degree = tree.degree(node)
        if (node in leaves and degree != 1) or (node not in leaves and degree != 3):
            raise PreconditionError(f"node {node!r} has degree {degree}")

    connectivity = _connectivity_table(matroid)
    width = 0
    for u, v in tree.edges:
        cut = tree.copy()
        cut.remove_edge(u, v)
        side = nx.node_connected_component(cut, u)
        width = max(width, connectivity[_leaf_set(side, leaves)])
    return width


def iter_branch_trees(n: int) -> Iterator[nx.Graph]:
    """Every cubic tree with leaves 1..n, by inserting leaves into edges."""
    if n < 2:
        raise PreconditionError(f"need at least 2 leaves, got {n}")
    if n == 2:
        yield nx.Graph([(1, 2)])
        return
    start = nx.Graph([(1, ("node", 3)), (2, ("node", 3)), (3, ("node", 3))])

    def grow(tree: nx.Graph, leaf: int) -> Iterator[nx.Graph]:
        if leaf > n:
            yield tree
            return
        for u, v in sorted(tree.edges, key=repr):
            bigger = tree.copy()
            middle = ("node", leaf)
            bigger.remove_edge(u, v)
            bigger.add_edges_from([(u, middle), (middle, v), (middle, leaf)])
            yield from grow(bigger, leaf + 1)

    yield from grow(start, 4)


def branch_width_by_trees(
    matroid: ExplicitMatroid, limit: Optional[int] = None
) -> Tuple[int, BranchDecomposition]:
    """Branch-width by trying every tree; slow, used to check ``branch_width``."""
    _check_size(matroid, limit, "branch_width_by_trees")
    best: Optional[Tuple[int, nx.Graph]] = None
    with log_duration(logger, f"tree enumeration on {matroid.ground_size} elements"):
        for tree in iter_branch_trees(matroid.ground_size):
            width = decomposition_width(matroid, tree)
            if best is None or width < best[0]:
                best = (width, tree)
    return best[0], BranchDecomposition(best[1], best[0])
