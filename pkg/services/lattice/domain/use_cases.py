from typing import Any, Dict, Optional, Sequence

from services.lattice.domain.branch_width import branch_width
from services.lattice.domain.entities import (
    ElementClass,
    ExplicitMatroid,
    MinorPoset,
    MinorWitness,
    PathPresentation,
)
from services.lattice.domain.errors import PreconditionError
from services.lattice.domain.minors import (
    apply_witness,
    classify_element,
    contract,
    delete,
    extract_uniform_minor,
    format_witness,
    is_presentation_minor,
)
from services.lattice.domain.oracle import (
    FAMILIES,
    find_presentation,
    is_isomorphic,
    is_minor_oracle,
)
from services.lattice.domain.presentation import (
    count_bases,
    direct_sum,
    dual,
    enumerate_bases,
    format_presentation,
    intervals,
    is_nested,
    is_uniform_presentation,
)
from services.lattice.domain.squares import (
    check_lemma_imp,
    first_proper_square,
    gap_profile,
    glue,
    pull_apart,
    square_width,
    squares,
)
from services.lattice.domain.wqo import (
    base_case_order,
    build_oracle_poset,
    build_poset,
    loops_coloops_code,
    longest_chain,
    max_antichain,
    subword_order,
)


def presentation_dict(pres: PathPresentation) -> Dict[str, Any]:
    return {
        "P": pres.lower.steps,
        "Q": pres.upper.steps,
        "offset": pres.label_offset,
        "text": format_presentation(pres),
    }


def witness_dict(witness: Optional[MinorWitness]) -> Optional[Dict[str, Any]]:
    if witness is None:
        return None
    return {
        "steps": [str(step) for step in witness.steps],
        "text": format_witness(witness),
        "deletions": witness.deletions,
        "contractions": witness.contractions,
    }


class PresentationUseCase:
    """Use case for single-presentation queries."""

    def info(self, pres: PathPresentation) -> Dict[str, Any]:
        classes = {label: classify_element(pres, label) for label in pres.ground_set}
        return {
            "presentation": presentation_dict(pres),
            "m": pres.m,
            "r": pres.r,
            "rank": pres.r,
            "size": pres.size,
            "loops": [x for x, kind in classes.items() if kind is ElementClass.LOOP],
            "coloops": [x for x, kind in classes.items() if kind is ElementClass.ISTHMUS],
            "square_width": square_width(pres),
            "gap_profile": gap_profile(pres),
            "bases": count_bases(pres),
            "intervals": [list(pair) for pair in intervals(pres).intervals],
            "nested": is_nested(pres),
            "uniform": is_uniform_presentation(pres),
        }

    def validate(self, pres: PathPresentation) -> Dict[str, Any]:
        return {"valid": True, "presentation": presentation_dict(pres)}

    def bases(
        self, pres: PathPresentation, cap: Optional[int] = None, count_only: bool = False
    ) -> Dict[str, Any]:
        result: Dict[str, Any] = {"count": count_bases(pres)}
        if not count_only:
            result["bases"] = [list(basis) for basis in enumerate_bases(pres, cap)]
        return result

    def dual(self, pres: PathPresentation) -> Dict[str, Any]:
        return {"presentation": presentation_dict(dual(pres))}

    def direct_sum(self, first: PathPresentation, second: PathPresentation) -> Dict[str, Any]:
        return {"presentation": presentation_dict(direct_sum(first, second))}


class MinorUseCase:
    """Use case for deletion, contraction and containment."""

    def delete(self, pres: PathPresentation, label: int) -> Dict[str, Any]:
        return {
            "element": classify_element(pres, label).value,
            "presentation": presentation_dict(delete(pres, label)),
        }

    def contract(self, pres: PathPresentation, label: int) -> Dict[str, Any]:
        return {
            "element": classify_element(pres, label).value,
            "presentation": presentation_dict(contract(pres, label)),
        }

    def apply_witness(self, pres: PathPresentation, witness: MinorWitness) -> Dict[str, Any]:
        return {"presentation": presentation_dict(apply_witness(pres, witness))}

    def is_minor(self, small: PathPresentation, large: PathPresentation) -> Dict[str, Any]:
        witness = is_presentation_minor(small, large)
        return {"minor": witness is not None, "witness": witness_dict(witness)}

    def uniform_minor(self, pres: PathPresentation, k: int) -> Dict[str, Any]:
        witness = extract_uniform_minor(pres, k)
        return {
            "witness": witness_dict(witness),
            "presentation": presentation_dict(apply_witness(pres, witness)),
        }


class SquareUseCase:
    """Use case for squares, pulling apart and gluing."""

    def squares(self, pres: PathPresentation) -> Dict[str, Any]:
        first = first_proper_square(pres)
        return {
            "square_width": square_width(pres),
            "squares": [
                {"position": s.position, "size": s.size, "proper": s.proper}
                for s in squares(pres)
            ],
            "first_proper": None if first is None else first.position,
        }

    def pull(self, pres: PathPresentation, position: int) -> Dict[str, Any]:
        bottom, top = pull_apart(pres, position)
        return {
            "k": gap_profile(pres)[position - 1],
            "bottom": presentation_dict(bottom),
            "top": presentation_dict(top),
        }

    def glue(self, bottom: PathPresentation, top: PathPresentation, k: int) -> Dict[str, Any]:
        return {"presentation": presentation_dict(glue(bottom, top, k))}

    def check_glue_minor(
        self,
        pres: PathPresentation,
        position: int,
        bottom_witness: MinorWitness,
        top_witness: MinorWitness,
    ) -> Dict[str, Any]:
        return {"minor": check_lemma_imp(pres, position, bottom_witness, top_witness)}


def _node_name(node) -> str:
    if isinstance(node, int):
        return str(node)
    return f"node{node[1]}"


class OracleUseCase:
    """Use case for explicit matroids."""

    def family(self, name: str, n: int) -> Dict[str, Any]:
        try:
            build = FAMILIES[name.upper()]
        except KeyError:
            raise PreconditionError(f"unknown family {name!r}, expected one of F, G, H")
        matroid = build(n)
        return {"matroid": matroid.to_dict(), "rank": matroid.rank}

    def branch_width(self, matroid: ExplicitMatroid) -> Dict[str, Any]:
        width, decomposition = branch_width(matroid)
        return {
            "branch_width": width,
            "tree": sorted([_node_name(u), _node_name(v)] for u, v in decomposition.tree.edges),
        }

    def isomorphic(self, first: ExplicitMatroid, second: ExplicitMatroid) -> Dict[str, Any]:
        mapping = is_isomorphic(first, second)
        return {
            "isomorphic": mapping is not None,
            "mapping": None if mapping is None else {str(x): y for x, y in sorted(mapping.items())},
        }

    def oracle_minor(self, small: ExplicitMatroid, large: ExplicitMatroid) -> Dict[str, Any]:
        certificate = is_minor_oracle(small, large)
        if certificate is None:
            return {"minor": False}
        return {
            "minor": True,
            "deleted": list(certificate.deleted),
            "contracted": list(certificate.contracted),
            "mapping": {str(x): y for x, y in sorted(certificate.mapping.items())},
        }

    def find_presentation(self, matroid: ExplicitMatroid) -> Dict[str, Any]:
        pres = find_presentation(matroid)
        return {
            "found": pres is not None,
            "presentation": None if pres is None else presentation_dict(pres),
        }


def poset_dict(poset: MinorPoset) -> Dict[str, Any]:
    return {
        "relation": [[int(cell) for cell in row] for row in poset.relation],
        "max_antichain": max_antichain(poset),
        "longest_chain": longest_chain(poset),
    }


class PosetUseCase:
    """Use case for finite minor posets."""

    def antichain(self, items: Sequence[PathPresentation]) -> Dict[str, Any]:
        result = poset_dict(build_poset(items))
        result["items"] = [str(pres) for pres in items]
        return result

    def oracle_antichain(self, matroids: Sequence[ExplicitMatroid]) -> Dict[str, Any]:
        return poset_dict(build_oracle_poset(matroids))

    def base_case(self, first: PathPresentation, second: PathPresentation) -> Dict[str, Any]:
        codes = [loops_coloops_code(first), loops_coloops_code(second)]
        return {
            "codes": [{"loops": c.loops, "coloops": c.coloops} for c in codes],
            "matroid_minor": base_case_order(codes[0], codes[1]),
            "presentation_minor": subword_order(first, second),
        }
