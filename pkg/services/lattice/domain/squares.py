"""Squares between the bounding paths, pulling a presentation apart at a
square and gluing the two halves back together.
"""

import logging
from typing import List, Optional, Tuple

from services.lattice.domain.entities import (
    EAST,
    NORTH,
    MinorWitness,
    PathPresentation,
    SquareRecord,
)
from services.lattice.domain.errors import (
    GlueConditionError,
    PreconditionError,
    SquareError,
)
from services.lattice.domain.minors import apply_witness, is_presentation_minor
from services.lattice.domain.presentation import is_nested
from services.lattice.domain.sampling import iter_presentations

logger = logging.getLogger(__name__)


def gap_profile(pres: PathPresentation) -> List[int]:
    """m(P_i) - m(Q_i) for i = 1..n."""
    profile = []
    gap = 0
    for p, q in zip(pres.lower.steps, pres.upper.steps):
        gap += (p == EAST) - (q == EAST)
        profile.append(gap)
    return profile


def square_width(pres: PathPresentation) -> int:
    return max(gap_profile(pres), default=0)


def is_proper(pres: PathPresentation, position: int, size: int) -> bool:
    return size + 1 <= position <= pres.size - size - 1


def squares(pres: PathPresentation) -> List[SquareRecord]:
    return [
        SquareRecord(position, gap, is_proper(pres, position, gap))
        for position, gap in enumerate(gap_profile(pres), start=1)
        if gap >= 1
    ]


def square_at(pres: PathPresentation, position: int) -> int:
    """Size of the square at ``position``; raises when there is none."""
    if not 1 <= position <= pres.size:
        raise SquareError(f"position {position} outside [1, {pres.size}]", position=position)
    gap = gap_profile(pres)[position - 1]
    if gap < 1:
        raise SquareError(f"no square at position {position}", position=position)
    return gap


def pull_apart(pres: PathPresentation, position: int) -> Tuple[PathPresentation, PathPresentation]:
    """Split at the k x k square at ``position`` into (bottom, top).

    The bottom keeps the original labels 1..i and closes the square with
    N^k / E^k. The top opens with E^k / N^k on labels i-k+1..i, so the labels
    after i are unchanged.
    """
    k = square_at(pres, position)
    lower, upper = pres.lower.steps, pres.upper.steps
    bottom = PathPresentation.from_words(
        lower[:position] + NORTH * k,
        upper[:position] + EAST * k,
        pres.label_offset,
    )
    top = PathPresentation.from_words(
        EAST * k + lower[position:],
        NORTH * k + upper[position:],
        pres.label_offset + position - k,
    )
    logger.debug(f"pulled {pres} apart at {position} into {bottom} and {top}")
    return bottom, top


def glue_violations(bottom: PathPresentation, top: PathPresentation, k: int) -> List[str]:
    checks = [
        ("i", bottom.lower.steps, NORTH, "end", "bottom lower word"),
        ("ii", bottom.upper.steps, EAST, "end", "bottom upper word"),
        ("iii", top.lower.steps, EAST, "start", "top lower word"),
        ("iv", top.upper.steps, NORTH, "start", "top upper word"),
    ]
    violations = []
    for tag, word, step, where, name in checks:
        affix = word[-k:] if where == "end" else word[:k]
        if len(word) < k or affix != step * k:
            violations.append(f"({tag}) {name} does not {where} with {step * k}")
    return violations


def glue(bottom: PathPresentation, top: PathPresentation, k: int) -> PathPresentation:
    """Strip the closing N^k / E^k of the bottom and the opening E^k / N^k of
    the top, then concatenate. Labels start at the bottom's first label.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    violations = glue_violations(bottom, top, k)
    if violations:
        raise GlueConditionError(violations)
    return PathPresentation.from_words(
        bottom.lower.steps[:-k] + top.lower.steps[k:],
        bottom.upper.steps[:-k] + top.upper.steps[k:],
        bottom.label_offset,
    )


def check_lemma_imp(
    pres: PathPresentation,
    position: int,
    bottom_witness: MinorWitness,
    top_witness: MinorWitness,
) -> bool:
    """Glue a minor of the bottom to a minor of the top and test containment.

    Both minors must keep the square: the bottom minor still ends with
    N^k / E^k and the top minor still starts with E^k / N^k. The glued
    presentation is then expected to be a minor of ``pres``.
    """
    k = square_at(pres, position)
    if not is_proper(pres, position, k):
        raise SquareError(f"the {k}x{k} square at {position} is not proper", position=position)
    bottom, top = pull_apart(pres, position)
    bottom_minor = apply_witness(bottom, bottom_witness)
    top_minor = apply_witness(top, top_witness)
    violations = glue_violations(bottom_minor, top_minor, k)
    if violations:
        raise PreconditionError("witnesses destroy the square: " + "; ".join(violations))
    glued = glue(bottom_minor, top_minor, k)
    return is_presentation_minor(glued, pres) is not None


def has_proper_widest_square(pres: PathPresentation) -> bool:
    width = square_width(pres)
    return any(record.proper for record in squares(pres) if record.size == width)


def properness_probe(max_size: int = 10, min_size: int = 1) -> List[PathPresentation]:
    """Presentations of positive square-width w whose lower word is not E^m N^r
    and that have no proper w x w square.
    """
    if max_size < min_size:
        raise PreconditionError(f"max_size {max_size} is below min_size {min_size}")
    found: List[PathPresentation] = []
    for size in range(min_size, max_size + 1):
        for pres in iter_presentations(size):
            if square_width(pres) >= 1 and not is_nested(pres) and not has_proper_widest_square(pres):
                found.append(pres)
    logger.info(f"properness probe up to size {max_size}: {len(found)} counterexamples")
    return found


def first_proper_square(pres: PathPresentation) -> Optional[SquareRecord]:
    return next((record for record in squares(pres) if record.proper), None)
