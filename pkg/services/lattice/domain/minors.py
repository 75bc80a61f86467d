"""Single-element deletion and contraction on presentations, witnesses and
presentation-minor containment.
"""

import logging
from typing import Dict, List, Optional, Tuple

from services.lattice.domain.entities import (
    EAST,
    NORTH,
    ElementClass,
    MinorWitness,
    PathPresentation,
    StepKind,
    WitnessStep,
)
from services.lattice.domain.errors import (
    LatticePathError,
    PreconditionError,
    PresentationFormatError,
    SizeLimitError,
    WitnessStepError,
)
from services.lattice.domain.presentation import count_bases
from shared.config import get_search_settings
from shared.logging import log_duration

logger = logging.getLogger(__name__)


def classify_element(pres: PathPresentation, label: int) -> ElementClass:
    """Loop: in no interval. Isthmus: some interval is exactly {label}."""
    index = pres.index_of(label)
    lower, upper = pres.lower.steps, pres.upper.steps
    lower_before = lower[:index].count(NORTH)
    upper_before = upper[:index].count(NORTH)
    if lower[index] == EAST and upper[index] == EAST and lower_before == upper_before:
        return ElementClass.LOOP
    if lower[index] == NORTH and upper[index] == NORTH and lower_before == upper_before:
        return ElementClass.ISTHMUS
    return ElementClass.ORDINARY


def _first_at_or_after(word: str, step: str, index: int) -> int:
    found = word.find(step, index)
    if found < 0:
        raise PreconditionError(f"no {step} step at or after position {index + 1}")
    return found


def _last_at_or_before(word: str, step: str, index: int) -> int:
    found = word.rfind(step, 0, index + 1)
    if found < 0:
        raise PreconditionError(f"no {step} step at or before position {index + 1}")
    return found


def _remove(pres: PathPresentation, lower_index: int, upper_index: int) -> PathPresentation:
    lower, upper = pres.lower.steps, pres.upper.steps
    return pres.with_words(
        lower[:lower_index] + lower[lower_index + 1 :],
        upper[:upper_index] + upper[upper_index + 1 :],
    )


def delete(pres: PathPresentation, label: int) -> PathPresentation:
    index = pres.index_of(label)
    if classify_element(pres, label) is not ElementClass.ORDINARY:
        return _remove(pres, index, index)
    upper_index = _first_at_or_after(pres.upper.steps, EAST, index)
    lower_index = _last_at_or_before(pres.lower.steps, EAST, index)
    return _remove(pres, lower_index, upper_index)


def contract(pres: PathPresentation, label: int) -> PathPresentation:
    index = pres.index_of(label)
    if classify_element(pres, label) is not ElementClass.ORDINARY:
        return _remove(pres, index, index)
    upper_index = _last_at_or_before(pres.upper.steps, NORTH, index)
    lower_index = _first_at_or_after(pres.lower.steps, NORTH, index)
    return _remove(pres, lower_index, upper_index)


def apply_step(pres: PathPresentation, step: WitnessStep) -> PathPresentation:
    if step.op is StepKind.DELETE:
        return delete(pres, step.label)
    return contract(pres, step.label)


def apply_witness(pres: PathPresentation, witness: MinorWitness) -> PathPresentation:
    current = pres
    for index, step in enumerate(witness.steps, start=1):
        try:
            current = apply_step(current, step)
        except LatticePathError as exc:
            raise WitnessStepError(index, str(step), exc)
    return current


def normalized_step(pres: PathPresentation, op: StepKind, label: int) -> WitnessStep:
    """Record isthmus removal as a contraction and loop removal as a deletion.

    Both operations agree on loops and isthmuses; the normalized form keeps
    the delete count equal to the drop in m and the contract count equal to
    the drop in r.
    """
    element = classify_element(pres, label)
    if element is ElementClass.ISTHMUS:
        return WitnessStep(StepKind.CONTRACT, label)
    if element is ElementClass.LOOP:
        return WitnessStep(StepKind.DELETE, label)
    return WitnessStep(op, label)


def witness_to_original_labels(pres: PathPresentation, witness: MinorWitness) -> List[WitnessStep]:
    """Rewrite positional witness labels as labels of ``pres``."""
    alive = list(pres.ground_set)
    offset = pres.label_offset
    rewritten = []
    for index, step in enumerate(witness.steps, start=1):
        position = step.label - offset
        if not 0 <= position < len(alive):
            raise WitnessStepError(
                index,
                str(step),
                PreconditionError(f"label {step.label} outside the current ground set"),
            )
        rewritten.append(WitnessStep(step.op, alive.pop(position)))
    return rewritten


def format_witness(witness: MinorWitness) -> str:
    return "".join(f"{step}\n" for step in witness.steps)


def parse_witness(text: str) -> MinorWitness:
    """Steps ``D <label>`` or ``C <label>``, one per line or separated by ``;``."""
    steps = []
    for number, raw in enumerate(text.replace(";", "\n").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0].upper() not in ("D", "C"):
            raise PresentationFormatError(f"bad witness line {number}: {raw!r}", position=number)
        try:
            label = int(parts[1])
        except ValueError:
            raise PresentationFormatError(f"bad label on witness line {number}", position=number)
        steps.append(WitnessStep(StepKind(parts[0].upper()), label))
    return MinorWitness(tuple(steps))


def _children(
    pres: PathPresentation, target: PathPresentation
) -> List[Tuple[WitnessStep, PathPresentation]]:
    children = []
    for label in pres.ground_set:
        element = classify_element(pres, label)
        if pres.m > target.m and element is not ElementClass.ISTHMUS:
            children.append((WitnessStep(StepKind.DELETE, label), delete(pres, label)))
        if pres.r > target.r and element is not ElementClass.LOOP:
            children.append((WitnessStep(StepKind.CONTRACT, label), contract(pres, label)))
    return children


def is_presentation_minor(
    small: PathPresentation,
    large: PathPresentation,
    limit: Optional[int] = None,
) -> Optional[MinorWitness]:
    """Witness turning ``large`` into ``small`` word for word, or None.

    Witness labels are those of ``large`` and its successive minors.

    Breadth-first over presentation states, one ground-set size per level,
    memoized on the word pair. Deletions only come from m and contractions
    only from r, and basis counts never grow under minors.
    """
    limit = get_search_settings().MINOR_SEARCH_LIMIT if limit is None else limit
    if large.size > limit:
        raise SizeLimitError("is_presentation_minor", large.size, limit)
    if small.m > large.m or small.r > large.r:
        return None
    start, target = large, small
    if start.key == target.key:
        return MinorWitness(())
    target_bases = count_bases(target)

    parents: Dict[Tuple[str, str], Tuple[Tuple[str, str], WitnessStep]] = {}
    frontier: List[PathPresentation] = [start]
    seen = {start.key}
    with log_duration(logger, f"minor search {target} <= {start}"):
        while frontier and frontier[0].size > target.size:
            level: List[PathPresentation] = []
            for pres in frontier:
                for step, child in _children(pres, target):
                    if child.key in seen:
                        continue
                    seen.add(child.key)
                    parents[child.key] = (pres.key, step)
                    if child.key == target.key:
                        logger.debug(f"minor search visited {len(seen)} states")
                        return _trace(parents, start.key, child.key)
                    if child.size > target.size and count_bases(child) >= target_bases:
                        level.append(child)
            frontier = level
    logger.debug(f"minor search exhausted {len(seen)} states")
    return None


def _trace(parents, start_key, end_key) -> MinorWitness:
    steps: List[WitnessStep] = []
    key = end_key
    while key != start_key:
        key, step = parents[key]
        steps.append(step)
    return MinorWitness(tuple(reversed(steps)))


def _first_square(pres: PathPresentation, k: int) -> Optional[int]:
    """First prefix length whose gap reaches k."""
    gap = 0
    for index, (p, q) in enumerate(zip(pres.lower.steps, pres.upper.steps), start=1):
        gap += (p == EAST) - (q == EAST)
        if gap >= k:
            return index
    return None


def extract_uniform_minor(pres: PathPresentation, k: int) -> MinorWitness:
    """Witness reducing a presentation with a k x k square to E^k N^k / N^k E^k.

    Follows the minimal-counterexample argument: drop element 1 while the
    square does not touch the origin (delete when it starts right of x = 0,
    contract when it starts above y = 0), then drop the last element while the
    ground set is larger than 2k, deleting when that keeps a k x k square.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    if _first_square(pres, k) is None:
        raise PreconditionError(f"presentation {pres} has no {k}x{k} square")

    steps: List[WitnessStep] = []
    current = pres
    while True:
        position = _first_square(current, k)
        corner_x = current.upper.steps[:position].count(EAST)
        corner_y = current.lower.steps[:position].count(NORTH)
        first, last = current.first_label, current.last_label
        if corner_x > 0:
            candidates = [(StepKind.DELETE, first)]
        elif corner_y > 0:
            candidates = [(StepKind.CONTRACT, first)]
        elif current.size > 2 * k:
            candidates = [(StepKind.DELETE, last), (StepKind.CONTRACT, last)]
        else:
            break
        for op, label in candidates:
            step = normalized_step(current, op, label)
            reduced = apply_step(current, step)
            if _first_square(reduced, k) is not None:
                steps.append(step)
                current = reduced
                break
        else:
            raise PreconditionError(f"no single-element reduction of {current} keeps a {k}x{k} square")
    logger.debug(f"uniform minor of size {2 * k} reached in {len(steps)} steps")
    return MinorWitness(tuple(steps))

