"""Exhaustive and sampled campaigns over larger presentations.

Marked slow; run with ``pytest -m slow``.
"""

import math
import random
from itertools import combinations

import pytest

from services.lattice.domain.branch_width import branch_width, branch_width_by_trees
from services.lattice.domain.entities import MinorWitness, StepKind, WitnessStep
from services.lattice.domain.minors import (
    apply_step,
    apply_witness,
    contract,
    delete,
    extract_uniform_minor,
    is_presentation_minor,
)
from services.lattice.domain.oracle import (
    family_F,
    family_G,
    family_H,
    find_presentation,
    is_isomorphic,
    is_minor_oracle,
    oracle_contract,
    oracle_delete,
    uniform,
)
from services.lattice.domain.presentation import (
    count_bases,
    enumerate_bases,
    is_independent,
    is_independent_by_paths,
    to_explicit,
    uniform_presentation,
)
from services.lattice.domain.sampling import iter_presentations, random_presentation
from services.lattice.domain.squares import (
    check_lemma_imp,
    glue,
    properness_probe,
    pull_apart,
    square_width,
    squares,
)
from services.lattice.domain.wqo import (
    base_case_order,
    loops_coloops_code,
    subword_order,
)

pytestmark = pytest.mark.slow


def every_presentation(max_size, min_size=0):
    for size in range(min_size, max_size + 1):
        yield from iter_presentations(size)


def test_independence_agrees_on_random_presentations():
    rng = random.Random(0)
    for _ in range(1000):
        pres = random_presentation(rng, rng.randint(1, 10))
        matroid = to_explicit(pres)
        assert count_bases(pres) == len(matroid.bases)
        for size in range(pres.size + 1):
            for subset in combinations(pres.ground_set, size):
                expected = matroid.is_independent(subset)
                assert is_independent(pres, subset) == expected
                assert is_independent_by_paths(pres, subset) == expected


def test_independence_agrees_exhaustively():
    for pres in every_presentation(6):
        matroid = to_explicit(pres)
        assert [tuple(b) for b in enumerate_bases(pres)] == list(matroid.bases)
        for size in range(pres.size + 1):
            for subset in combinations(pres.ground_set, size):
                expected = matroid.is_independent(subset)
                assert is_independent(pres, subset) == expected
                assert is_independent_by_paths(pres, subset) == expected


def test_single_element_rules_agree_exhaustively():
    for pres in every_presentation(9, min_size=1):
        matroid = to_explicit(pres)
        for x in pres.ground_set:
            assert to_explicit(delete(pres, x)) == oracle_delete(matroid, x, validate=False)
            assert to_explicit(contract(pres, x)) == oracle_contract(matroid, x, validate=False)


def test_pull_then_glue_is_the_identity():
    for pres in every_presentation(10, min_size=2):
        for record in squares(pres):
            bottom, top = pull_apart(pres, record.position)
            assert glue(bottom, top, record.size) == pres


def test_pulled_halves_are_minors():
    rng = random.Random(4)
    checked = 0
    while checked < 300:
        pres = random_presentation(rng, rng.randint(2, 12))
        found = squares(pres)
        if not found:
            continue
        record = rng.choice(found)
        bottom, top = pull_apart(pres, record.position)
        assert is_presentation_minor(bottom, pres) is not None
        assert is_presentation_minor(top, pres) is not None
        checked += 1


def test_uniform_minor_extraction():
    rng = random.Random(1)
    for _ in range(1000):
        pres = random_presentation(rng, rng.randint(2, 14))
        width = square_width(pres)
        if width == 0:
            continue
        for k in range(1, width + 1):
            witness = extract_uniform_minor(pres, k)
            minor = apply_witness(pres, witness)
            assert minor.key == uniform_presentation(k, 2 * k).key
            if k <= 3:
                assert is_isomorphic(to_explicit(minor), uniform(k, 2 * k)) is not None


def test_glued_minors_on_random_presentations():
    rng = random.Random(2)
    checked = 0
    while checked < 200:
        pres = random_presentation(rng, rng.randint(4, 12))
        proper = [record for record in squares(pres) if record.proper]
        if not proper:
            continue
        record = rng.choice(proper)
        bottom, top = pull_apart(pres, record.position)
        bottom_witness = _outside_block_witness(rng, bottom, record.size, keep_end=True)
        top_witness = _outside_block_witness(rng, top, record.size, keep_end=False)
        assert check_lemma_imp(pres, record.position, bottom_witness, top_witness)
        checked += 1


def _outside_block_witness(rng, half, k, keep_end):
    steps = []
    current = half
    for _ in range(rng.randint(0, 3)):
        labels = list(current.ground_set)
        labels = labels[: current.size - k] if keep_end else labels[k:]
        if not labels:
            break
        step = WitnessStep(rng.choice([StepKind.DELETE, StepKind.CONTRACT]), rng.choice(labels))
        reduced = apply_step(current, step)
        lower, upper = reduced.lower.steps, reduced.upper.steps
        if keep_end:
            kept = lower.endswith("N" * k) and upper.endswith("E" * k)
        else:
            kept = lower.startswith("E" * k) and upper.startswith("N" * k)
        if kept:
            steps.append(step)
            current = reduced
    return MinorWitness(tuple(steps))


def test_square_width_bound_from_branch_width():
    for pres in every_presentation(8, min_size=2):
        width, _ = branch_width(to_explicit(pres))
        assert square_width(pres) < math.ceil(3 * width / 2)


def test_branch_width_dynamic_program_matches_trees():
    rng = random.Random(3)
    for _ in range(30):
        pres = random_presentation(rng, rng.randint(2, 7))
        matroid = to_explicit(pres)
        assert branch_width(matroid)[0] == branch_width_by_trees(matroid)[0]


@pytest.mark.parametrize(
    "build, first",
    [(family_F, 4), (family_G, 2), (family_H, 3)],
)
def test_families_are_antichains(build, first):
    members = [build(n) for n in range(first, first + 3)]
    members = [m for m in members if m.ground_size <= 10]
    for a in members:
        for b in members:
            if a is not b:
                assert is_minor_oracle(a, b) is None
    for member in members:
        assert find_presentation(member) is not None


def test_base_case_orders():
    items = [pres for pres in every_presentation(6, min_size=1) if square_width(pres) == 0]
    for a in items:
        for b in items:
            assert base_case_order(loops_coloops_code(a), loops_coloops_code(b)) == (
                is_minor_oracle(to_explicit(a), to_explicit(b)) is not None
            )
    words = [pres for pres in every_presentation(8, min_size=1) if square_width(pres) == 0]
    for a in words:
        for b in words:
            if a.size <= b.size:
                assert subword_order(a, b) == (is_presentation_minor(a, b) is not None)


def test_properness_probe_counterexamples_are_genuine():
    found = properness_probe(max_size=10)
    assert found
    for pres in found:
        assert all(not record.proper for record in squares(pres) if record.size == square_width(pres))
