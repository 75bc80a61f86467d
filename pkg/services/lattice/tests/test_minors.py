"""Tests for deletion, contraction, witnesses and presentation-minor search."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from services.lattice.domain.entities import (
    ElementClass,
    MinorWitness,
    StepKind,
    WitnessStep,
)
from services.lattice.domain.errors import (
    LabelOutOfRangeError,
    PreconditionError,
    PresentationFormatError,
    SizeLimitError,
    WitnessStepError,
)
from services.lattice.domain.minors import (
    apply_witness,
    classify_element,
    contract,
    delete,
    extract_uniform_minor,
    format_witness,
    is_presentation_minor,
    normalized_step,
    parse_witness,
    witness_to_original_labels,
)
from services.lattice.domain.oracle import oracle_contract, oracle_delete
from services.lattice.domain.presentation import (
    parse_presentation,
    to_explicit,
    uniform_presentation,
)
from services.lattice.domain.sampling import iter_presentations
from services.lattice.tests.strategies import presentations, presentations_with_square

FIGURE = "EEEEENNNNENEN/NNNNNEEENEEEE"


def pres(text):
    return parse_presentation(text)


def steps(*pairs):
    return MinorWitness(tuple(WitnessStep(StepKind(op), label) for op, label in pairs))


class TestClassify:
    def test_ordinary(self):
        assert classify_element(pres("EENN/NENE"), 2) is ElementClass.ORDINARY

    def test_loop(self):
        assert classify_element(pres("EEENNN/ENENEN"), 1) is ElementClass.LOOP

    def test_isthmus(self):
        assert classify_element(pres("NN/NN"), 1) is ElementClass.ISTHMUS

    def test_loop_then_isthmus(self):
        p = pres("EN/EN")
        assert classify_element(p, 1) is ElementClass.LOOP
        assert classify_element(p, 2) is ElementClass.ISTHMUS

    def test_classes_match_matroid(self):
        for size in range(1, 6):
            for p in iter_presentations(size):
                matroid = to_explicit(p)
                for x in p.ground_set:
                    kind = classify_element(p, x)
                    assert (kind is ElementClass.LOOP) == (x in matroid.loops())
                    assert (kind is ElementClass.ISTHMUS) == (x in matroid.coloops())


class TestDeleteContract:
    def test_delete_ordinary(self):
        assert delete(pres("EENN/NNEE"), 1).key == ("ENN", "NNE")

    def test_contract_ordinary(self):
        assert contract(pres("EENN/NNEE"), 1).key == ("EEN", "NEE")

    def test_delete_loop_removes_position(self):
        assert delete(pres("EEENNN/ENENEN"), 1).key == ("EENNN", "NENEN")

    def test_contract_isthmus_removes_position(self):
        assert contract(pres("NN/NN"), 1).key == ("N", "N")

    def test_label_out_of_range(self):
        with pytest.raises(LabelOutOfRangeError):
            delete(pres("EN/NE"), 3)

    def test_offset_is_kept(self):
        result = delete(pres("P=EENN\nQ=NNEE\noffset=4"), 4)
        assert result.label_offset == 4
        assert list(result.ground_set) == [4, 5, 6]

    def test_rules_agree_with_matroid_operations(self):
        for size in range(1, 7):
            for p in iter_presentations(size):
                matroid = to_explicit(p)
                for x in p.ground_set:
                    assert to_explicit(delete(p, x)) == oracle_delete(matroid, x, validate=False)
                    assert to_explicit(contract(p, x)) == oracle_contract(matroid, x, validate=False)

    def test_normalized_step(self):
        p = pres("EN/EN")
        assert normalized_step(p, StepKind.CONTRACT, 1) == WitnessStep(StepKind.DELETE, 1)
        assert normalized_step(p, StepKind.DELETE, 2) == WitnessStep(StepKind.CONTRACT, 2)
        q = pres("EENN/NNEE")
        assert normalized_step(q, StepKind.CONTRACT, 1) == WitnessStep(StepKind.CONTRACT, 1)


class TestWitnesses:
    def test_format_and_parse(self):
        witness = steps(("D", 1), ("C", 2))
        assert format_witness(witness) == "D 1\nC 2\n"
        assert parse_witness("D 1\nC 2\n") == witness

    def test_parse_semicolons_and_comments(self):
        assert parse_witness("# from the bottom half\nD 1; c 2") == steps(("D", 1), ("C", 2))

    def test_parse_empty(self):
        assert len(parse_witness("")) == 0

    def test_parse_bad_line(self):
        with pytest.raises(PresentationFormatError) as info:
            parse_witness("D 1\nX 2")
        assert info.value.position == 2

    def test_apply(self):
        result = apply_witness(pres("EENN/NNEE"), steps(("D", 1), ("C", 1)))
        assert result.key == ("EN", "NE")

    def test_failing_step_is_reported(self):
        with pytest.raises(WitnessStepError) as info:
            apply_witness(pres("EN/EN"), steps(("D", 1), ("D", 9)))
        assert info.value.index == 2
        assert isinstance(info.value.cause, LabelOutOfRangeError)

    def test_original_labels(self):
        rewritten = witness_to_original_labels(pres("EENN/NNEE"), steps(("D", 1), ("C", 1)))
        assert [str(step) for step in rewritten] == ["D 1", "C 2"]

    def test_counts(self):
        witness = steps(("D", 1), ("C", 1), ("D", 2))
        assert (witness.deletions, witness.contractions) == (2, 1)


class TestMinorSearch:
    def test_single_deletion(self):
        witness = is_presentation_minor(pres("ENN/NNE"), pres("EENN/NNEE"))
        assert format_witness(witness) == "D 1\n"

    def test_larger_is_not_a_minor(self):
        assert is_presentation_minor(pres("EENN/NNEE"), pres("ENN/NNE")) is None

    def test_identity(self):
        witness = is_presentation_minor(pres("EN/NE"), pres("EN/NE"))
        assert witness is not None and len(witness) == 0

    def test_loop_deletion(self):
        witness = is_presentation_minor(pres("EN/EN"), pres("ENE/ENE"))
        assert format_witness(witness) == "D 3\n"

    def test_chain_step(self):
        witness = is_presentation_minor(pres("ENE/ENE"), pres("EENE/ENEE"))
        assert format_witness(witness) == "D 2\n"

    def test_same_matroid_different_words(self):
        # both are a loop plus a coloop, but no removal maps one word pair to the other
        assert is_presentation_minor(pres("NE/NE"), pres("EN/EN")) is None

    def test_witness_uses_large_labels(self):
        large = pres("P=EENN\nQ=NNEE\noffset=7")
        witness = is_presentation_minor(pres("ENN/NNE"), large)
        assert format_witness(witness) == "D 7\n"
        assert apply_witness(large, witness).key == ("ENN", "NNE")

    def test_size_limit(self):
        large = uniform_presentation(3, 8)
        with pytest.raises(SizeLimitError):
            is_presentation_minor(uniform_presentation(1, 2), large, limit=6)

    @settings(max_examples=40, deadline=None)
    @given(presentations(min_size=1, max_size=7), st.data())
    def test_found_witness_reproduces_small(self, large, data):
        labels = list(large.ground_set)
        removed = data.draw(st.lists(st.sampled_from(labels), unique=True, max_size=3))
        small = large
        for label in sorted(removed, reverse=True):
            op = data.draw(st.sampled_from([delete, contract]))
            small = op(small, label)
        witness = is_presentation_minor(small, large)
        assert witness is not None
        assert apply_witness(large, witness).key == small.key

    def test_search_is_transitive(self):
        items = [p for size in range(5) for p in iter_presentations(size)]
        found = {
            (i, j): is_presentation_minor(a, b)
            for i, a in enumerate(items)
            for j, b in enumerate(items)
        }
        for (i, j), first in found.items():
            if first is None:
                continue
            for k in range(len(items)):
                second = found[j, k]
                if second is None:
                    continue
                assert found[i, k] is not None
                chained = MinorWitness(second.steps + first.steps)
                assert apply_witness(items[k], chained).key == items[i].key


class TestUniformMinor:
    def test_already_uniform(self):
        assert len(extract_uniform_minor(pres("EENN/NNEE"), 2)) == 0

    def test_trailing_loop(self):
        witness = extract_uniform_minor(pres("ENE/NEE"), 1)
        assert format_witness(witness) == "D 3\n"

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_figure_presentation(self, k):
        p = pres(FIGURE)
        witness = extract_uniform_minor(p, k)
        assert apply_witness(p, witness).key == uniform_presentation(k, 2 * k).key
        assert witness.deletions == p.m - k
        assert witness.contractions == p.r - k

    def test_missing_square(self):
        with pytest.raises(PreconditionError):
            extract_uniform_minor(pres("EENN/NNEE"), 3)

    def test_k_must_be_positive(self):
        with pytest.raises(PreconditionError):
            extract_uniform_minor(pres("EENN/NNEE"), 0)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=1, max_value=3).flatmap(
        lambda k: st.tuples(st.just(k), presentations_with_square(k))
    ))
    def test_reaches_uniform_minor(self, case):
        k, p = case
        witness = extract_uniform_minor(p, k)
        assert apply_witness(p, witness).key == uniform_presentation(k, 2 * k).key
        assert witness.deletions == p.m - k
        assert witness.contractions == p.r - k
