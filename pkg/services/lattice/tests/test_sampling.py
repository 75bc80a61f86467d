"""Tests for enumeration and random sampling of presentations."""

import random

import pytest

from services.lattice.domain.errors import PreconditionError
from services.lattice.domain.presentation import count_bases
from services.lattice.domain.sampling import (
    envelope,
    iter_presentations,
    iter_words,
    random_presentation,
    random_presentations,
)
from services.lattice.domain.squares import square_width


def test_iter_words_is_sorted():
    assert list(iter_words(2, 1)) == ["EEN", "ENE", "NEE"]
    assert list(iter_words(0, 0)) == [""]


def test_iter_words_rejects_negative_counts():
    with pytest.raises(PreconditionError):
        list(iter_words(-1, 2))


def test_iter_presentations_of_size_two():
    assert [str(p) for p in iter_presentations(2)] == ["EE/EE", "EN/EN", "EN/NE", "NE/NE", "NN/NN"]


def test_iter_presentations_by_rank():
    found = list(iter_presentations(4, rank=2))
    assert all(p.r == 2 for p in found)
    assert "EENN/NNEE" in {str(p) for p in found}


def test_presentation_counts_are_distinct_pairs():
    for size in range(6):
        keys = [p.key for p in iter_presentations(size)]
        assert len(keys) == len(set(keys))


def test_envelope():
    assert str(envelope("ENEN", "NEEN")) == "ENEN/NEEN"
    assert str(envelope("NEEN", "ENEN")) == "ENEN/NEEN"


def test_envelope_needs_common_end_point():
    with pytest.raises(PreconditionError):
        envelope("EN", "NN")


def test_random_presentation_is_reproducible():
    first = [random_presentation(random.Random(7), 9) for _ in range(3)]
    second = [random_presentation(random.Random(7), 9) for _ in range(3)]
    assert first == second


def test_random_presentation_respects_bounds():
    rng = random.Random(3)
    for _ in range(200):
        p = random_presentation(rng, 8, max_square_width=1, rank=3)
        assert p.size == 8 and p.r == 3
        assert square_width(p) <= 1
        assert count_bases(p) >= 1


def test_random_presentation_square_width_zero():
    rng = random.Random(11)
    for _ in range(50):
        p = random_presentation(rng, 6, max_square_width=0)
        assert p.lower == p.upper


def test_random_presentation_rejects_bad_rank():
    with pytest.raises(PreconditionError):
        random_presentation(random.Random(0), 3, rank=4)


def test_random_presentations_batch():
    batch = random_presentations(5, 6, seed=2, max_square_width=2)
    assert len(batch) == 5
    assert batch == random_presentations(5, 6, seed=2, max_square_width=2)
    assert all(square_width(p) <= 2 for p in batch)
