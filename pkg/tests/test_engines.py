# tests/test_engines.py
import random

import pytest

from src.config import ENGINE_NAMES
from src.engines import ENGINES, cross_check, evaluate
from src.errors import EngineMismatchError, InputError
from src.laurent import a_pow
from src.tangle import (
    BraidTuple, Fraction, fractions_equivalent, homogeneous_tuples, normalized_polynomial,
    tuple_reverse
)


def _sweep(length, max_entry, sign):
    for t in homogeneous_tuples(length, max_entry, sign):
        poly, results = cross_check(t)
        assert set(results) == set(ENGINE_NAMES)
        assert all(value == poly for value in results.values())


def test_every_engine_reproduces_the_golden_polynomial(golden_tuple, golden_poly):
    for name in ENGINE_NAMES:
        assert evaluate(golden_tuple, name) == golden_poly


@pytest.mark.parametrize('sign', [1, -1])
@pytest.mark.parametrize('length', [1, 3, 5])
def test_engines_agree(length, sign):
    _sweep(length, 4, sign)


@pytest.mark.slow
@pytest.mark.parametrize('sign', [1, -1])
def test_engines_agree_on_seven_sections(sign):
    _sweep(7, 4, sign)


def _wide_entry_samples(count=30, seed=2718):
    rng = random.Random(seed)
    samples = []
    for index in range(count):
        sign = 1 if index % 2 == 0 else -1
        length = rng.choice((1, 2, 3, 4, 5))
        samples.append(tuple(sign * rng.randint(1, 8) for _ in range(length)))
    return samples


@pytest.mark.parametrize('entries', _wide_entry_samples())
def test_engines_agree_on_entries_up_to_eight(entries):
    poly, results = cross_check(entries)
    assert set(results) == set(ENGINE_NAMES)
    assert all(value == poly for value in results.values())

def test_reversal_keeps_the_polynomial():
    for length in (1, 3, 5):
        for t in homogeneous_tuples(length, 3):
            assert evaluate(tuple_reverse(t), 'skein') == evaluate(t, 'skein')


def test_unknown_engine():
    with pytest.raises(InputError):
        evaluate((1,), 'magic')


def test_cross_check_reports_disagreement(monkeypatch):
    monkeypatch.setitem(ENGINES, 'closed', lambda t: a_pow(7))
    with pytest.raises(EngineMismatchError):
        cross_check((3,))


@pytest.mark.parametrize('first, second', [
    ((2, 2), (2, 1, 1)),
    ((3, 1, 1), (1, 1, 3)),
])
def test_equivalent_tuples_have_equal_normalized_polynomials(first, second):
    first, second = BraidTuple(first), BraidTuple(second)
    assert normalized_polynomial(first, evaluate(first, 'skein')) == \
        normalized_polynomial(second, evaluate(second, 'reduce'))


def test_equivalence_criterion_examples():
    assert fractions_equivalent(Fraction(7, 2), Fraction(7, 4))
    assert fractions_equivalent(Fraction(5, 2), Fraction(5, 3))
    assert not fractions_equivalent(Fraction(3, 1), Fraction(5, 1))
