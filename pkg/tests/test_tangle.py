# tests/test_tangle.py
import math

import pytest
from hypothesis import given, strategies as st

from src.errors import InputError, WritheUndefinedError
from src.tangle import (
    BraidTuple, DegenerateFraction, Fraction, canonicalize, fractions_equivalent,
    homogeneous_tuples, parse_fraction, parse_tuple, reduce_fraction_residue, tuple_fraction,
    tuple_from_fraction, tuple_mirror, tuple_normalize_odd, tuple_reverse, tuple_writhe
)

positive_tuples = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(lambda b: BraidTuple(tuple(b)))


# Parsing and validation

@pytest.mark.parametrize('text, entries', [
    ("[4,3,5]", (4, 3, 5)),
    (" [ 4, 3, 5 ] ", (4, 3, 5)),
    ("4,3,5", (4, 3, 5)),
    ("[-1,-2]", (-1, -2)),
    ("[7]", (7,)),
])
def test_parse_tuple(text, entries):
    assert parse_tuple(text).entries == entries


@pytest.mark.parametrize('text', ["", "[]", "[4,,3]", "[a]", "[4;3]", "[4,3,5", "4,3,5]", "[[4,3,5]]"])
def test_parse_tuple_rejects_malformed(text):
    with pytest.raises(InputError):
        parse_tuple(text)


def test_zero_entry_is_reported_by_position():
    with pytest.raises(InputError, match="entry 1 is zero") as info:
        parse_tuple("[0,2]")
    assert info.value.index == 1


def test_mixed_signs_name_the_offending_entry():
    with pytest.raises(InputError, match="mixed signs") as info:
        BraidTuple((3, -2)).require_homogeneous()
    assert info.value.index == 2


def test_tuple_text():
    assert str(BraidTuple((4, 3, 5))) == "[4,3,5]"
    assert BraidTuple((4, 3, 5)).twist_sum == 12
    assert BraidTuple((-1, -2)).is_homogeneous and not BraidTuple((-1, -2)).is_positive


def test_parse_fraction():
    assert parse_fraction("69/16") == Fraction(69, 16)
    assert parse_fraction("-7/2") == Fraction(7, -2)
    assert parse_fraction("10/4") == Fraction(5, 2)
    for text in ("3", "3/0", "0/1", "a/b"):
        with pytest.raises(InputError):
            parse_fraction(text)


# Continued fractions

@pytest.mark.parametrize('entries, p, q', [
    ((4, 3, 5), 69, 16),
    ((1, 1, 2), 5, 3),
    ((3,), 3, 1),
    ((2, 2), 5, 2),
    ((2, 1, 1), 5, 2),
    ((3, 1, 1), 7, 2),
    ((1, 1, 3), 7, 4),
    ((-3,), 3, -1),
])
def test_tuple_fraction(entries, p, q):
    assert tuple_fraction(BraidTuple(entries)) == Fraction(p, q)


def test_degenerate_fractions():
    assert tuple_fraction(BraidTuple((1, -1))) is DegenerateFraction.ZERO
    assert tuple_fraction(BraidTuple((2, 1, -1))) is DegenerateFraction.INFINITY


@pytest.mark.parametrize('fraction, entries', [
    (Fraction(69, 16), (4, 3, 5)),
    (Fraction(5, 3), (1, 1, 2)),
    (Fraction(5, 2), (2, 1, 1)),
    (Fraction(7, 4), (1, 1, 3)),
    (Fraction(7, -2), (-3, -1, -1)),
    (Fraction(1, 1), (1,)),
])
def test_tuple_from_fraction(fraction, entries):
    assert tuple_from_fraction(fraction).entries == entries


def test_tuple_from_fraction_needs_small_q():
    with pytest.raises(InputError):
        tuple_from_fraction(Fraction(5, 7))


def test_reduce_fraction_residue():
    assert reduce_fraction_residue(Fraction(5, 7)) == Fraction(5, 2)
    assert reduce_fraction_residue(Fraction(5, -7)) == Fraction(5, -2)
    assert reduce_fraction_residue(Fraction(1, 5)) == Fraction(1, 1)
    assert reduce_fraction_residue(Fraction(69, 16)) == Fraction(69, 16)


@given(positive_tuples)
def test_fraction_round_trip(t):
    f = tuple_fraction(t)
    assert tuple_fraction(tuple_from_fraction(f)) == f


def reduced_fractions(max_p):
    """Every reduced p/q with 1 <= |q| < p <= max_p"""
    return [Fraction(p, sign * q) for p in range(2, max_p + 1) for q in range(1, p)
            if math.gcd(p, q) == 1 for sign in (1, -1)]


FRACTIONS = reduced_fractions(200)


def test_every_small_fraction_round_trips():
    for f in FRACTIONS:
        t = tuple_from_fraction(f)
        assert len(t) % 2 == 1
        assert t.is_homogeneous and (t.entries[0] > 0) == (f.q > 0)
        assert tuple_fraction(t) == f


def test_equivalence_is_reflexive():
    assert all(fractions_equivalent(f, f) for f in FRACTIONS)


def test_equivalence_is_symmetric():
    small = reduced_fractions(25)
    for f in small:
        for g in small:
            assert fractions_equivalent(f, g) == fractions_equivalent(g, f)


@given(st.sampled_from(FRACTIONS), st.sampled_from(FRACTIONS))
def test_equivalence_is_symmetric_on_samples(f, g):
    assert fractions_equivalent(f, g) == fractions_equivalent(g, f)


@given(positive_tuples, st.booleans())
def test_mirror_negates_fraction(t, negative):
    if negative:
        t = tuple_mirror(t)
    f = tuple_fraction(t)
    assert tuple_fraction(tuple_mirror(t)) == Fraction(f.p, -f.q)


@given(positive_tuples)
def test_normalize_odd_keeps_fraction(t):
    odd = tuple_normalize_odd(t)
    assert len(odd) % 2 == 1
    assert tuple_fraction(odd) == tuple_fraction(t)


def test_normalize_odd_examples():
    assert tuple_normalize_odd(BraidTuple((2, 2))).entries == (2, 1, 1)
    assert tuple_normalize_odd(BraidTuple((3, 1))).entries == (4,)
    assert tuple_normalize_odd(BraidTuple((-2, -2))).entries == (-2, -1, -1)
    assert tuple_normalize_odd(BraidTuple((4, 3, 5))).entries == (4, 3, 5)


# Symmetries

def test_mirror_and_reverse():
    t = BraidTuple((4, 3, 5))
    assert tuple_mirror(t).entries == (-4, -3, -5)
    assert tuple_reverse(t).entries == (5, 3, 4)


def test_canonicalize_mixed_signs():
    assert canonicalize(BraidTuple((3, -2))).entries == (2, 1, 1)
    assert canonicalize(BraidTuple((4, 3, 5))).entries == (4, 3, 5)
    with pytest.raises(InputError):
        canonicalize(BraidTuple((1, -1)))


@pytest.mark.parametrize('first, second, expected', [
    (Fraction(7, 2), Fraction(7, 4), True),
    (Fraction(5, 2), Fraction(5, 3), True),
    (Fraction(3, 1), Fraction(5, 1), False),
    (Fraction(7, 2), Fraction(7, 9), True),
    (Fraction(7, 2), Fraction(7, 3), False),
])
def test_fractions_equivalent(first, second, expected):
    assert fractions_equivalent(first, second) is expected


def test_knot_or_link():
    assert Fraction(69, 16).kind == 'knot'
    assert Fraction(2, 1).kind == 'link'


# Writhe

@pytest.mark.parametrize('entries, w', [
    ((1,), 1),
    ((3,), 3),
    ((1, 1, 1), -3),
    ((-3,), -3),
])
def test_writhe(entries, w):
    assert tuple_writhe(BraidTuple(entries)) == w


def test_writhe_of_link_is_undefined():
    with pytest.raises(WritheUndefinedError):
        tuple_writhe(BraidTuple((2,)))


def test_writhe_of_even_tuple_uses_odd_form():
    assert tuple_writhe(BraidTuple((2, 2))) == tuple_writhe(BraidTuple((2, 1, 1)))


@pytest.mark.parametrize('length', [1, 3, 5])
def test_writhe_under_mirror_and_reversal(length):
    for t in homogeneous_tuples(length, 3):
        if not tuple_fraction(t).is_knot:
            continue
        w = tuple_writhe(t)
        assert tuple_writhe(tuple_mirror(t)) == -w
        assert tuple_writhe(tuple_reverse(t)) == w


def test_homogeneous_tuples():
    assert len(list(homogeneous_tuples(3, 4))) == 64
    assert all(not t.is_positive for t in homogeneous_tuples(2, 2, sign=-1))
