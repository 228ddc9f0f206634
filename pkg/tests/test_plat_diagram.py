# tests/test_plat_diagram.py
import pytest

from src.tangle import homogeneous_tuples, tuple_fraction
from src.utils.plat_diagram import braid_word, component_count, trace_components, writhe


def test_braid_word_alternates_generators():
    assert braid_word((2, 1, 3)) == [(2, 1), (2, 1), (1, -1), (2, 1), (2, 1), (2, 1)]
    assert braid_word((-1,)) == [(2, -1)]


def test_even_length_is_rejected():
    with pytest.raises(ValueError):
        braid_word((2, 2))


@pytest.mark.parametrize('length', [1, 3, 5])
def test_component_count_follows_numerator_parity(length):
    for t in homogeneous_tuples(length, 4):
        expected = 1 if tuple_fraction(t).is_knot else 2
        assert component_count(t.entries) == expected


def test_every_crossing_is_passed_twice():
    for component in trace_components(braid_word((4, 3, 5))):
        assert all(len(directions) == 2 for directions in component.values())


def test_writhe_needs_a_knot():
    with pytest.raises(ValueError):
        writhe((2,))


def test_writhe_of_golden_tuple_is_bounded_by_crossings():
    w = writhe((4, 3, 5))
    assert abs(w) <= 12
    assert w % 2 == 0
