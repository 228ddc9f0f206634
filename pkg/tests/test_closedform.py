# tests/test_closedform.py
from collections import Counter

import pytest

from src.engines.closedform import (
    closed_diagram, dubrovnik_closed, enumerate_paths, path_count, path_terms
)
from src.engines.reduction import reduce_diagram
from src.errors import ResourceLimitError
from src.laurent import LaurentPoly2, poly_mirror_substitute
from src.tangle import homogeneous_tuples, tuple_mirror

GOLDEN_PRODUCTS = [
    "l_{3,5}l_{2,3}l_{1,4}x_{0,0}",
    "l_{3,5}l_{2,3}r_{1,4}x_{-1,0}",
    "l_{3,5}l_{2,3}p_{1,4}x_{0,-1}",
    "l_{3,5}r_{2,3}x_{0,0}",
    "l_{3,5}p_{2,3}l_{1,3}x_{0,0}",
    "l_{3,5}p_{2,3}r_{1,3}x_{-1,0}",
    "l_{3,5}p_{2,3}p_{1,3}x_{0,-1}",
    "r_{3,5}l_{1,4}x_{0,0}",
    "r_{3,5}r_{1,4}x_{-1,0}",
    "r_{3,5}p_{1,4}x_{0,-1}",
    "p_{3,5}l_{2,2}l_{1,4}x_{0,0}",
    "p_{3,5}l_{2,2}r_{1,4}x_{-1,0}",
    "p_{3,5}l_{2,2}p_{1,4}x_{0,-1}",
    "p_{3,5}r_{2,2}x_{0,0}",
    "p_{3,5}p_{2,2}l_{1,3}x_{0,0}",
    "p_{3,5}p_{2,2}r_{1,3}x_{-1,0}",
    "p_{3,5}p_{2,2}p_{1,3}x_{0,-1}",
]


def _brute_force_count(level):
    if level <= 0:
        return 1
    return 2 * _brute_force_count(level - 1) + _brute_force_count(level - 2)


def test_golden_tuple(golden_tuple, golden_poly):
    assert dubrovnik_closed(golden_tuple) == golden_poly


def test_seventeen_paths_for_three_sections():
    assert len(enumerate_paths(3)) == 17


@pytest.mark.parametrize('n', range(1, 13))
def test_path_census(n):
    assert path_count(n) == len(enumerate_paths(n)) == _brute_force_count(n)
    if n >= 2:
        assert path_count(n) == 2 * path_count(n - 1) + path_count(n - 2)


def test_paths_end_at_zero_or_minus_one():
    for path in enumerate_paths(6):
        assert path.vertices[0] == 6
        assert path.leaf in (0, -1)
        assert all(x > y for x, y in zip(path.vertices, path.vertices[1:]))
        if path.leaf == -1:
            assert path.edges[-1] == 'r'


def test_t_flags_follow_d_labels():
    path = enumerate_paths(3)[-1]
    assert path.edges == ('p', 'p', 'p')
    assert path.labels == ('d', 'd', 'd')
    assert path.t_flags() == (0, 1, 1, 1)


def test_table_of_path_products(golden_tuple, golden_poly):
    terms = path_terms(golden_tuple)
    assert [term.label() for term in terms] == GOLDEN_PRODUCTS
    assert Counter(term.label() for term in terms) == Counter(GOLDEN_PRODUCTS)
    assert sum((term.value for term in terms), LaurentPoly2()) == golden_poly


@pytest.mark.parametrize('length', [1, 2, 3, 4, 5])
def test_matches_reduction_on_raw_diagrams(length):
    for t in homogeneous_tuples(length, 3):
        assert closed_diagram(t.entries) == reduce_diagram(t.entries)


def test_negative_tuple_is_mirrored(golden_tuple):
    assert dubrovnik_closed(tuple_mirror(golden_tuple)) == poly_mirror_substitute(dubrovnik_closed(golden_tuple))


def test_length_limit():
    with pytest.raises(ResourceLimitError):
        dubrovnik_closed((1,) * 17)


def test_even_tuple_is_normalized():
    assert dubrovnik_closed((2, 2)) == dubrovnik_closed((2, 1, 1))
