# src/engines/closedform.py
"""
Closed-form evaluation as a sum over the paths of the layered computation tree.

From a level i >= 1 a path continues along three edges, in this order:
    l: c-labelled, down one level
    r: c-labelled, down two levels
    p: d-labelled, down one level
and stops at level 0 or -1. A vertex whose predecessor is d-labelled carries t = 1,
which lowers its twist count by one.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from ..config import CLOSED_FORM_MAX_LENGTH, MAX_TWIST_SUM, logger
from ..errors import ResourceLimitError
from ..coefficients import base_value, level_coeffs
from ..laurent import LaurentPoly2, poly_constant, poly_mirror_substitute
from ..tangle import BraidTuple, tuple_normalize_odd

EDGES = (('l', 'c', 1), ('r', 'c', 2), ('p', 'd', 1))


@dataclass(frozen=True)
class PathSequence:
    """f_1 > f_2 > ... > f_l with f_1 = n; edges[i] is the edge leaving vertices[i]"""
    vertices: Tuple[int, ...]
    edges: Tuple[str, ...]

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple('d' if edge == 'p' else 'c' for edge in self.edges)

    @property
    def leaf(self) -> int:
        return self.vertices[-1]

    def t_flags(self) -> Tuple[int, ...]:
        flags = [0]
        for label in self.labels:
            flags.append(1 if label == 'd' else 0)
        return tuple(flags)


@dataclass(frozen=True)
class PathTerm:
    path: PathSequence
    factors: Tuple[Tuple[str, int, int], ...]  # (coefficient name, level, twist count)
    value: LaurentPoly2

    def label(self) -> str:
        return "".join(f"{name}_{{{level},{k}}}" for name, level, k in self.factors)


def iter_paths(n: int) -> Iterator[PathSequence]:
    """Depth-first, edge order l, r, p"""
    if n < 1:
        raise ValueError("n must be positive")

    def walk(vertices: Tuple[int, ...], edges: Tuple[str, ...]):
        level = vertices[-1]
        if level <= 0:
            yield PathSequence(vertices, edges)
            return
        for name, _, step in EDGES:
            yield from walk(vertices + (level - step,), edges + (name,))

    yield from walk((n,), ())


def enumerate_paths(n: int) -> List[PathSequence]:
    return list(iter_paths(n))


@lru_cache(maxsize=None)
def path_count(n: int) -> int:
    """count(n) = 2 count(n-1) + count(n-2), count(0) = 1, count(1) = 3"""
    if n <= 0:
        return 1
    if n == 1:
        return 3
    return 2 * path_count(n - 1) + path_count(n - 2)


def closed_form_sections(t) -> int:
    """Number of levels the closed form walks; CLOSED_FORM_MAX_LENGTH bounds it"""
    return len(tuple_normalize_odd(BraidTuple.coerce(t)))


def _prepare(t) -> Tuple[BraidTuple, bool]:
    t = BraidTuple.coerce(t).require_homogeneous()
    if t.twist_sum > MAX_TWIST_SUM:
        raise ResourceLimitError(f"twist sum {t.twist_sum} exceeds the limit of {MAX_TWIST_SUM}")
    t = tuple_normalize_odd(t)
    if len(t) > CLOSED_FORM_MAX_LENGTH:
        raise ResourceLimitError(f"closed form limited to {CLOSED_FORM_MAX_LENGTH} sections, got {len(t)}")
    return t.absolute(), not t.is_positive


def _factor(b: Sequence[int], level: int, t_flag: int, edge: str) -> Tuple[str, int, int, LaurentPoly2]:
    k = b[level + 1] - t_flag
    coeffs = level_coeffs(level, k, b[level])
    return edge, level, k, getattr(coeffs, edge)


def path_terms(t) -> List[PathTerm]:
    """Every path's coefficient product, materialized; values are mirrored for negative tuples"""
    t, negate = _prepare(t)
    b = (0, 0) + t.entries
    terms = []
    for path in iter_paths(len(t)):
        flags = path.t_flags()
        value = poly_constant(1)
        factors = []
        for i, edge in enumerate(path.edges):
            name, level, k, coeff = _factor(b, path.vertices[i], flags[i], edge)
            factors.append((name, level, k))
            value = value * coeff
        leaf, leaf_k = path.leaf, b[path.leaf + 1] - flags[-1]
        factors.append(('x', leaf, leaf_k))
        value = value * base_value(leaf, leaf_k)
        if negate:
            value = poly_mirror_substitute(value)
        terms.append(PathTerm(path, tuple(factors), value))
    return terms


def closed_diagram(entries: Sequence[int]) -> LaurentPoly2:
    """Sum over all paths for positive entries; prefix products are shared along the tree"""
    b = (0, 0) + tuple(entries)
    total = [LaurentPoly2()]

    def walk(level: int, t_flag: int, prefix: LaurentPoly2, came_by: Optional[str]):
        if level <= 0:
            assert level == 0 or (came_by == 'r' and t_flag == 0), "leaf -1 must be reached by an r-edge"
            total[0] = total[0] + prefix * base_value(level, b[level + 1] - t_flag)
            return
        k = b[level + 1] - t_flag
        coeffs = level_coeffs(level, k, b[level])
        for name, label, step in EDGES:
            coeff = getattr(coeffs, name)
            if coeff:
                walk(level - step, 1 if label == 'd' else 0, prefix * coeff, name)

    walk(len(b) - 2, 0, poly_constant(1), None)
    return total[0]


def dubrovnik_closed(t) -> LaurentPoly2:
    positive, negate = _prepare(t)
    result = closed_diagram(positive.entries)
    if negate:
        result = poly_mirror_substitute(result)
    logger.debug(f"closed {positive}{' (mirrored)' if negate else ''}: {len(result)} terms")
    return result
