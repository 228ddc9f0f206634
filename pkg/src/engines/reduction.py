# src/engines/reduction.py
"""
Length-reducing evaluation.

x(n, k) is the polynomial of D[b1, ..., b_{n-1}, k]. Removing the rightmost section
gives

    x(n, k) = l * x(n-1, b_{n-1}) + r * x(n-2, b_{n-2}) + p * x(n-1, b_{n-1} - 1)

with (l, r, p) = level_coeffs(n, k, b_{n-1}), b_0 = b_{-1} = 0 and the terminal
values x(0, 0) = 1, x(0, -1) = a^-1, x(-1, 0) = delta.
"""
from __future__ import annotations

from typing import Dict, Sequence, Tuple

from ..config import MAX_TWIST_SUM, logger
from ..errors import ResourceLimitError
from ..coefficients import base_value, level_coeffs
from ..laurent import LaurentPoly2, poly_mirror_substitute
from ..tangle import BraidTuple, tuple_normalize_odd


def reduce_diagram(entries: Sequence[int]) -> LaurentPoly2:
    """P of D[entries] for positive entries of any length, no parity normalization"""
    b = (0, 0) + tuple(entries)  # b[level + 1] is b_level, so b_{-1} = b_0 = 0
    n = len(entries)

    def entry(level: int) -> int:
        return b[level + 1]

    memo: Dict[Tuple[int, int], LaurentPoly2] = {}

    def x(level: int, k: int) -> LaurentPoly2:
        if level <= 0:
            return base_value(level, k)
        key = (level, k)
        if key not in memo:
            coeffs = level_coeffs(level, k, entry(level - 1))
            total = coeffs.r * x(level - 2, entry(level - 2))
            if k:
                total = (total + coeffs.l * x(level - 1, entry(level - 1))
                         + coeffs.p * x(level - 1, entry(level - 1) - 1))
            memo[key] = total
        return memo[key]

    # bottom-up so the recursion above never runs deeper than two levels
    for level in range(1, n):
        x(level, entry(level))
        x(level, entry(level) - 1)
    return x(n, entry(n))


def dubrovnik_reduce(t) -> LaurentPoly2:
    t = BraidTuple.coerce(t).require_homogeneous()
    if t.twist_sum > MAX_TWIST_SUM:
        raise ResourceLimitError(f"twist sum {t.twist_sum} exceeds the limit of {MAX_TWIST_SUM}")
    t = tuple_normalize_odd(t)
    if t.is_positive:
        result = reduce_diagram(t.entries)
    else:
        result = poly_mirror_substitute(reduce_diagram(t.absolute().entries))
    logger.debug(f"reduce {t}: {len(result)} terms")
    return result
