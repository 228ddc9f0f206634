# src/coefficients.py
"""
Coefficient families of the reduction formulas.

A_m, B_m, C_m express the rightmost twist section L_m through L_-, L_0, L_inf:

    P(L_m) = A_m P(L_-) + B_m P(L_0) - C_m P(L_inf)

B_m is a Chebyshev-type polynomial in z alone. Negative m describes the mirrored row
and uses -z in place of z. Conventions for m = 0: B_0 = 1, A_0 = C_0 = 0.

The level coefficients l, r, p of a section at level n with k twists are these
families with the row sign eps_n = (-1)^(n-1) folded in.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly2, a_pow, poly_constant, poly_monomial, poly_zero, z_pow


def binomial(n: int, r: int) -> int:
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


@dataclass(frozen=True)
class CoeffTriple:
    A: LaurentPoly2
    B: LaurentPoly2
    C: LaurentPoly2
    m: int


@dataclass(frozen=True)
class LevelCoeffs:
    l: LaurentPoly2
    r: LaurentPoly2
    p: LaurentPoly2
    level: int
    twist_count: int
    b_prev: int


def _signed_z_power(sign: int, exp: int) -> int:
    """Coefficient sign of (sign*z)^exp"""
    return -1 if sign < 0 and exp % 2 else 1


@lru_cache(maxsize=None)
def coeff_B(m: int) -> LaurentPoly2:
    if m == 0:
        return poly_constant(1)
    sign, size = (1, m) if m > 0 else (-1, -m)
    terms = {}
    for i in range(size // 2 + 1):
        exp = size - 2 * i
        terms[(0, exp)] = _signed_z_power(sign, exp) * binomial(size - i, i)
    return LaurentPoly2(terms)


def coeff_A(m: int) -> LaurentPoly2:
    if m == 0:
        return poly_zero()
    if m < 0:
        return coeff_B(m + 1)
    terms = {}
    for i in range((m - 1) // 2 + 1):
        terms[(0, m - 1 - 2 * i)] = binomial(m - 1 - i, i)
    return LaurentPoly2(terms)


def coeff_C(m: int) -> LaurentPoly2:
    if m == 0:
        return poly_zero()
    sign, size = (1, m) if m > 0 else (-1, -m)
    terms: dict = {}
    for j in range(1, size + 1):
        a_exp = sign * (j - size)
        for i in range((j - 1) // 2 + 1):
            exp = j - 2 * i
            key = (a_exp, exp)
            terms[key] = terms.get(key, 0) + _signed_z_power(sign, exp) * binomial(j - 1 - i, i)
    return LaurentPoly2(terms)


def coeff_triple_recurrent(m: int) -> CoeffTriple:
    """(A_m, B_m, C_m) generated only by the recurrences from the m = +-1, +-2 base values"""
    if m == 0:
        raise ValueError("m must be nonzero")
    z = z_pow(1)
    if m > 0:
        A = {1: poly_constant(1), 2: z}
        B = {1: z, 2: z * z + 1}
        C = {1: z, 2: poly_monomial(1, -1, 1) + z_pow(2)}
        for k in range(3, m + 1):
            A[k] = z * A[k - 1] + A[k - 2]
            B[k] = z * B[k - 1] + B[k - 2]
            C[k] = a_pow(-1) * C[k - 1] + z * B[k - 1]
    else:
        A = {-1: poly_constant(1), -2: -z}
        B = {-1: -z, -2: z * z + 1}
        C = {-1: -z, -2: poly_monomial(-1, 1, 1) + z_pow(2)}
        for k in range(-3, m - 1, -1):
            A[k] = -z * A[k + 1] + A[k + 2]
            B[k] = -z * B[k + 1] + B[k + 2]
            C[k] = -z * C[k + 1] - z * a_pow(-k - 1) + C[k + 2]
    return CoeffTriple(A=A[m], B=B[m], C=C[m], m=m)


@lru_cache(maxsize=4096)
def _level_coeffs(eps: int, k: int, b_prev: int) -> LevelCoeffs:
    level = 1 if eps > 0 else 2
    r = a_pow(eps * b_prev) * coeff_B(eps * k)
    if k == 0:
        return LevelCoeffs(l=poly_zero(), r=r, p=poly_zero(), level=level, twist_count=0, b_prev=b_prev)
    p = coeff_B(eps * (k - 1))
    l = -coeff_C(eps * k)
    return LevelCoeffs(l=l, r=r, p=p, level=level, twist_count=k, b_prev=b_prev)


def level_coeffs(n: int, k: int, b_prev: int) -> LevelCoeffs:
    """l, r, p of the section at level n carrying k twists; b_prev is b_{n-1}"""
    if n < 1 or k < 0:
        raise ValueError(f"level_coeffs needs n >= 1 and k >= 0, got n={n}, k={k}")
    eps = 1 if n % 2 else -1
    cached = _level_coeffs(eps, k, b_prev)
    return LevelCoeffs(l=cached.l, r=cached.r, p=cached.p, level=n, twist_count=k, b_prev=b_prev)


# ========== BASE VALUES ==========

# x_{-1,0}: two unlinked unknots
DELTA = poly_monomial(1, 1, -1) + 1 - poly_monomial(1, -1, -1)

_BASE_VALUES = {
    (0, 0): poly_constant(1),
    (0, -1): a_pow(-1),
    (-1, 0): DELTA,
}


def base_value(level: int, k: int) -> LaurentPoly2:
    """Terminal x_{level,k} of the reduction, level in {0, -1}"""
    try:
        return _BASE_VALUES[(level, k)]
    except KeyError:
        raise ValueError(f"no base value x_{{{level},{k}}}") from None
