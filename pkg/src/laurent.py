# src/laurent.py
"""
Exact arithmetic in Z[a^{+-1}, z^{+-1}].

A polynomial is a sparse map (a_exp, z_exp) -> int with zero coefficients removed,
so structural equality is semantic equality.

>>> poly_format(poly_parse("a z^-1 + 1 - a^-1 z^-1", "plain"), "plain")
'-a^-1 z^-1 + a z^-1 + 1'
"""
from __future__ import annotations

import json
import operator
import re
from types import MappingProxyType
from typing import Iterator, Mapping, Tuple, Union

from .errors import PolyParseError

Exponents = Tuple[int, int]
Scalar = Union[int, "LaurentPoly2"]

STYLES = ('plain', 'latex', 'json')


class LaurentPoly2:
    """Immutable two-variable Laurent polynomial with integer coefficients"""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        cleaned = {}
        for (a_exp, z_exp), coeff in (terms or {}).items():
            coeff = operator.index(coeff)
            if coeff:
                cleaned[(operator.index(a_exp), operator.index(z_exp))] = coeff
        self._terms = cleaned
        self._hash = None

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[int, int, int]]:
        """(a_exp, z_exp, coeff) in print order: ascending z, then ascending a"""
        for a_exp, z_exp in sorted(self._terms, key=lambda e: (e[1], e[0])):
            yield a_exp, z_exp, self._terms[(a_exp, z_exp)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = poly_constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif set(self._terms) == {(0, 0)}:
                self._hash = hash(self._terms[(0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Scalar) -> LaurentPoly2:
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> LaurentPoly2:
        return poly_sub(self, _coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentPoly2:
        return poly_sub(_coerce(other), self)

    def __neg__(self) -> LaurentPoly2:
        return LaurentPoly2({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: Scalar) -> LaurentPoly2:
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly2:
        if exponent < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have negative powers")
            (a_exp, z_exp), coeff = next(iter(self._terms.items()))
            return poly_monomial(coeff ** -exponent, -a_exp * -exponent, -z_exp * -exponent)
        result = poly_constant(1)
        for _ in range(exponent):
            result = poly_mul(result, self)
        return result

    def __repr__(self) -> str:
        return f"LaurentPoly2('{poly_format(self, 'plain')}')"

    def __str__(self) -> str:
        return poly_format(self, 'plain')


def _coerce(value: Scalar) -> LaurentPoly2:
    if isinstance(value, LaurentPoly2):
        return value
    if isinstance(value, int):
        return poly_constant(value)
    raise TypeError(f"cannot combine LaurentPoly2 with {type(value).__name__}")


# ========== RING OPERATIONS ==========

def poly_zero() -> LaurentPoly2:
    return LaurentPoly2()


def poly_monomial(coeff: int, a_exp: int, z_exp: int) -> LaurentPoly2:
    return LaurentPoly2({(a_exp, z_exp): coeff})


def poly_constant(value: int) -> LaurentPoly2:
    return poly_monomial(value, 0, 0)


def a_pow(exp: int) -> LaurentPoly2:
    return poly_monomial(1, exp, 0)


def z_pow(exp: int) -> LaurentPoly2:
    return poly_monomial(1, 0, exp)


def poly_add(x: LaurentPoly2, y: LaurentPoly2) -> LaurentPoly2:
    terms = dict(x.terms)
    for exps, coeff in y.terms.items():
        terms[exps] = terms.get(exps, 0) + coeff
    return LaurentPoly2(terms)


def poly_sub(x: LaurentPoly2, y: LaurentPoly2) -> LaurentPoly2:
    terms = dict(x.terms)
    for exps, coeff in y.terms.items():
        terms[exps] = terms.get(exps, 0) - coeff
    return LaurentPoly2(terms)


def poly_mul(x: LaurentPoly2, y: LaurentPoly2) -> LaurentPoly2:
    terms: dict = {}
    for (xa, xz), xc in x.terms.items():
        for (ya, yz), yc in y.terms.items():
            key = (xa + ya, xz + yz)
            terms[key] = terms.get(key, 0) + xc * yc
    return LaurentPoly2(terms)


def poly_mirror_substitute(x: LaurentPoly2) -> LaurentPoly2:
    """a -> a^-1, z -> -z"""
    return LaurentPoly2({(-a_exp, z_exp): -c if z_exp % 2 else c
                         for (a_exp, z_exp), c in x.terms.items()})


def poly_collapse_a(x: LaurentPoly2) -> LaurentPoly2:
    """Substitute a = 1"""
    terms: dict = {}
    for (_, z_exp), coeff in x.terms.items():
        terms[(0, z_exp)] = terms.get((0, z_exp), 0) + coeff
    return LaurentPoly2(terms)


# ========== RENDERING ==========

def _plain_factor(var: str, exp: int) -> str:
    return var if exp == 1 else f"{var}^{exp}"


def _latex_factor(var: str, exp: int) -> str:
    return var if exp == 1 else f"{var}^{{{exp}}}"


def _render(x: LaurentPoly2, factor, joiner: str) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for a_exp, z_exp, coeff in x.items():
        factors = [factor(v, e) for v, e in (('a', a_exp), ('z', z_exp)) if e]
        body = joiner.join(factors)
        magnitude = abs(coeff)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}{joiner}{body}"
        if not parts:
            parts.append(f"-{text}" if coeff < 0 else text)
        else:
            parts.append(f" - {text}" if coeff < 0 else f" + {text}")
    return "".join(parts)


def poly_format(x: LaurentPoly2, style: str = 'plain') -> str:
    if style == 'plain':
        return _render(x, _plain_factor, ' ')
    if style == 'latex':
        return _render(x, _latex_factor, '')
    if style == 'json':
        return json.dumps(poly_to_records(x), separators=(',', ':'))
    raise ValueError(f"unknown style {style!r}")


def poly_to_records(x: LaurentPoly2) -> list:
    return [{'a_exp': a_exp, 'z_exp': z_exp, 'coeff': str(coeff)}
            for a_exp, z_exp, coeff in x.items()]


# ========== PARSING ==========

_WS = re.compile(r'\s*')
_COEFF = re.compile(r'\d+')
_EXPONENT = re.compile(r'[+-]?\d+')


def _parse_term(text: str, pos: int) -> Tuple[int, int, int, int]:
    """Parse `[coeff] factor*` starting at pos; returns (coeff, a_exp, z_exp, new_pos)"""
    coeff, a_exp, z_exp = 1, 0, 0
    seen = False
    match = _COEFF.match(text, pos)
    if match:
        coeff = int(match.group())
        pos = match.end()
        seen = True
    while True:
        look = _WS.match(text, pos).end()
        if look < len(text) and text[look] == '*':
            look = _WS.match(text, look + 1).end()
        if look >= len(text) or text[look] not in 'az':
            break
        var = text[look]
        pos = look + 1
        exp = 1
        if pos < len(text) and text[pos] == '^':
            match = _EXPONENT.match(text, pos + 1)
            if not match:
                raise PolyParseError("expected integer exponent", pos + 1)
            exp = int(match.group())
            pos = match.end()
        if var == 'a':
            a_exp += exp
        else:
            z_exp += exp
        seen = True
    if not seen:
        raise PolyParseError("expected term", pos)
    return coeff, a_exp, z_exp, pos


def _parse_plain(text: str) -> LaurentPoly2:
    pos = _WS.match(text).end()
    if pos == len(text):
        raise PolyParseError("empty polynomial", pos)
    sign = 1
    if text[pos] in '+-':
        sign = -1 if text[pos] == '-' else 1
        pos = _WS.match(text, pos + 1).end()
    terms: dict = {}
    while True:
        coeff, a_exp, z_exp, pos = _parse_term(text, pos)
        terms[(a_exp, z_exp)] = terms.get((a_exp, z_exp), 0) + sign * coeff
        pos = _WS.match(text, pos).end()
        if pos == len(text):
            break
        if text[pos] not in '+-':
            raise PolyParseError(f"expected '+' or '-', found {text[pos]!r}", pos)
        sign = -1 if text[pos] == '-' else 1
        pos = _WS.match(text, pos + 1).end()
        if pos == len(text):
            raise PolyParseError("dangling operator", pos)
    return LaurentPoly2(terms)


def _record_offsets(text: str) -> list:
    """Character offset of every element of an already validated JSON list"""
    decoder = json.JSONDecoder()
    pos = _WS.match(text, 0).end() + 1
    offsets = []
    while True:
        pos = _WS.match(text, pos).end()
        if text[pos] == ']':
            return offsets
        offsets.append(pos)
        _, pos = decoder.raw_decode(text, pos)
        pos = _WS.match(text, pos).end()
        if text[pos] == ',':
            pos += 1


def _json_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"expected an integer, got {value!r}")
    return int(value)


def _parse_json(text: str) -> LaurentPoly2:
    try:
        records = json.loads(text)
    except json.JSONDecodeError as e:
        raise PolyParseError(e.msg, e.pos) from e
    if not isinstance(records, list):
        raise PolyParseError("expected a list of terms", 0)
    terms: dict = {}
    offsets = _record_offsets(text)
    for number, record in enumerate(records):
        try:
            key = (_json_int(record['a_exp']), _json_int(record['z_exp']))
            coeff = _json_int(record['coeff'])
        except (KeyError, TypeError, ValueError) as e:
            raise PolyParseError(f"bad term #{number}: {e}", offsets[number]) from e
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly2(terms)


def poly_parse(text: str, style: str = 'plain') -> LaurentPoly2:
    if style == 'plain':
        stripped = text.strip()
        if stripped == '0':
            return poly_zero()
        return _parse_plain(text)
    if style == 'json':
        return _parse_json(text)
    raise ValueError(f"unknown style {style!r}")
