# src/tangle.py
"""
Braid-form tuples of rational knots, their continued fractions and symmetries.

A tuple (b1, ..., bn) describes the standard diagram D[b1, ..., bn]; its fraction is
b1 + 1/(b2 + ... + 1/bn).
"""
from __future__ import annotations

import enum
import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

from .config import logger
from .errors import InputError, WritheUndefinedError
from .laurent import LaurentPoly2, a_pow
from .utils import plat_diagram


@dataclass(frozen=True)
class BraidTuple:
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(b) for b in self.entries)
        object.__setattr__(self, 'entries', entries)
        if not entries:
            raise InputError("tuple must have at least one entry")
        for index, b in enumerate(entries, start=1):
            if b == 0:
                raise InputError(f"entry {index} is zero", index=index)

    @classmethod
    def coerce(cls, value: Union['BraidTuple', Iterable[int]]) -> 'BraidTuple':
        return value if isinstance(value, cls) else cls(tuple(value))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "[" + ",".join(str(b) for b in self.entries) + "]"

    @property
    def is_homogeneous(self) -> bool:
        return all(b > 0 for b in self.entries) or all(b < 0 for b in self.entries)

    @property
    def is_positive(self) -> bool:
        return self.entries[0] > 0 and self.is_homogeneous

    @property
    def twist_sum(self) -> int:
        return sum(abs(b) for b in self.entries)

    def require_homogeneous(self) -> 'BraidTuple':
        first = self.entries[0] > 0
        for index, b in enumerate(self.entries, start=1):
            if (b > 0) != first:
                raise InputError(f"entry {index} has the opposite sign of entry 1 (mixed signs)",
                                 index=index)
        return self

    def absolute(self) -> 'BraidTuple':
        return BraidTuple(tuple(abs(b) for b in self.entries))


@dataclass(frozen=True)
class Fraction:
    """Reduced p/q with p > 0"""
    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0:
            raise InputError(f"fraction numerator must be positive, got {self.p}")
        if self.q == 0:
            raise InputError("fraction denominator must be nonzero")
        if math.gcd(self.p, self.q) != 1:
            raise InputError(f"fraction {self.p}/{self.q} is not reduced")

    @property
    def is_knot(self) -> bool:
        return self.p % 2 == 1

    @property
    def kind(self) -> str:
        return 'knot' if self.is_knot else 'link'

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


class DegenerateFraction(enum.Enum):
    """The trivial tangles: continued fraction equal to 0 or infinity"""
    ZERO = '0'
    INFINITY = 'inf'


# ========== TEXT FORMATS ==========

_TUPLE_RE = re.compile(r'^\s*(\[)?\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*(?(1)\])\s*$')
_FRACTION_RE = re.compile(r'^\s*(-?\d+)\s*/\s*(-?\d+)\s*$')


def parse_tuple(text: str) -> BraidTuple:
    match = _TUPLE_RE.match(text)
    if not match:
        raise InputError(f"malformed tuple {text!r}, expected e.g. [4,3,5]")
    return BraidTuple(tuple(int(part) for part in match.group(2).split(',')))


def parse_fraction(text: str) -> Fraction:
    match = _FRACTION_RE.match(text)
    if not match:
        raise InputError(f"malformed fraction {text!r}, expected p/q")
    p, q = int(match.group(1)), int(match.group(2))
    if q == 0:
        raise InputError("fraction denominator must be nonzero")
    if p < 0:
        p, q = -p, -q
    g = math.gcd(p, q)
    if g == 0:
        raise InputError("fraction 0/0 is undefined")
    return Fraction(p // g, q // g)


# ========== OPERATIONS ==========

def tuple_fraction(t: BraidTuple) -> Union[Fraction, DegenerateFraction]:
    entries = BraidTuple.coerce(t).entries
    num, den = entries[-1], 1
    for b in reversed(entries[:-1]):
        num, den = b * num + den, num
    if den == 0:
        return DegenerateFraction.INFINITY
    if num == 0:
        return DegenerateFraction.ZERO
    g = math.gcd(num, den)
    num, den = num // g, den // g
    if num < 0:
        num, den = -num, -den
    return Fraction(num, den)


def tuple_normalize_odd(t: BraidTuple) -> BraidTuple:
    t = BraidTuple.coerce(t)
    if len(t) % 2 == 1:
        return t
    sign = 1 if t.entries[0] > 0 else -1
    body = [abs(b) for b in t.entries]
    if body[-1] > 1:
        body[-1:] = [body[-1] - 1, 1]
    else:
        body[-2:] = [body[-2] + 1]
    return BraidTuple(tuple(sign * b for b in body))


def tuple_from_fraction(f: Fraction) -> BraidTuple:
    if abs(f.q) > f.p:
        raise InputError(f"fraction {f} has |q| > p; reduce q modulo p first")
    sign = 1 if f.q > 0 else -1
    num, den = f.p, abs(f.q)
    quotients = []
    while den:
        quotients.append(num // den)
        num, den = den, num % den
    return tuple_normalize_odd(BraidTuple(tuple(sign * b for b in quotients)))


def reduce_fraction_residue(f: Fraction) -> Fraction:
    """Representative of K(p/q) with |q| <= p, keeping the sign of q"""
    if abs(f.q) <= f.p:
        return f
    if f.p == 1:
        return Fraction(1, 1 if f.q > 0 else -1)
    sign = 1 if f.q > 0 else -1
    reduced = Fraction(f.p, sign * (abs(f.q) % f.p))
    logger.info(f"Reduced fraction {f} to {reduced}")
    return reduced


def tuple_mirror(t: BraidTuple) -> BraidTuple:
    return BraidTuple(tuple(-b for b in BraidTuple.coerce(t).entries))


def tuple_reverse(t: BraidTuple) -> BraidTuple:
    return BraidTuple(tuple(reversed(BraidTuple.coerce(t).entries)))


def canonicalize(t: BraidTuple) -> BraidTuple:
    """Re-expand any tuple (mixed signs allowed) through its fraction"""
    t = BraidTuple.coerce(t)
    if t.is_homogeneous:
        return t
    fraction = tuple_fraction(t)
    if isinstance(fraction, DegenerateFraction):
        raise InputError(f"tuple {t} is a trivial tangle (fraction {fraction.value})")
    canonical = tuple_from_fraction(reduce_fraction_residue(fraction))
    logger.info(f"Canonicalized {t} to {canonical} via {fraction}")
    return canonical


def fractions_equivalent(f1: Fraction, f2: Fraction) -> bool:
    if f1.p != f2.p:
        return False
    p = f1.p
    q1, q2 = f1.q % p, f2.q % p
    return q1 == q2 or (q1 * q2) % p == 1 % p


def tuple_writhe(t: BraidTuple) -> int:
    t = BraidTuple.coerce(t).require_homogeneous()
    fraction = tuple_fraction(t)
    if not fraction.is_knot:
        raise WritheUndefinedError("writhe undefined for 2-component links without orientation choice")
    return plat_diagram.writhe(tuple_normalize_odd(t).entries)


def normalized_polynomial(t: BraidTuple, P: LaurentPoly2) -> LaurentPoly2:
    return a_pow(-tuple_writhe(t)) * P


def homogeneous_tuples(length: int, max_entry: int, sign: int = 1) -> Iterable[BraidTuple]:
    """Every tuple of the given length with entries in 1..max_entry, times sign"""
    for entries in itertools.product(range(1, max_entry + 1), repeat=length):
        yield BraidTuple(tuple(sign * b for b in entries))

