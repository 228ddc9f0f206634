# src/engines/skein.py
"""
Skein recursion over standard braid-form diagrams.

Each rule rewrites P[b1, ..., bn] as a weighted sum of diagrams that are shorter or
carry fewer twists. Rules come in two tables, one for positive and one for negative
tuples; rules tied to a fixed length take precedence over the generic ones, whose
pattern only constrains a prefix of the tuple. The empty tuple stands for the
constant 1.

Evaluation runs on an explicit stack so long twist sections do not hit the
interpreter recursion limit.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..config import MAX_TWIST_SUM, logger
from ..errors import EngineMismatchError, ResourceLimitError
from ..laurent import LaurentPoly2, a_pow, poly_constant, poly_mirror_substitute, z_pow
from ..tangle import BraidTuple, tuple_normalize_odd

Entries = Tuple[int, ...]
Term = Tuple[LaurentPoly2, Entries]

ONE = poly_constant(1)
A = a_pow(1)
Z = z_pow(1)
# P[2] = P[1,1], the Hopf link diagram
HOPF = (z_pow(-1) * A - z_pow(-1) * a_pow(-1) + 1
        - Z * a_pow(-1) + Z * A)


@dataclass(frozen=True)
class SkeinRule:
    name: str
    guard: Callable[[Entries], bool]
    expand: Callable[[Entries], List[Term]]
    length: Optional[int] = None
    min_length: int = 1

    def matches(self, b: Entries) -> bool:
        if self.length is not None and len(b) != self.length:
            return False
        return len(b) >= self.min_length and self.guard(b)


def _fixed(name: str, length: int, guard, expand) -> SkeinRule:
    return SkeinRule(name, guard, expand, length=length, min_length=length)


def _generic(name: str, min_length: int, guard, expand) -> SkeinRule:
    return SkeinRule(name, guard, expand, min_length=min_length)


POSITIVE_RULES: List[SkeinRule] = [
    _fixed('[1]', 1, lambda b: b[0] == 1, lambda b: [(A, ())]),
    _fixed('[2]', 1, lambda b: b[0] == 2, lambda b: [(HOPF, ())]),
    _fixed('[b1]', 1, lambda b: b[0] >= 3, lambda b: [
        (ONE, (b[0] - 2,)),
        (-Z * a_pow(1 - b[0]), ()),
        (Z, (b[0] - 1,))]),

    _fixed('[1,1]', 2, lambda b: b == (1, 1), lambda b: [(HOPF, ())]),
    _fixed('[1,2]', 2, lambda b: b == (1, 2), lambda b: [
        (a_pow(-1) - Z * HOPF + Z * a_pow(2), ())]),
    _fixed('[2,1]', 2, lambda b: b == (2, 1), lambda b: [
        (A - Z * a_pow(-2), ()),
        (Z, (1, 1))]),
    _fixed('[b1,1]', 2, lambda b: b[0] >= 3 and b[1] == 1, lambda b: [
        (ONE, (b[0] + 1,))]),

    _fixed('[1,1,b3]', 3, lambda b: b[0] == 1 and b[1] == 1, lambda b: [
        (a_pow(-b[2]), ()),
        (-Z, (b[2] + 1,)),
        (Z * A, (b[2],))]),

    _fixed('[1,1,b3,1]', 4, lambda b: b[0] == 1 and b[1] == 1 and b[3] == 1, lambda b: [
        (a_pow(-1 - b[2]), ()),
        (-Z, (b[2] + 1, 1)),
        (Z * A, (b[2], 1))]),

    _generic('[1,1,b3,1,b5,...]', 5, lambda b: b[0] == 1 and b[1] == 1 and b[3] == 1, lambda b: [
        (a_pow(-b[2]), (1 + b[4],) + b[5:]),
        (-Z, (b[2] + 1, 1) + b[4:]),
        (Z * A, (b[2], 1) + b[4:])]),
    _generic('[1,1,b3,b4,...]', 4, lambda b: b[0] == 1 and b[1] == 1 and b[3] >= 2, lambda b: [
        (a_pow(-b[2]), (1, b[3] - 1) + b[4:]),
        (-Z, (b[2] + 1,) + b[3:]),
        (Z * A, b[2:])]),
    _generic('[2,1,b3,...]', 3, lambda b: b[0] == 2 and b[1] == 1, lambda b: [
        (A, b[2:]),
        (-Z * a_pow(-1), (b[2] + 1,) + b[3:]),
        (Z, (1, 1) + b[2:])]),
    _generic('[1,2,b3,...]', 3, lambda b: b[0] == 1 and b[1] == 2, lambda b: [
        (ONE, (b[2] + 1,) + b[3:]),
        (-Z, (1, 1) + b[2:]),
        (Z * a_pow(2), b[2:])]),
    _generic('[1,b2,...]', 2, lambda b: b[0] == 1 and b[1] >= 3, lambda b: [
        (ONE, (1, b[1] - 2) + b[2:]),
        (-Z, (1, b[1] - 1) + b[2:]),
        (Z * a_pow(b[1]), b[2:])]),
    _generic('[2,b2,...]', 2, lambda b: b[0] == 2 and b[1] >= 2, lambda b: [
        (a_pow(b[1]), b[2:]),
        (-Z * a_pow(-1), (1, b[1] - 1) + b[2:]),
        (Z, (1,) + b[1:])]),
    _generic('[b1,1,b3,...]', 3, lambda b: b[0] >= 3 and b[1] == 1, lambda b: [
        (ONE, (b[0] - 2,) + b[1:]),
        (-Z * a_pow(1 - b[0]), (b[2] + 1,) + b[3:]),
        (Z, (b[0] - 1,) + b[1:])]),
    _generic('[b1,b2,...]', 2, lambda b: b[0] >= 3 and b[1] >= 2, lambda b: [
        (ONE, (b[0] - 2,) + b[1:]),
        (-Z * a_pow(1 - b[0]), (1, b[1] - 1) + b[2:]),
        (Z, (b[0] - 1,) + b[1:])]),
]

NEGATIVE_RULES: List[SkeinRule] = [
    _fixed('[-1]', 1, lambda b: b[0] == -1, lambda b: [(a_pow(-1), ())]),
    _fixed('[-2]', 1, lambda b: b[0] == -2, lambda b: [(HOPF, ())]),
    _fixed('[b1]', 1, lambda b: b[0] <= -3, lambda b: [
        (ONE, (b[0] + 2,)),
        (Z * a_pow(-1 - b[0]), ()),
        (-Z, (b[0] + 1,))]),

    _fixed('[-1,-1]', 2, lambda b: b == (-1, -1), lambda b: [(HOPF, ())]),
    _fixed('[-1,-2]', 2, lambda b: b == (-1, -2), lambda b: [
        (A + Z * HOPF - Z * a_pow(-2), ())]),
    _fixed('[-2,-1]', 2, lambda b: b == (-2, -1), lambda b: [
        (a_pow(-1) + Z * a_pow(2), ()),
        (-Z, (-1, -1))]),
    _fixed('[b1,-1]', 2, lambda b: b[0] <= -3 and b[1] == -1, lambda b: [
        (ONE, (b[0] - 1,))]),

    _fixed('[-1,-1,b3]', 3, lambda b: b[0] == -1 and b[1] == -1, lambda b: [
        (a_pow(-b[2]), ()),
        (Z, (b[2] - 1,)),
        (-Z * a_pow(-1), (b[2],))]),

    _fixed('[-1,-1,b3,-1]', 4, lambda b: b[0] == -1 and b[1] == -1 and b[3] == -1, lambda b: [
        (a_pow(1 - b[2]), ()),
        (Z, (b[2] - 1, -1)),
        (-Z * a_pow(-1), (b[2], -1))]),

    _generic('[-1,-1,b3,-1,b5,...]', 5, lambda b: b[0] == -1 and b[1] == -1 and b[3] == -1, lambda b: [
        (a_pow(-b[2]), (b[4] - 1,) + b[5:]),
        (Z, (b[2] - 1, -1) + b[4:]),
        (-Z * a_pow(-1), (b[2], -1) + b[4:])]),
    _generic('[-1,-1,b3,b4,...]', 4, lambda b: b[0] == -1 and b[1] == -1 and b[3] <= -2, lambda b: [
        (a_pow(-b[2]), (-1, b[3] + 1) + b[4:]),
        (Z, (b[2] - 1,) + b[3:]),
        (-Z * a_pow(-1), b[2:])]),
    _generic('[-2,-1,b3,...]', 3, lambda b: b[0] == -2 and b[1] == -1, lambda b: [
        (a_pow(-1), b[2:]),
        (Z * A, (b[2] - 1,) + b[3:]),
        (-Z, (-1, -1) + b[2:])]),
    _generic('[-1,-2,b3,...]', 3, lambda b: b[0] == -1 and b[1] == -2, lambda b: [
        (ONE, (b[2] - 1,) + b[3:]),
        (Z, (-1, -1) + b[2:]),
        (-Z * a_pow(-2), b[2:])]),
    _generic('[-1,b2,...]', 2, lambda b: b[0] == -1 and b[1] <= -3, lambda b: [
        (ONE, (-1, b[1] + 2) + b[2:]),
        (Z, (-1, b[1] + 1) + b[2:]),
        (-Z * a_pow(b[1]), b[2:])]),
    _generic('[-2,b2,...]', 2, lambda b: b[0] == -2 and b[1] <= -2, lambda b: [
        (a_pow(b[1]), b[2:]),
        (Z * A, (-1, b[1] + 1) + b[2:]),
        (-Z, (-1,) + b[1:])]),
    _generic('[b1,-1,b3,...]', 3, lambda b: b[0] <= -3 and b[1] == -1, lambda b: [
        (ONE, (b[0] + 2,) + b[1:]),
        (Z * a_pow(-1 - b[0]), (b[2] - 1,) + b[3:]),
        (-Z, (b[0] + 1,) + b[1:])]),
    _generic('[b1,b2,...]', 2, lambda b: b[0] <= -3 and b[1] <= -2, lambda b: [
        (ONE, (b[0] + 2,) + b[1:]),
        (Z * a_pow(-b[0] - 1), (-1, b[1] + 1) + b[2:]),
        (-Z, (b[0] + 1,) + b[1:])]),
]


class SkeinMemo:
    """Insert-only map from (length, entries) to the polynomial of that diagram"""

    def __init__(self):
        self._values: Dict[Tuple[int, Entries], LaurentPoly2] = {}
        self._lock = threading.Lock()

    def get(self, entries: Entries) -> Optional[LaurentPoly2]:
        return self._values.get((len(entries), entries))

    def __contains__(self, entries: Entries) -> bool:
        return (len(entries), entries) in self._values

    def insert(self, entries: Entries, value: LaurentPoly2) -> LaurentPoly2:
        with self._lock:
            return self._values.setdefault((len(entries), entries), value)

    def __len__(self) -> int:
        return len(self._values)


def match_rule(entries: Entries) -> SkeinRule:
    rules = POSITIVE_RULES if entries[0] > 0 else NEGATIVE_RULES
    matched = [rule for rule in rules if rule.matches(entries)]
    if len(matched) != 1:
        raise AssertionError(f"{len(matched)} skein rules match {list(entries)}: "
                             f"{[rule.name for rule in matched]}")
    return matched[0]


def skein_expand(entries: Sequence[int]) -> Tuple[str, List[Term]]:
    """One rewriting step: the rule name and its weighted sub-diagrams"""
    entries = tuple(entries)
    rule = match_rule(entries)
    return rule.name, rule.expand(entries)


def evaluate_diagram(entries: Sequence[int], memo: Optional[SkeinMemo] = None) -> LaurentPoly2:
    """P of D[entries] without parity normalization; entries sign-homogeneous and nonzero"""
    memo = memo if memo is not None else SkeinMemo()
    memo.insert((), ONE)
    root = tuple(entries)
    expansions: Dict[Entries, List[Term]] = {}
    stack = [root]
    while stack:
        current = stack[-1]
        if current in memo:
            stack.pop()
            continue
        if current not in expansions:
            expansions[current] = match_rule(current).expand(current)
        pending = [sub for _, sub in expansions[current] if sub not in memo]
        if pending:
            stack.extend(pending)
            continue
        total = LaurentPoly2()
        for coeff, sub in expansions.pop(current):
            total = total + coeff * memo.get(sub)
        memo.insert(current, total)
        stack.pop()
    return memo.get(root)


def evaluate_uncached(entries: Sequence[int]) -> LaurentPoly2:
    """Plain recursive evaluation; exponential, for checking the memo on small tuples"""
    entries = tuple(entries)
    if not entries:
        return ONE
    total = LaurentPoly2()
    for coeff, sub in match_rule(entries).expand(entries):
        total = total + coeff * evaluate_uncached(sub)
    return total


def dubrovnik_skein(t, memo: Optional[SkeinMemo] = None, check_mirror: bool = True) -> LaurentPoly2:
    """
    Dubrovnik polynomial of D[t] by the skein recursion.

    Even-length tuples are first rewritten to odd length. Negative tuples are evaluated
    with the negative rule table and, when check_mirror is set, compared against the
    mirror substitution of the positive result.
    """
    t = BraidTuple.coerce(t).require_homogeneous()
    if t.twist_sum > MAX_TWIST_SUM:
        raise ResourceLimitError(f"twist sum {t.twist_sum} exceeds the limit of {MAX_TWIST_SUM}")
    t = tuple_normalize_odd(t)
    result = evaluate_diagram(t.entries, memo)
    if t.entries[0] < 0 and check_mirror:
        shortcut = poly_mirror_substitute(evaluate_diagram(t.absolute().entries, memo))
        if shortcut != result:
            raise EngineMismatchError(f"negative skein rules disagree with the mirror of {t.absolute()}")
    logger.debug(f"skein {t}: {len(result)} terms")
    return result
