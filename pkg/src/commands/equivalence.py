# src/commands/equivalence.py
from typing import Optional, Tuple

from ..config import logger
from ..engines import cross_check
from ..messages import msg
from ..tangle import (
    Fraction, fractions_equivalent, normalized_polynomial, parse_fraction,
    reduce_fraction_residue, tuple_from_fraction
)
from .compute import engine_selection


def compare_fractions(first: Fraction, second: Fraction,
                      engines: Tuple[str, ...]) -> Tuple[bool, Optional[bool]]:
    """(fraction criterion verdict, normalized polynomials agree); the second is None for links"""
    verdict = fractions_equivalent(first, second)
    if not (first.is_knot and second.is_knot):
        return verdict, None

    normalized = []
    for fraction in (first, second):
        t = tuple_from_fraction(reduce_fraction_residue(fraction))
        P, _ = cross_check(t, engines)
        normalized.append(normalized_polynomial(t, P))
    return verdict, normalized[0] == normalized[1]


def check_equiv_command(args, out, err) -> int:
    first, second = (parse_fraction(text) for text in args.check_equiv)
    verdict, polys_agree = compare_fractions(first, second, engine_selection(args.engine))

    print(msg('equiv_verdict', first=first, second=second,
              verdict=msg('equivalent' if verdict else 'not_equivalent')), file=out)
    if polys_agree is None:
        print(msg('equiv_link'), file=out)
        return 0
    print(msg('equiv_polynomials', verdict=msg('agree' if polys_agree else 'differ')), file=out)

    if verdict and not polys_agree:
        logger.error(f"❌ Equivalent fractions {first} and {second} give different normalized polynomials")
        return 2
    return 0
