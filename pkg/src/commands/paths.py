# src/commands/paths.py
from dataclasses import replace
from typing import List

from ..coefficients import LevelCoeffs, level_coeffs
from ..engines.closedform import path_terms
from ..laurent import LaurentPoly2, poly_format, poly_mirror_substitute
from ..messages import msg
from ..tangle import BraidTuple, tuple_normalize_odd
from .compute import resolve_tuple


def section_coeffs(t: BraidTuple) -> List[LevelCoeffs]:
    """
    Level coefficients used by the closed form, top level first.

    The top section only appears with its full twist count; every lower section also
    appears with one twist less, after a p-edge. A negative tuple gets the mirrored
    coefficients of its absolute value.
    """
    t = tuple_normalize_odd(BraidTuple.coerce(t).require_homogeneous())
    b = (0,) + t.absolute().entries
    n = len(b) - 1
    coeffs = [level_coeffs(n, b[n], b[n - 1])]
    for level in range(n - 1, 0, -1):
        for k in (b[level], b[level] - 1):
            coeffs.append(level_coeffs(level, k, b[level - 1]))
    if not t.is_positive:
        coeffs = [replace(c, l=poly_mirror_substitute(c.l), r=poly_mirror_substitute(c.r),
                          p=poly_mirror_substitute(c.p)) for c in coeffs]
    return coeffs


def paths_command(args, out, err) -> int:
    t = resolve_tuple(args.tuple)
    terms = path_terms(t)
    total = LaurentPoly2()
    for term in terms:
        total = total + term.value
        print(msg('path_term', label=term.label(), value=poly_format(term.value, args.format)), file=out)
    print(msg('path_total', value=poly_format(total, args.format)), file=out)
    print(msg('path_count', count=len(terms)), file=out)
    return 0


def coeffs_command(args, out, err) -> int:
    t = resolve_tuple(args.tuple)
    for coeffs in section_coeffs(t):
        for name in ('l', 'r', 'p'):
            print(msg('coeff_line', name=name, level=coeffs.level, k=coeffs.twist_count,
                      value=poly_format(getattr(coeffs, name), args.format)), file=out)
    return 0
