# src/commands/compute.py
import json
from dataclasses import dataclass
from typing import Optional, Tuple

from ..config import CLOSED, CLOSED_FORM_MAX_LENGTH, ENGINE_NAMES, logger
from ..database import init_db, store_invariant
from ..engines import cross_check
from ..engines.closedform import closed_form_sections
from ..errors import WritheUndefinedError
from ..laurent import LaurentPoly2, poly_format, poly_to_records
from ..messages import msg
from ..tangle import (
    BraidTuple, Fraction, canonicalize, normalized_polynomial, parse_fraction, parse_tuple,
    reduce_fraction_residue, tuple_fraction, tuple_from_fraction, tuple_mirror, tuple_writhe
)


@dataclass(frozen=True)
class ComputeResult:
    source: str
    tuple: BraidTuple
    fraction: Fraction
    engines: Tuple[str, ...]
    polynomial: LaurentPoly2
    writhe: Optional[int]
    normalized: bool
    skipped: Tuple[str, ...] = ()

    @property
    def kind(self) -> str:
        return self.fraction.kind

    @property
    def output(self) -> LaurentPoly2:
        """The polynomial to print: a^-w P when normalized, P otherwise"""
        return normalized_polynomial(self.tuple, self.polynomial) if self.normalized else self.polynomial

    def to_json(self) -> dict:
        return {
            'input': self.source,
            'tuple': str(self.tuple),
            'fraction': str(self.fraction),
            'kind': self.kind,
            'engines': list(self.engines),
            'writhe': self.writhe,
            'normalized': self.normalized,
            'terms': poly_to_records(self.output),
        }

    def to_record(self) -> dict:
        """Row for the invariants catalog; always the unnormalized polynomial"""
        return {
            'tuple_text': str(self.tuple),
            'length': len(self.tuple),
            'p': self.fraction.p,
            'q': self.fraction.q,
            'kind': self.kind,
            'writhe': self.writhe,
            'polynomial': poly_format(self.polynomial, 'plain'),
            'engines': ','.join(self.engines),
        }


def engine_selection(engine: str) -> Tuple[str, ...]:
    return ENGINE_NAMES if engine == 'all' else (engine,)


def resolve_tuple(tuple_text: Optional[str] = None, fraction_text: Optional[str] = None,
                  allow_mixed: bool = False, mirror: bool = False) -> BraidTuple:
    """Turn --tuple/--fraction text into the sign-homogeneous tuple to evaluate"""
    if fraction_text is not None:
        t = tuple_from_fraction(reduce_fraction_residue(parse_fraction(fraction_text)))
    else:
        t = parse_tuple(tuple_text)
        t = canonicalize(t) if allow_mixed else t.require_homogeneous()
    return tuple_mirror(t) if mirror else t


def parse_input_line(text: str, allow_mixed: bool = False, mirror: bool = False) -> BraidTuple:
    """A batch line is a fraction if it contains '/', a tuple otherwise"""
    if '/' in text:
        return resolve_tuple(fraction_text=text, mirror=mirror)
    return resolve_tuple(tuple_text=text, allow_mixed=allow_mixed, mirror=mirror)


def runnable_engines(t: BraidTuple, engines: Tuple[str, ...]) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """(engines to run, engines skipped); a multi-engine run drops the closed form past its length limit"""
    if len(engines) > 1 and CLOSED in engines and closed_form_sections(t) > CLOSED_FORM_MAX_LENGTH:
        logger.warning(f"Skipping the closed form for {t}: {closed_form_sections(t)} sections")
        return tuple(name for name in engines if name != CLOSED), (CLOSED,)
    return engines, ()


def compute(t: BraidTuple, engines: Tuple[str, ...], normalize: bool = False,
            source: Optional[str] = None) -> ComputeResult:
    engines, skipped = runnable_engines(t, engines)
    polynomial, _ = cross_check(t, engines)
    fraction = tuple_fraction(t)
    writhe = None
    if fraction.is_knot:
        writhe = tuple_writhe(t)
    elif normalize:
        raise WritheUndefinedError(f"--normalize needs a knot, {t} ({fraction}) is a 2-component link")
    return ComputeResult(source or str(t), t, fraction, engines, polynomial, writhe, normalize, skipped)


def render(result: ComputeResult, style: str) -> str:
    if style == 'json':
        return json.dumps(result.to_json(), separators=(',', ':'))
    return poly_format(result.output, style)


def compute_command(args, out, err) -> int:
    engines = engine_selection(args.engine)
    t = resolve_tuple(args.tuple, args.fraction, args.canonicalize, args.mirror)
    result = compute(t, engines, args.normalize, source=args.tuple or args.fraction)

    print(render(result, args.format), file=out)
    if result.skipped:
        print(msg('engines_skipped', count=len(result.engines), engine=','.join(result.skipped),
                  sections=closed_form_sections(result.tuple)), file=err)
    elif len(engines) > 1:
        print(msg('engines_agree', count=len(engines), total=len(engines)), file=err)

    if args.store:
        init_db()
        row_id = store_invariant(result.to_record())
        if row_id is None:
            print(msg('store_failed', tuple=result.tuple), file=err)
            return 1
        print(msg('stored', tuple=result.tuple, row_id=row_id), file=err)

    logger.info(f"Computed {result.tuple} with {','.join(result.engines)}")
    return 0
