# src/commands/batch.py
"""
Batch files: one tuple or fraction per line, '#' starts a comment.

Every input line produces exactly one output line. Blank and comment lines are echoed,
invalid lines become error records, so a bad line never aborts the batch.
"""
import json
from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

from ..config import BATCH_WORKERS, logger
from ..errors import DubrovnikError, EngineMismatchError
from ..messages import msg
from .compute import compute, engine_selection, parse_input_line, render

# (output line, exit code contribution)
LineResult = Tuple[str, int]


def process_line(line: str, engine: str = 'all', style: str = 'plain', normalize: bool = False,
                 allow_mixed: bool = False, mirror: bool = False) -> LineResult:
    text = line.strip()
    if not text or text.startswith('#'):
        return line.rstrip('\n'), 0
    try:
        t = parse_input_line(text, allow_mixed, mirror)
        result = compute(t, engine_selection(engine), normalize, source=text)
    except DubrovnikError as e:
        code = 2 if isinstance(e, EngineMismatchError) else 1
        if style == 'json':
            return json.dumps({'input': text, 'error': str(e)}, separators=(',', ':')), code
        return msg('batch_error', input=text, message=e), code

    if style == 'json':
        return render(result, style), 0
    return msg('batch_line', input=text, output=render(result, style)), 0


def _process_packed(packed) -> LineResult:
    return process_line(*packed)


def process_lines(lines: List[str], engine: str = 'all', style: str = 'plain', normalize: bool = False,
                  allow_mixed: bool = False, mirror: bool = False,
                  workers: int = BATCH_WORKERS) -> List[LineResult]:
    """Results in input order, computed in a process pool when workers > 1"""
    packed = [(line, engine, style, normalize, allow_mixed, mirror) for line in lines]
    if workers > 1 and len(packed) > 1:
        logger.info(f"Processing {len(packed)} batch lines with {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_process_packed, packed))
    return [_process_packed(item) for item in packed]


def batch_command(args, out, err) -> int:
    try:
        with open(args.batch, encoding='utf-8') as handle:
            lines = handle.read().splitlines()
    except FileNotFoundError:
        print(msg('error', message=msg('batch_missing', path=args.batch)), file=err)
        return 1
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"❌ Cannot read batch file {args.batch}: {e}")
        print(msg('error', message=msg('batch_unreadable', path=args.batch, reason=e)), file=err)
        return 1

    results = process_lines(lines, args.engine, args.format, args.normalize,
                            args.canonicalize, args.mirror)
    for text, _ in results:
        print(text, file=out)

    failed = [code for _, code in results if code]
    if failed:
        logger.warning(f"{len(failed)} of {len(lines)} batch lines failed")
    return max(failed, default=0)
