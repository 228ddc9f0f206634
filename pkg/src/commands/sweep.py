# src/commands/sweep.py
"""Exhaustive cross-engine check over all homogeneous tuples of odd length"""
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Tuple

from ..config import BATCH_WORKERS, logger
from ..engines import cross_check
from ..errors import EngineMismatchError, InputError
from ..messages import msg
from ..tangle import homogeneous_tuples


def _check(entries: Tuple[int, ...]) -> Optional[str]:
    try:
        cross_check(entries)
    except EngineMismatchError as e:
        return str(e)
    return None


def sweep_length(length: int, max_entry: int, sign: int = 1,
                 workers: int = BATCH_WORKERS) -> Tuple[int, List[str]]:
    """(tuples checked, mismatch messages) for one length"""
    tuples = [t.entries for t in homogeneous_tuples(length, max_entry, sign)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes: Iterable[Optional[str]] = list(pool.map(_check, tuples, chunksize=64))
    else:
        outcomes = [_check(entries) for entries in tuples]
    return len(tuples), [outcome for outcome in outcomes if outcome]


def sweep_command(args, out, err) -> int:
    if args.max_length < 1 or args.max_entry < 1:
        raise InputError("--max-length and --max-entry must be positive")

    sign = -1 if args.negative else 1
    total = 0
    for length in range(1, args.max_length + 1, 2):
        count, mismatches = sweep_length(length, args.max_entry, sign)
        total += count
        if mismatches:
            for text in mismatches:
                print(msg('mismatch', message=text), file=err)
            logger.error(f"❌ Sweep found {len(mismatches)} mismatches at length {length}")
            return 2
        print(msg('sweep_length', length=length, count=count), file=out)

    print(msg('sweep_done', count=total), file=out)
    return 0
