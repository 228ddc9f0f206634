# src/commands/selftest.py
import os

from ..config import ENGINE_NAMES, GOLDEN_FIXTURE, GOLDEN_TUPLE, logger
from ..engines import evaluate
from ..engines.closedform import enumerate_paths
from ..laurent import poly_collapse_a, poly_parse
from ..messages import msg
from ..tangle import BraidTuple


def load_fixture(path: str = GOLDEN_FIXTURE):
    with open(path, encoding='utf-8') as handle:
        return poly_parse(handle.read(), 'plain')


def selftest_command(args, out, err) -> int:
    """Recompute the golden tuple on every engine and diff against the fixture"""
    path = getattr(args, 'fixture', None) or GOLDEN_FIXTURE
    if not os.path.exists(path):
        print(msg('error', message=msg('selftest_fixture_missing', path=path)), file=err)
        return 1

    try:
        expected = load_fixture(path)
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"❌ Cannot read golden fixture {path}: {e}")
        print(msg('error', message=msg('selftest_fixture_unreadable', path=path, reason=e)), file=err)
        return 1
    t = BraidTuple(GOLDEN_TUPLE)
    passed = True

    for engine in ENGINE_NAMES:
        ok = evaluate(t, engine) == expected
        passed = passed and ok
        print(msg('selftest_engine', engine=engine, verdict=msg('ok' if ok else 'failed')), file=out)
        if not ok:
            logger.error(f"❌ {engine} differs from the golden fixture {path}")

    ok = poly_collapse_a(expected) == 1
    passed = passed and ok
    print(msg('selftest_collapse', verdict=msg('ok' if ok else 'failed')), file=out)

    count = len(enumerate_paths(len(t)))
    ok = count == 17
    passed = passed and ok
    print(msg('selftest_paths', length=len(t), count=count, verdict=msg('ok' if ok else 'failed')), file=out)

    print(msg('selftest_ok' if passed else 'selftest_failed', tuple=t), file=out)
    return 0 if passed else 2
