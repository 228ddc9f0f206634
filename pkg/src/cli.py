# src/cli.py
"""
Command-line front end.

Exit codes: 0 success, 1 invalid input (including unknown flags), 2 engines disagree.
"""
import argparse
import sys
from typing import List, Optional, TextIO

from .config import ENGINE_NAMES, OUTPUT_FORMATS, logger
from .errors import DubrovnikError, EngineMismatchError, InputError
from .messages import msg

# ============================================================================
# COMMAND HANDLERS
# ============================================================================

from .commands.compute import compute_command
from .commands.batch import batch_command
from .commands.equivalence import check_equiv_command
from .commands.selftest import selftest_command
from .commands.sweep import sweep_command
from .commands.paths import paths_command, coeffs_command
from .commands.catalog import catalog_command

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2


class RaisingArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as InputError so they map to exit code 1"""

    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = RaisingArgumentParser(
        prog='dubrovnik',
        description='Dubrovnik polynomial of rational knots and links')
    sub = parser.add_subparsers(dest='command', parser_class=RaisingArgumentParser)
    sub.required = True

    # compute
    compute = sub.add_parser('compute', help='compute the polynomial of a tuple or fraction')
    source = compute.add_mutually_exclusive_group(required=True)
    source.add_argument('--tuple', help='braid-form tuple, e.g. "[4,3,5]"')
    source.add_argument('--fraction', help='reduced fraction p/q')
    source.add_argument('--batch', metavar='FILE', help='one tuple or fraction per line')
    source.add_argument('--check-equiv', nargs=2, metavar='P/Q',
                        help='compare two fractions for knot equivalence')
    compute.add_argument('--engine', choices=ENGINE_NAMES + ('all',), default='all')
    compute.add_argument('--format', choices=OUTPUT_FORMATS, default='plain')
    compute.add_argument('--normalize', action='store_true', help='emit a^-w P (knots only)')
    compute.add_argument('--mirror', action='store_true')
    compute.add_argument('--canonicalize', action='store_true',
                         help='accept mixed-sign tuples via the fraction')
    compute.add_argument('--store', action='store_true', help='save the result in the catalog')

    # selftest
    selftest = sub.add_parser('selftest', help='recompute the golden fixture on every engine')
    selftest.add_argument('--fixture', help='plain-format polynomial file')

    # sweep
    sweep = sub.add_parser('sweep', help='cross-check all engines on every homogeneous tuple')
    sweep.add_argument('--max-length', type=int, default=5)
    sweep.add_argument('--max-entry', type=int, default=4)
    sweep.add_argument('--negative', action='store_true')

    # paths / coeffs
    paths = sub.add_parser('paths', help='closed-form path products')
    paths.add_argument('--tuple', required=True)
    paths.add_argument('--format', choices=('plain', 'latex'), default='plain')

    coeffs = sub.add_parser('coeffs', help='level coefficients of every section')
    coeffs.add_argument('--tuple', required=True)
    coeffs.add_argument('--format', choices=('plain', 'latex'), default='plain')

    # catalog
    catalog = sub.add_parser('catalog', help='stored invariants')
    catalog.add_argument('action', choices=('init', 'list', 'show', 'fraction', 'delete'))
    catalog.add_argument('key', nargs='?', help='tuple for show/delete, p/q for fraction')
    catalog.add_argument('--limit', type=int, default=50)

    return parser


def _dispatch(args, out, err) -> int:
    if args.command == 'compute':
        if args.batch:
            return batch_command(args, out, err)
        if args.check_equiv:
            return check_equiv_command(args, out, err)
        return compute_command(args, out, err)
    if args.command == 'catalog' and args.action in ('show', 'fraction', 'delete') and not args.key:
        raise InputError(f"catalog {args.action} needs an argument")
    handlers = {
        'selftest': selftest_command,
        'sweep': sweep_command,
        'paths': paths_command,
        'coeffs': coeffs_command,
        'catalog': catalog_command,
    }
    return handlers[args.command](args, out, err)


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    """Run one command line; returns the exit code"""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out, err)
    except EngineMismatchError as e:
        logger.error(f"❌ {e}")
        print(msg('mismatch', message=e), file=err)
        return EXIT_MISMATCH
    except DubrovnikError as e:
        print(msg('error', message=e), file=err)
        return EXIT_INPUT
