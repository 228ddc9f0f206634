# src/commands/catalog.py
from ..database import (
    delete_invariant, find_by_fraction, get_invariant, init_db, list_invariants
)
from ..messages import msg
from ..tangle import parse_fraction, parse_tuple


def _print_rows(rows, out) -> None:
    if not rows:
        print(msg('catalog_empty'), file=out)
    for row in rows:
        print(msg('catalog_row', **row), file=out)


def catalog_command(args, out, err) -> int:
    init_db()
    action = args.action

    if action == 'init':
        print(msg('catalog_initialized'), file=out)
        return 0

    if action == 'list':
        _print_rows(list_invariants(args.limit), out)
        return 0

    if action == 'fraction':
        fraction = parse_fraction(args.key)
        _print_rows(find_by_fraction(fraction.p, fraction.q), out)
        return 0

    # show / delete take a tuple; normalize its spelling to the stored form
    key = str(parse_tuple(args.key))
    if action == 'show':
        row = get_invariant(key)
        if not row:
            print(msg('catalog_not_found', key=key), file=err)
            return 1
        print(msg('catalog_row', **row), file=out)
        return 0

    if delete_invariant(key):
        print(msg('catalog_deleted', key=key), file=out)
        return 0
    print(msg('catalog_not_found', key=key), file=err)
    return 1
