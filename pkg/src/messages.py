# src/messages.py

MESSAGES = {
    # compute
    'engines_agree': 'engines: {count}/{total} agree',
    'engines_skipped': 'engines: {count}/{count} agree ({engine} skipped: {sections} sections)',
    'error': 'error: {message}',
    'mismatch': 'mismatch: {message}',
    'stored': 'stored {tuple} as catalog row {row_id}',
    'store_failed': 'could not store {tuple} in the catalog',

    # batch
    'batch_line': '{input}: {output}',
    'batch_error': '{input}: error: {message}',
    'batch_missing': 'batch file {path} not found',
    'batch_unreadable': 'cannot read batch file {path}: {reason}',

    # equivalence
    'equiv_verdict': '{first} ~ {second}: {verdict}',
    'equivalent': 'equivalent',
    'not_equivalent': 'not equivalent',
    'equiv_polynomials': 'normalized polynomials: {verdict}',
    'agree': 'agree',
    'differ': 'differ',
    'equiv_link': 'normalized polynomials: n/a (2-component link)',

    # selftest
    'selftest_fixture_missing': 'golden fixture {path} not found',
    'selftest_fixture_unreadable': 'cannot read golden fixture {path}: {reason}',
    'selftest_engine': '{engine}: {verdict}',
    'selftest_collapse': 'P(a=1) = 1: {verdict}',
    'selftest_paths': 'paths({length}) = {count}: {verdict}',
    'selftest_ok': 'selftest passed for {tuple}',
    'selftest_failed': 'selftest FAILED for {tuple}',
    'ok': 'ok',
    'failed': 'FAILED',

    # sweep
    'sweep_length': 'length {length}: {count} tuples, engines agree',
    'sweep_done': 'sweep: {count} tuples checked',

    # paths / coeffs
    'path_term': '{label} = {value}',
    'path_total': 'sum = {value}',
    'path_count': 'paths: {count}',
    'coeff_line': '{name}_{{{level},{k}}} = {value}',

    # catalog
    'catalog_initialized': 'catalog initialized',
    'catalog_empty': 'catalog is empty',
    'catalog_row': '{tuple_text}  {p}/{q}  {kind}  {polynomial}',
    'catalog_not_found': '{key} is not in the catalog',
    'catalog_deleted': 'deleted {key}',
}


def msg(key: str, /, **kwargs) -> str:
    """Get message text"""
    text = MESSAGES.get(key, key)
    return text.format(**kwargs) if kwargs else text
