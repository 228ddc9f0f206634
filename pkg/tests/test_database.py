# tests/test_database.py


def _record(tuple_text='[3]', p=3, q=1, polynomial='a'):
    return {
        'tuple_text': tuple_text,
        'length': tuple_text.count(',') + 1,
        'p': p,
        'q': q,
        'kind': 'knot' if p % 2 else 'link',
        'writhe': 3 if p % 2 else None,
        'polynomial': polynomial,
        'engines': 'skein,reduce,closed',
    }


def test_store_and_get(catalog):
    row_id = catalog.store_invariant(_record())
    assert row_id == 1
    row = catalog.get_invariant('[3]')
    assert row['p'] == 3 and row['q'] == 1
    assert row['kind'] == 'knot'
    assert row['created_at'] is not None


def test_store_is_idempotent(catalog):
    first = catalog.store_invariant(_record())
    second = catalog.store_invariant(_record(polynomial='changed'))
    assert first == second
    assert catalog.get_invariant('[3]')['polynomial'] == 'a'


def test_find_by_fraction_and_list(catalog):
    catalog.store_invariant(_record('[3,1,1]', 7, 2))
    catalog.store_invariant(_record('[1,1,3]', 7, 4))
    catalog.store_invariant(_record('[2]', 2, 1))

    assert [row['tuple_text'] for row in catalog.find_by_fraction(7, 2)] == ['[3,1,1]']
    assert catalog.find_by_fraction(9, 2) == []
    assert [row['tuple_text'] for row in catalog.list_invariants()] == ['[2]', '[1,1,3]', '[3,1,1]']
    assert len(catalog.list_invariants(limit=1)) == 1


def test_delete(catalog):
    catalog.store_invariant(_record())
    assert catalog.delete_invariant('[3]') is True
    assert catalog.get_invariant('[3]') is None
    assert catalog.delete_invariant('[3]') is False


def test_bad_record_is_logged_not_raised(catalog):
    record = _record()
    del record['polynomial']
    assert catalog.store_invariant(record) is None
    assert catalog.get_invariant('[3]') is None
