# tests/conftest.py
import pytest
from sqlalchemy import create_engine

from src import database
from src.config import GOLDEN_FIXTURE, GOLDEN_TUPLE
from src.laurent import poly_parse
from src.tangle import BraidTuple


@pytest.fixture(scope='session')
def golden_text():
    with open(GOLDEN_FIXTURE, encoding='utf-8') as handle:
        return handle.read().strip()


@pytest.fixture(scope='session')
def golden_poly(golden_text):
    return poly_parse(golden_text, 'plain')


@pytest.fixture(scope='session')
def golden_tuple():
    return BraidTuple(GOLDEN_TUPLE)


@pytest.fixture
def catalog(tmp_path, monkeypatch):
    """Point the catalog at a throwaway SQLite file"""
    engine = create_engine(f"sqlite:///{tmp_path / 'catalog.db'}", echo=False)
    monkeypatch.setattr(database, 'engine', engine)
    database.init_db()
    yield database
    engine.dispose()
