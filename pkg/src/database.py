# src/database.py
from datetime import datetime
from typing import Optional, Dict, List
from sqlalchemy import (
    create_engine, MetaData, Table, Column, Integer, String,
    DateTime, Text, select, insert
)
from .config import DATABASE_URL, logger

engine = create_engine(DATABASE_URL, echo=False)
metadata = MetaData()

# Computed invariants, one row per braid tuple
invariants = Table('invariants', metadata,
    Column('id', Integer, primary_key=True),
    Column('tuple_text', String(255), unique=True, nullable=False, index=True),
    Column('length', Integer, nullable=False),
    Column('p', Integer, nullable=False, index=True),
    Column('q', Integer, nullable=False),
    Column('kind', String(10), nullable=False),  # 'knot' or 'link'
    Column('writhe', Integer, nullable=True),
    Column('polynomial', Text, nullable=False),  # plain format
    Column('engines', String(50), nullable=False),
    Column('created_at', DateTime, default=datetime.utcnow)
)


def init_db():
    """Initialize the database"""
    metadata.create_all(engine)
    logger.info("Catalog tables initialized")


def store_invariant(record: Dict) -> Optional[int]:
    """Store a computed invariant, return its row ID (existing row if already stored)"""
    try:
        with engine.connect() as conn:
            existing = conn.execute(
                select(invariants.c.id).where(invariants.c.tuple_text == record['tuple_text'])
            ).first()

            if existing:
                return existing[0]

            result = conn.execute(insert(invariants).values(**record))
            conn.commit()

            row_id = result.inserted_primary_key[0]
            logger.info(f"✅ Stored invariant of {record['tuple_text']} as row {row_id}")
            return row_id

    except Exception as e:
        logger.error(f"Error in store_invariant: {e}")
        return None


def get_invariant(tuple_text: str) -> Optional[Dict]:
    """Get a stored invariant by its tuple text"""
    try:
        with engine.connect() as conn:
            result = conn.execute(
                select(invariants).where(invariants.c.tuple_text == tuple_text)
            ).first()

            if result:
                return dict(result._mapping)
            return None
    except Exception as e:
        logger.error(f"Error in get_invariant: {e}")
        return None


def find_by_fraction(p: int, q: int) -> List[Dict]:
    """All stored invariants with fraction exactly p/q"""
    try:
        with engine.connect() as conn:
            rows = conn.execute(
                select(invariants)
                .where(invariants.c.p == p)
                .where(invariants.c.q == q)
                .order_by(invariants.c.id)
            ).fetchall()
            return [dict(row._mapping) for row in rows]
    except Exception as e:
        logger.error(f"Error in find_by_fraction: {e}")
        return []


def list_invariants(limit: int = 50) -> List[Dict]:
    """Most recently stored invariants first"""
    try:
        with engine.connect() as conn:
            rows = conn.execute(
                select(invariants).order_by(invariants.c.id.desc()).limit(limit)
            ).fetchall()
            return [dict(row._mapping) for row in rows]
    except Exception as e:
        logger.error(f"Error in list_invariants: {e}")
        return []


def delete_invariant(tuple_text: str) -> bool:
    """Delete a stored invariant"""
    try:
        with engine.connect() as conn:
            result = conn.execute(
                invariants.delete().where(invariants.c.tuple_text == tuple_text)
            )
            conn.commit()
            if result.rowcount:
                logger.info(f"Invariant {tuple_text} deleted from catalog")
            return bool(result.rowcount)
    except Exception as e:
        logger.error(f"Error deleting invariant {tuple_text}: {e}")
        return False
