"""Persisted chromatic polynomials: append-only, corrupt rows skipped."""
import json
from typing import Mapping

from sqlalchemy import select

from app.db.models import PolynomialCacheEntry
from app.db.session import get_session, init_db
from app.polynomial import IntPolynomial
from app.utils.logging import logger


def load_cache(url: str) -> dict[str, IntPolynomial]:
    init_db(url)
    entries: dict[str, IntPolynomial] = {}
    with get_session(url) as session:
        for row in session.scalars(select(PolynomialCacheEntry)):
            try:
                entries[row.key] = IntPolynomial.from_list(json.loads(row.coefficients))
            except (ValueError, TypeError) as exc:
                logger.warning("Skipping corrupt cache entry %r: %s", row.key, exc)
    logger.info("Loaded %s cached polynomials", len(entries))
    return entries


def store_cache(url: str, entries: Mapping[str, IntPolynomial]) -> int:
    """Insert keys not stored yet; existing rows are never rewritten."""
    init_db(url)
    with get_session(url) as session:
        existing = set(session.scalars(select(PolynomialCacheEntry.key)))
        fresh = [
            PolynomialCacheEntry(key=key, coefficients=json.dumps(poly.to_list()))
            for key, poly in sorted(entries.items())
            if key not in existing
        ]
        session.add_all(fresh)
    logger.info("Stored %s new polynomials", len(fresh))
    return len(fresh)
