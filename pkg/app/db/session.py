"""Database session management."""
import os
from contextlib import contextmanager
from pathlib import Path

from sqlalchemy import Engine, create_engine
from sqlalchemy.orm import sessionmaker

from app.db.models import Base

# Engines and session factories are created lazily, one per URL
_engines: dict[str, Engine] = {}
_session_factories: dict[str, sessionmaker] = {}


def resolve_cache_url(location: str | None = None) -> str | None:
    """HYPERCHROMA_CACHE wins over ``location``; bare paths become SQLite URLs."""
    value = os.environ.get("HYPERCHROMA_CACHE") or location
    if not value:
        return None
    if "://" in value:
        return value
    return f"sqlite:///{Path(value).expanduser().resolve()}"


def _get_engine(url: str) -> Engine:
    """Lazy initialization of database engine."""
    if url not in _engines:
        _engines[url] = create_engine(url, echo=False, pool_pre_ping=True)
    return _engines[url]


def _get_session_factory(url: str) -> sessionmaker:
    """Lazy initialization of session factory."""
    if url not in _session_factories:
        _session_factories[url] = sessionmaker(autocommit=False, autoflush=False, bind=_get_engine(url))
    return _session_factories[url]


@contextmanager
def get_session(url: str):
    """Context manager for database session."""
    session = _get_session_factory(url)()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def init_db(url: str) -> None:
    """Create missing tables; server databases normally go through alembic instead."""
    Base.metadata.create_all(bind=_get_engine(url))


def dispose_engines() -> None:
    for engine in _engines.values():
        engine.dispose()
    _engines.clear()
    _session_factories.clear()
