from app.db.cache import load_cache, store_cache
from app.db.models import Base, PolynomialCacheEntry
from app.db.session import get_session, init_db, resolve_cache_url

__all__ = [
    "Base",
    "PolynomialCacheEntry",
    "get_session",
    "init_db",
    "load_cache",
    "resolve_cache_url",
    "store_cache",
]
