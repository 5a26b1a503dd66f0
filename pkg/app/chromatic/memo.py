"""Run-wide memo table for chromatic polynomials."""
from __future__ import annotations

import threading

from app.polynomial import IntPolynomial


class PolynomialMemo:
    """Thread-safe map from canonical hypergraph keys to polynomials.

    Entries preloaded from a persisted cache are kept apart from entries
    computed in this run so only the latter are written back.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._entries: dict[str, IntPolynomial] = {}
        self._preloaded: set[str] = set()
        self.hits = 0
        self.misses = 0

    def get(self, key: str) -> IntPolynomial | None:
        with self._lock:
            value = self._entries.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put_if_absent(self, key: str, value: IntPolynomial) -> IntPolynomial:
        with self._lock:
            return self._entries.setdefault(key, value)

    def preload(self, entries: dict[str, IntPolynomial]) -> None:
        with self._lock:
            for key, value in entries.items():
                if key not in self._entries:
                    self._entries[key] = value
                    self._preloaded.add(key)

    def computed(self) -> dict[str, IntPolynomial]:
        with self._lock:
            return {k: v for k, v in self._entries.items() if k not in self._preloaded}

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self._preloaded.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)


DEFAULT_MEMO = PolynomialMemo()
