"""Vectorised enumeration of all colorings V -> [k].

Assignment number ``a`` encodes the coloring whose vertex at position j gets
color ``(a // k**j) % k + 1``; both kernels below share that encoding.
"""
from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from app.errors import BudgetExceededError

CHUNK_SIZE = 1 << 18


def check_assignment_budget(n: int, k: int, budget: int) -> int:
    total = k**n
    if total > budget:
        raise BudgetExceededError(f"{k}^{n} colorings", total, budget)
    return total


def iter_assignment_blocks(n: int, k: int, chunk: int = CHUNK_SIZE) -> Iterator[np.ndarray]:
    """Yield (rows, n) arrays of colors in 1..k covering every assignment once."""
    total = k**n
    powers = k ** np.arange(n, dtype=np.int64)
    for start in range(0, total, chunk):
        index = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (index[:, None] // powers[None, :]) % k + 1


def count_avoiding(
    n: int,
    k: int,
    patterns: Sequence[tuple[Sequence[int], np.ndarray]],
    budget: int,
) -> int:
    """Count colorings that match none of the forbidden row patterns.

    Each pattern is (vertex positions, rows array of shape (l, len(positions))).
    """
    check_assignment_budget(n, k, budget)
    total = 0
    for block in iter_assignment_blocks(n, k):
        alive = np.ones(block.shape[0], dtype=bool)
        for positions, rows in patterns:
            if len(rows) == 0:
                continue
            sub = block[:, list(positions)]
            hit = (sub[:, None, :] == rows[None, :, :]).all(axis=2).any(axis=1)
            alive &= ~hit
        total += int(alive.sum())
    return total


class ColoringSpace:
    """All k^n colorings as bit positions of Python integers.

    ``color_mask(j, c)`` has bit a set iff coloring a gives color c to the
    vertex at position j, so forbidding a partial map is an AND of columns.
    """

    def __init__(self, n: int, k: int, budget: int):
        self.n = n
        self.k = k
        self.size = check_assignment_budget(n, k, budget)
        self.full = (1 << self.size) - 1
        pieces: list[list[list[bytes]]] = [[[] for _ in range(k)] for _ in range(n)]
        # CHUNK_SIZE is a multiple of 8, so packed chunks concatenate bit-exactly
        for block in iter_assignment_blocks(n, k):
            for j in range(n):
                for c in range(k):
                    bits = np.packbits(block[:, j] == c + 1, bitorder="little")
                    pieces[j][c].append(bits.tobytes())
        self._masks = [
            [int.from_bytes(b"".join(chunks), "little") for chunks in column]
            for column in pieces
        ]

    def color_mask(self, position: int, color: int) -> int:
        return self._masks[position][color - 1]

    def row_mask(self, positions: Sequence[int], colors: Sequence[int]) -> int:
        mask = self.full
        for position, color in zip(positions, colors):
            mask &= self._masks[position][color - 1]
        return mask

    def forbidden_mask(self, positions: Sequence[int], rows: Sequence[Sequence[int]]) -> int:
        mask = 0
        for row in rows:
            mask |= self.row_mask(positions, row)
        return mask

    def count(self, mask: int) -> int:
        return mask.bit_count()
