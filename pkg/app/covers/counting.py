"""Exact F-coloring counts: vectorised enumeration and inclusion-exclusion."""
from __future__ import annotations

import numpy as np

from app.config import ASSIGNMENT_BUDGET, INCLUSION_EXCLUSION_BUDGET
from app.covers.model import Cover
from app.errors import BudgetExceededError
from app.hypergraph import Hypergraph
from app.utils.assignments import ColoringSpace, count_avoiding


def cover_patterns(h: Hypergraph, cover: Cover) -> list[tuple[list[int], np.ndarray]]:
    position = {v: i for i, v in enumerate(h.vertices)}
    patterns = []
    for index, edge in enumerate(h.edges):
        rows = cover.rows(index)
        if rows:
            patterns.append(([position[v] for v in edge], np.array(rows, dtype=np.int64)))
    return patterns


def count_colorings_brute(h: Hypergraph, cover: Cover, budget: int = ASSIGNMENT_BUDGET) -> int:
    """Maps V -> [k] that avoid every partial map of the cover."""
    return count_avoiding(h.n, cover.k, cover_patterns(h, cover), budget)


def count_colorings_ie(h: Hypergraph, cover: Cover, budget: int = INCLUSION_EXCLUSION_BUDGET) -> int:
    """Inclusion-exclusion over compatible sets of at most one map per edge.

    Two maps on one edge never combine: they disagree at every vertex.
    """
    families = [cover.rows(i) for i in range(h.m)]
    terms = 1
    for rows in families:
        terms *= len(rows) + 1
    if terms > budget:
        raise BudgetExceededError("inclusion-exclusion terms", terms, budget)
    k, n = cover.k, h.n
    total = 0

    def walk(index: int, pinned: dict, size: int) -> None:
        nonlocal total
        if index == h.m:
            total += (-1) ** size * k ** (n - len(pinned))
            return
        walk(index + 1, pinned, size)
        edge = h.edges[index]
        for row in families[index]:
            if all(pinned.get(v, c) == c for v, c in zip(edge, row)):
                extended = dict(pinned)
                extended.update(zip(edge, row))
                walk(index + 1, extended, size + 1)

    walk(0, {}, 0)
    return total


def count_with_space(space: ColoringSpace, h: Hypergraph, cover: Cover) -> int:
    """Bitset count for repeated counting over one coloring space."""
    position = {v: i for i, v in enumerate(h.vertices)}
    alive = space.full
    for index, edge in enumerate(h.edges):
        rows = cover.rows(index)
        if rows:
            alive &= ~space.forbidden_mask([position[v] for v in edge], rows)
    return space.count(alive & space.full)
