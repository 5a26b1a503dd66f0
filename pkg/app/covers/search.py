"""Exact P_DP(H, k) by exhaustive search over normalized perfect covers, and upper-bound searches.

Restricting to perfect covers loses nothing: saturation never raises a
count. Within perfect covers two reductions apply. Recoloring a vertex by
a bijection (a gauge) preserves counts, so walking a spanning forest lets
every vertex be normalized to identity on the edge that first reaches it.
Conjugating all remaining columns by one permutation is a global gauge
followed by a row relabeling, so the first free column only needs one
representative per cycle type.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Literal

import numpy as np

from app.config import ASSIGNMENT_BUDGET, COVER_BUDGET
from app.covers.counting import count_with_space
from app.covers.model import PermCoverSpec, ShiftSpec, expand_spec, identity_spec
from app.hypergraph import Hypergraph, Vertex
from app.utils.assignments import ColoringSpace
from app.utils.logging import logger

Strategy = Literal["shifts", "random-perms"]


@dataclass(frozen=True)
class EdgePlan:
    reference: Vertex
    free: tuple[Vertex, ...]


@dataclass(frozen=True)
class DpResult:
    value: int
    witness: PermCoverSpec | None
    exact: bool
    explored: int
    search_size: int


@dataclass(frozen=True)
class UpperBound:
    bound: int
    witness: PermCoverSpec | ShiftSpec
    explored: int
    exhaustive: bool


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - part, part):
            yield (part,) + rest


def cycle_type_representatives(k: int) -> list[tuple[int, ...]]:
    """One permutation of 1..k per cycle type, as images of 1..k."""
    representatives = []
    for partition in integer_partitions(k):
        image = [0] * k
        start = 0
        for length in partition:
            for offset in range(length):
                image[start + offset] = start + (offset + 1) % length + 1
            start += length
        representatives.append(tuple(image))
    return sorted(representatives)


def search_plan(h: Hypergraph, gauge: bool = True) -> list[EdgePlan]:
    """Reference vertex and free (non-identity) columns per edge.

    With ``gauge`` a breadth-first walk in vertex order hands each edge to the
    vertex that reaches it first; vertices the edge reaches for the first time
    are pinned to identity, already reached ones stay free.
    """
    if not gauge:
        return [EdgePlan(edge[0], edge[1:]) for edge in h.edges]
    incident: dict[Vertex, list[int]] = {v: [] for v in h.vertices}
    for i, edge in enumerate(h.edges):
        for v in edge:
            incident[v].append(i)
    plan: list[EdgePlan | None] = [None] * h.m
    visited: set[Vertex] = set()
    for root in h.vertices:
        if root in visited:
            continue
        visited.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for i in incident[x]:
                if plan[i] is not None:
                    continue
                edge = h.edges[i]
                fresh = [v for v in edge if v not in visited]
                free = tuple(v for v in edge if v != x and v in visited)
                plan[i] = EdgePlan(x, free)
                visited.update(fresh)
                queue.extend(fresh)
    return plan


def search_size(plan: list[EdgePlan], k: int, symmetry: bool = True) -> int:
    columns = sum(len(p.free) for p in plan)
    if columns == 0:
        return 1
    first = len(cycle_type_representatives(k)) if symmetry else factorial(k)
    return first * factorial(k) ** (columns - 1)


def dp_exact(
    h: Hypergraph,
    k: int,
    cover_budget: int = COVER_BUDGET,
    assignment_budget: int = ASSIGNMENT_BUDGET,
    gauge: bool = True,
    symmetry: bool = True,
) -> DpResult:
    """Minimum F-coloring count over all perfect k-fold covers.

    When the normalized search space exceeds ``cover_budget`` the first
    ``cover_budget`` covers are still examined and the result carries
    ``exact=False`` with the best count found.
    """
    if k < 1:
        raise ValueError("dp_exact needs k >= 1")
    space = ColoringSpace(h.n, k, assignment_budget)
    position = {v: i for i, v in enumerate(h.vertices)}
    plan = search_plan(h, gauge)
    size = search_size(plan, k, symmetry)
    if size > cover_budget:
        logger.warning("Cover search for %s at k=%s has %s covers, budget %s", h.describe(), k, size, cover_budget)

    identity = tuple(range(1, k + 1))
    all_perms = list(itertools.permutations(identity))
    representatives = cycle_type_representatives(k) if symmetry else all_perms

    base_rows: list[list[int]] = []
    alive = space.full
    levels: list[tuple[int, Vertex]] = []
    for index, (edge, edge_plan) in enumerate(zip(h.edges, plan)):
        pinned = [position[v] for v in edge if v not in edge_plan.free]
        rows = [space.row_mask(pinned, [color] * len(pinned)) for color in identity]
        base_rows.append(rows)
        if edge_plan.free:
            levels.extend((index, v) for v in edge_plan.free)
        else:
            forbidden = 0
            for mask in rows:
                forbidden |= mask
            alive &= ~forbidden

    best_value: int | None = None
    best_choice: tuple = ()
    explored = 0
    choice: list[tuple[int, ...]] = []

    def descend(level: int, alive_mask: int, rows: list[int]) -> bool:
        nonlocal best_value, best_choice, explored
        if level == len(levels):
            explored += 1
            value = alive_mask.bit_count()
            if best_value is None or value < best_value:
                best_value, best_choice = value, tuple(choice)
            return best_value == 0 or explored >= cover_budget
        index, v = levels[level]
        starts_edge = level == 0 or levels[level - 1][0] != index
        ends_edge = level + 1 == len(levels) or levels[level + 1][0] != index
        current = base_rows[index] if starts_edge else rows
        options = representatives if level == 0 else all_perms
        column = position[v]
        for perm in options:
            masks = [current[i] & space.color_mask(column, perm[i]) for i in range(k)]
            choice.append(perm)
            if ends_edge:
                forbidden = 0
                for mask in masks:
                    forbidden |= mask
                stop = descend(level + 1, alive_mask & ~forbidden, [])
            else:
                stop = descend(level + 1, alive_mask, masks)
            choice.pop()
            if stop:
                return True
        return False

    descend(0, alive, [])
    exact = best_value == 0 or explored >= size

    columns: list[list[tuple[Vertex, tuple[int, ...]]]] = [[] for _ in h.edges]
    for (index, v), perm in zip(levels, best_choice):
        if perm != identity:
            columns[index].append((v, perm))
    witness = PermCoverSpec(
        tuple(p.reference for p in plan), tuple(tuple(c) for c in columns)
    )
    return DpResult(best_value, witness, exact, explored, size)


def _shift_specs(h: Hypergraph, k: int) -> Iterator[ShiftSpec]:
    per_edge = [
        [(0,) + rest for rest in itertools.product(range(k), repeat=len(edge) - 1)]
        for edge in h.edges
    ]
    for combo in itertools.product(*per_edge):
        yield ShiftSpec(tuple(combo))


def _random_specs(h: Hypergraph, k: int, seed: int) -> Iterator[PermCoverSpec]:
    yield identity_spec(h)
    rng = np.random.default_rng(seed)
    while True:
        columns = tuple(
            tuple((v, tuple(int(c) + 1 for c in rng.permutation(k))) for v in edge[1:])
            for edge in h.edges
        )
        yield PermCoverSpec(tuple(edge[0] for edge in h.edges), columns)


def dp_upper_search(
    h: Hypergraph,
    k: int,
    strategy: Strategy = "shifts",
    budget: int = COVER_BUDGET,
    seed: int = 0,
    assignment_budget: int = ASSIGNMENT_BUDGET,
) -> UpperBound:
    """Smallest count over a cover family; the family always starts with the natural cover."""
    if strategy == "shifts":
        specs: Iterator = _shift_specs(h, k)
        family_size = k ** sum(len(e) - 1 for e in h.edges)
    elif strategy == "random-perms":
        specs = _random_specs(h, k, seed)
        family_size = None
    else:
        raise ValueError(f"Unknown strategy: {strategy}")
    space = ColoringSpace(h.n, k, assignment_budget)
    best: tuple[int, PermCoverSpec | ShiftSpec] | None = None
    explored = 0
    for spec in itertools.islice(specs, budget):
        explored += 1
        value = count_with_space(space, h, expand_spec(spec, h, k))
        if best is None or value < best[0]:
            best = (value, spec)
            if value == 0:
                break
    exhaustive = family_size is not None and explored >= family_size
    return UpperBound(best[0], best[1], explored, exhaustive)
