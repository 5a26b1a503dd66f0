"""Instance families used by the CLI, the audit corpus and the tests."""
from __future__ import annotations

import itertools

import numpy as np

from app.errors import HypergraphError
from app.hypergraph.core import Hypergraph


def linear_cycle(r: int, length: int) -> Hypergraph:
    """r-uniform linear cycle with ``length`` edges on length*(r-1) vertices."""
    if r < 2 or length < 3:
        raise HypergraphError("cycle needs r >= 2 and length >= 3")
    n = length * (r - 1)
    edges = []
    for i in range(length):
        start = i * (r - 1)
        edges.append(tuple((start + j) % n + 1 for j in range(r)))
    return Hypergraph.from_edges(edges, vertices=range(1, n + 1))


def hypertree(r: int, m: int, seed: int) -> Hypergraph:
    """Random leaf-attached r-uniform hypertree with m edges."""
    if r < 2 or m < 1:
        raise HypergraphError("hypertree needs r >= 2 and m >= 1")
    rng = np.random.default_rng(seed)
    edges = [tuple(range(1, r + 1))]
    next_vertex = r + 1
    for _ in range(m - 1):
        existing = next_vertex - 1
        anchor = int(rng.integers(1, existing + 1))
        edges.append((anchor,) + tuple(range(next_vertex, next_vertex + r - 1)))
        next_vertex += r - 1
    return Hypergraph.from_edges(edges, vertices=range(1, next_vertex))


def theta(r: int, first: int, second: int) -> Hypergraph:
    """Edge {1, 2, ...} plus two internally disjoint r-uniform paths from 1 to 2.

    Edge 0 is the anchor edge; its girth is 1 + min(first, second).
    """
    if r < 2 or first < 1 or second < 1:
        raise HypergraphError("theta needs r >= 2 and positive path lengths")
    if r == 2 and min(first, second) < 2:
        raise HypergraphError("graph theta paths need length >= 2")
    counter = itertools.count(3)
    edges = [(1, 2) + tuple(next(counter) for _ in range(r - 2))]
    for length in (first, second):
        joints = [1] + [next(counter) for _ in range(length - 1)] + [2]
        for a, b in itertools.pairwise(joints):
            edges.append((a, b) + tuple(next(counter) for _ in range(r - 2)))
    vertices = sorted({v for e in edges for v in e})
    return Hypergraph.from_edges(edges, vertices=vertices)


def complete(n: int, singletons: bool = False) -> Hypergraph:
    """All edges of size >= 2 on n vertices; size-1 edges only on request."""
    if n < 1:
        raise HypergraphError("complete needs n >= 1")
    smallest = 1 if singletons else 2
    edges = [
        subset
        for size in range(smallest, n + 1)
        for subset in itertools.combinations(range(1, n + 1), size)
    ]
    if singletons:
        return Hypergraph(tuple(range(1, n + 1)), tuple(edges))
    return Hypergraph.from_edges(edges, vertices=range(1, n + 1))


def random_hypergraph(seed: int, max_n: int = 8, max_m: int = 6, max_rank: int = 4) -> Hypergraph:
    """Seeded random hypergraph with 2 <= n <= max_n and at most max_m edges."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, max_n + 1))
    target = int(rng.integers(0, max_m + 1))
    edges: list[tuple[int, ...]] = []
    for _ in range(4 * target):
        if len(edges) >= target:
            break
        size = int(rng.integers(2, min(max_rank, n) + 1))
        edge = tuple(sorted(int(v) for v in rng.choice(np.arange(1, n + 1), size=size, replace=False)))
        if edge not in edges:
            edges.append(edge)
    return Hypergraph.from_edges(edges, vertices=range(1, n + 1))
