"""Chromatic polynomials by deletion-contraction and by subset expansion, plus the brute-force oracle."""
from __future__ import annotations

import itertools

import numpy as np

from app.chromatic.memo import DEFAULT_MEMO, PolynomialMemo
from app.config import ASSIGNMENT_BUDGET, SUBSET_BUDGET
from app.errors import BudgetExceededError
from app.hypergraph import Hypergraph, components, covered_component_count
from app.polynomial import K, ONE, ZERO, IntPolynomial
from app.utils.assignments import check_assignment_budget, iter_assignment_blocks


def pivot_edge(h: Hypergraph) -> int:
    """Largest edge, first index on ties."""
    return max(range(h.m), key=lambda i: (len(h.edges[i]), -i))


def _simplicial_vertex(h: Hypergraph) -> tuple[object, int] | None:
    """A vertex lying only in 2-edges whose neighbours are pairwise 2-adjacent."""
    pairs = {frozenset(e) for e in h.edges if len(e) == 2}
    incident: dict[object, list[tuple]] = {v: [] for v in h.vertices}
    for edge in h.edges:
        for v in edge:
            incident[v].append(edge)
    for v in h.vertices:
        edges = incident[v]
        if any(len(e) != 2 for e in edges):
            continue
        neighbours = [u for e in edges for u in e if u != v]
        if all(frozenset(pair) in pairs for pair in itertools.combinations(neighbours, 2)):
            return v, len(neighbours)
    return None


def chromatic_dc(h: Hypergraph, memo: PolynomialMemo | None = None) -> IntPolynomial:
    """P(H, k) via P(H) = P(H - e) - P(H / e), memoized on the canonical key.

    Besides the recursion on the pivot edge, a simplicial vertex v of degree
    d contributes the factor (k - d) and disconnected inputs factor over
    their components.
    """
    return _dc(h, DEFAULT_MEMO if memo is None else memo)


def _dc(h: Hypergraph, memo: PolynomialMemo) -> IntPolynomial:
    if h.degenerate:
        return ZERO
    if not h.edges:
        return K ** h.n
    key = h.canonical_key()
    cached = memo.get(key)
    if cached is not None:
        return cached

    simplicial = _simplicial_vertex(h)
    if simplicial is not None:
        v, degree = simplicial
        return memo.put_if_absent(key, (K - degree) * _dc(h.without_vertices([v]), memo))

    partition = components(h)
    if partition.count > 1:
        result = ONE
        for block in partition.blocks:
            inside = set(block)
            edges = tuple(e for e in h.edges if inside.issuperset(e))
            result = result * _dc(Hypergraph(block, edges, (), h.fresh), memo)
    else:
        pivot = pivot_edge(h)
        result = _dc(h.delete_edge(pivot), memo) - _dc(h.contract_edge(pivot), memo)
    return memo.put_if_absent(key, result)


def chromatic_subset_expansion(h: Hypergraph, budget: int = SUBSET_BUDGET) -> IntPolynomial:
    """Sum over edge subsets S of (-1)^|S| k^(n - n(S) + c(S)).

    n(S) and c(S) are taken over the vertices covered by S.
    """
    if h.m > budget:
        raise BudgetExceededError("edge subsets", 2**h.m, 2**budget)
    coefficients = [0] * (h.n + 1)
    for size in range(h.m + 1):
        sign = -1 if size % 2 else 1
        for subset in itertools.combinations(range(h.m), size):
            covered, count = covered_component_count(h, subset)
            coefficients[h.n - covered + count] += sign
    return IntPolynomial(coefficients)


def chromatic_brute_count(h: Hypergraph, k: int, budget: int = ASSIGNMENT_BUDGET) -> int:
    """Number of maps V -> [k] with no monochromatic edge, by enumeration."""
    if k <= 0:
        return 1 if h.n == 0 else 0
    check_assignment_budget(h.n, k, budget)
    position = {v: i for i, v in enumerate(h.vertices)}
    columns = [[position[v] for v in edge] for edge in h.edges]
    total = 0
    for block in iter_assignment_blocks(h.n, k):
        proper = np.ones(block.shape[0], dtype=bool)
        for cols in columns:
            sub = block[:, cols]
            proper &= sub.min(axis=1) != sub.max(axis=1)
        total += int(proper.sum())
    return total
