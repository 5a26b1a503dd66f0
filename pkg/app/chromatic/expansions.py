"""Structural expansions of P(H, k): girth expansion, edge deficits, connecting families."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from networkx.utils import UnionFind

from app.chromatic.memo import PolynomialMemo
from app.chromatic.polynomials import chromatic_dc
from app.config import SUBSET_BUDGET
from app.errors import BudgetExceededError, HypothesisError
from app.hypergraph import (
    INFINITY,
    Hypergraph,
    Vertex,
    classify,
    components,
    girth,
    girth_of_edge,
    shortest_cycle_census,
)
from app.polynomial import K, ZERO, IntPolynomial, Threshold, threshold_n
from app.utils.logging import logger


@dataclass(frozen=True)
class GirthExpansion:
    binomial_part: IntPolynomial
    cycle_term: IntPolynomial
    residual: IntPolynomial
    z: int
    t: int
    residual_degree_bound: int

    @property
    def residual_bound_holds(self) -> bool:
        return self.residual.degree <= self.residual_degree_bound


@dataclass(frozen=True)
class EdgeDeficit:
    delta: IntPolynomial
    threshold: Threshold


@dataclass(frozen=True)
class ConnectingFamily:
    member_sets: tuple[frozenset[int], ...]
    anchor_pair: tuple[Vertex, Vertex]
    min_size: int | None
    matches_girth: bool | None


@dataclass(frozen=True)
class ConventionResult:
    rhs: IntPolynomial
    exact_match: bool
    leading_match: bool
    discrepancy: IntPolynomial

    def to_dict(self) -> dict:
        return {
            "rhs": self.rhs.to_list(),
            "exactMatch": self.exact_match,
            "leadingMatch": self.leading_match,
            "discrepancy": self.discrepancy.to_list(),
        }


@dataclass(frozen=True)
class Lemma9Audit:
    lhs: IntPolynomial
    family: ConnectingFamily
    conventions: dict[str, ConventionResult]


def girth_expansion(h: Hypergraph, memo: PolynomialMemo | None = None) -> GirthExpansion:
    """Split P(H) into the first z binomial terms, the cycle term and the rest."""
    shape = classify(h)
    if components(h).count != 1 or not shape.is_linear or shape.uniform_rank is None:
        raise HypothesisError("girth expansion needs a connected linear uniform hypergraph")
    if girth(h) == INFINITY:
        raise HypothesisError("girth expansion needs a cycle")
    r, n, m = shape.uniform_rank, h.n, h.m
    census = shortest_cycle_census(h)
    z, t = census.z, census.t
    binomial_part = ZERO
    for i in range(z):
        binomial_part = binomial_part + IntPolynomial.monomial(n - i * (r - 1), (-1) ** i * comb(m, i))
    cycle_term = IntPolynomial.monomial(n - z * (r - 1) + 1, (-1) ** z * t)
    residual = chromatic_dc(h, memo) - binomial_part - cycle_term
    expansion = GirthExpansion(binomial_part, cycle_term, residual, z, t, n - z * (r - 1))
    if not expansion.residual_bound_holds:
        logger.warning(
            "Residual degree %s exceeds %s for %s", residual.degree, expansion.residual_degree_bound, h.describe()
        )
    return expansion


def even_cycle_deficit(h: Hypergraph, index: int, memo: PolynomialMemo | None = None) -> EdgeDeficit:
    """delta = (k^a - 1) P(H - e) - k^a P(H) with a = |e| - 1; negative means the strict inequality."""
    edge = h.edge(index)
    if len(edge) < 2:
        raise HypothesisError("edge deficit needs |e| >= 2")
    power = K ** (len(edge) - 1)
    delta = (power - 1) * chromatic_dc(h.delete_edge(index), memo) - power * chromatic_dc(h, memo)
    return EdgeDeficit(delta, threshold_n(delta))


def deficit_identity_check(h: Hypergraph, index: int, memo: PolynomialMemo | None = None) -> bool:
    """Cross-multiplied form of P(H-e) - k^a/(k^a-1) P(H) = (k^a P(H/e) - P(H-e))/(k^a-1)."""
    edge = h.edge(index)
    power = K ** (len(edge) - 1)
    without = chromatic_dc(h.delete_edge(index), memo)
    left = (power - 1) * without - power * chromatic_dc(h, memo)
    right = power * chromatic_dc(h.contract_edge(index), memo) - without
    return left == right


def _spanning_components(h: Hypergraph, edge_indices) -> UnionFind:
    forest = UnionFind(h.vertices)
    for i in edge_indices:
        forest.union(*h.edges[i])
    return forest


def _other_subsets(h: Hypergraph, index: int, budget: int):
    others = [i for i in range(h.m) if i != index]
    if len(others) > budget:
        raise BudgetExceededError("edge subsets", 2 ** len(others), 2**budget)
    for size in range(len(others) + 1):
        yield from itertools.combinations(others, size)


def connecting_family(
    h: Hypergraph, index: int, v1: Vertex, v2: Vertex, budget: int = SUBSET_BUDGET
) -> ConnectingFamily:
    """Edge sets S avoiding edge ``index`` whose spanning subhypergraph joins v1 and v2."""
    edge = h.edge(index)
    if v1 == v2 or v1 not in edge or v2 not in edge:
        raise HypothesisError("anchor pair must be two distinct vertices of the edge")
    members = []
    for subset in _other_subsets(h, index, budget):
        forest = _spanning_components(h, subset)
        if forest[v1] == forest[v2]:
            members.append(frozenset(subset))
    min_size = min((len(s) for s in members), default=None)
    ell = girth_of_edge(h, index).length
    matches = None if ell == INFINITY or min_size is None else min_size == ell - 1
    return ConnectingFamily(tuple(members), (v1, v2), min_size, matches)


def _compare(lhs: IntPolynomial, rhs: IntPolynomial) -> ConventionResult:
    return ConventionResult(
        rhs=rhs,
        exact_match=lhs == rhs,
        leading_match=lhs.degree == rhs.degree and lhs.leading == rhs.leading,
        discrepancy=lhs - rhs,
    )


def lemma9_audit(
    h: Hypergraph, index: int, v1: Vertex, v2: Vertex, memo: PolynomialMemo | None = None,
    budget: int = SUBSET_BUDGET,
) -> Lemma9Audit:
    """Compare k^a P(H/e) - P(H-e) with connecting-family sums under three conventions.

    ``covered``: n(S), c(S) over the vertices covered by S. ``spanning``:
    components of the spanning subhypergraph on all vertices. ``weighted``:
    every S weighted by k^(|e| - j(S)) - 1 where j(S) counts spanning
    components meeting e; this one equals the left side for every input.
    """
    family = connecting_family(h, index, v1, v2, budget)
    edge = h.edge(index)
    power = K ** (len(edge) - 1)
    lhs = power * chromatic_dc(h.contract_edge(index), memo) - chromatic_dc(h.delete_edge(index), memo)

    covered = ZERO
    spanning = ZERO
    for subset in family.member_sets:
        sign = -1 if len(subset) % 2 else 1
        vertices = {v for i in subset for v in h.edges[i]}
        forest = UnionFind(vertices)
        for i in subset:
            forest.union(*h.edges[i])
        covered_count = len(list(forest.to_sets()))
        covered = covered + IntPolynomial.monomial(h.n - len(vertices) + covered_count, sign)
        spanning_count = len(list(_spanning_components(h, subset).to_sets()))
        spanning = spanning + IntPolynomial.monomial(spanning_count, sign)

    weighted = ZERO
    for subset in _other_subsets(h, index, budget):
        sign = -1 if len(subset) % 2 else 1
        forest = _spanning_components(h, subset)
        count = len(list(forest.to_sets()))
        meeting = len({forest[v] for v in edge})
        weighted = weighted + sign * IntPolynomial.monomial(count) * (K ** (len(edge) - meeting) - 1)

    conventions = {
        "covered": _compare(lhs, covered),
        "spanning": _compare(lhs, spanning),
        "weighted": _compare(lhs, weighted),
    }
    return Lemma9Audit(lhs, family, conventions)
