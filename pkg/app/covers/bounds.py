"""Closed-form DP bounds and the cover realizing the single-edge bound."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from app.chromatic import PolynomialMemo, chromatic_dc
from app.config import fault_active
from app.covers.model import Cover, natural_cover
from app.errors import HypothesisError
from app.hypergraph import Hypergraph, Vertex, classify, components
from app.polynomial import K, IntPolynomial


@dataclass(frozen=True)
class CwdPolynomial:
    """Bound as numerator(k) / k^shift."""

    numerator: IntPolynomial
    shift: int


@dataclass(frozen=True)
class Cwd1Value:
    value: Fraction
    branch: int
    first: Fraction
    second: Fraction


def _uniform_rank(h: Hypergraph) -> int:
    rank = classify(h).uniform_rank
    if rank is None:
        if h.m == 0:
            return 2
        raise HypothesisError("cwd bound needs a uniform hypergraph")
    return rank


def _cwd_exponent(h: Hypergraph, r: int) -> int:
    exponent = h.n - (r - 1) * h.m
    if fault_active("cwd-exponent"):
        exponent += 1
    return exponent


def cwd_bound(h: Hypergraph, k: int) -> int | Fraction:
    """k^(n - (r-1)m) (k^(r-1) - 1)^m; rational only when the exponent is negative."""
    r = _uniform_rank(h)
    exponent = _cwd_exponent(h, r)
    factor = (k ** (r - 1) - 1) ** h.m
    if exponent >= 0:
        return k**exponent * factor
    return Fraction(factor, k**-exponent)


def cwd_bound_polynomial(h: Hypergraph) -> CwdPolynomial:
    r = _uniform_rank(h)
    exponent = _cwd_exponent(h, r)
    numerator = K ** max(exponent, 0) * (K ** (r - 1) - 1) ** h.m
    return CwdPolynomial(numerator, max(-exponent, 0))


def _check_single_edge_hypothesis(h: Hypergraph, index: int, k: int) -> tuple[Vertex, ...]:
    edge = h.edge(index)
    if k < 2:
        raise HypothesisError("single-edge bound needs k >= 2")
    if components(h.delete_edge(index)).count != len(edge) - 1:
        raise HypothesisError(f"c(H - e) must equal |e| - 1 = {len(edge) - 1}")
    return edge


def cwd1_value(h: Hypergraph, index: int, k: int, memo: PolynomialMemo | None = None) -> Cwd1Value:
    """min{P(H,k), ((k^a - 1) P(H-e,k) - k^(a-1) P(H,k)) / (k^(a-1)(k-1))}, a = |e| - 1.

    Branch 1 wins ties.
    """
    edge = _check_single_edge_hypothesis(h, index, k)
    a = len(edge) - 1
    p_h = chromatic_dc(h, memo).evaluate(k)
    p_without = chromatic_dc(h.delete_edge(index), memo).evaluate(k)
    denominator = k ** (a - 1) * (k - 1)
    second = Fraction((k**a - 1) * p_without - k ** (a - 1) * p_h, denominator)
    first = Fraction(p_h)
    if first <= second:
        return Cwd1Value(first, 1, first, second)
    return Cwd1Value(second, 2, first, second)


def cwd1_pair(h: Hypergraph, index: int) -> tuple[Vertex, Vertex] | None:
    """The two vertices of e sharing a component of H - e, when all others are alone."""
    edge = h.edge(index)
    partition = components(h.delete_edge(index))
    groups: dict[int, list[Vertex]] = {}
    for v in edge:
        groups.setdefault(partition.block_of(v), []).append(v)
    sizes = sorted(len(g) for g in groups.values())
    if sizes != [1] * (len(edge) - 2) + [2]:
        return None
    pair = next(g for g in groups.values() if len(g) == 2)
    return pair[0], pair[1]


def cwd1_cover(h: Hypergraph, index: int, k: int, memo: PolynomialMemo | None = None) -> Cover | None:
    """Natural cover on H - e; on e either the constant maps or the maps twisting v2 by one.

    Returns None when the vertices of e do not meet |e| - 1 components of
    H - e with exactly one pair sharing a component.
    """
    pair = cwd1_pair(h, index)
    if pair is None:
        return None
    bound = cwd1_value(h, index, k, memo)
    cover = natural_cover(h, k)
    if bound.branch == 1:
        return cover
    edge = h.edges[index]
    twisted = [
        [i % k + 1 if v == pair[1] else i for v in edge] for i in range(1, k + 1)
    ]
    rows = [cover.rows(i) if i != index else twisted for i in range(h.m)]
    return Cover.from_rows(k, rows)
