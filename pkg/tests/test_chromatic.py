"""Chromatic polynomials, the girth expansion and edge deficits."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.chromatic import (
    PolynomialMemo,
    chromatic_brute_count,
    chromatic_dc,
    chromatic_subset_expansion,
    connecting_family,
    deficit_identity_check,
    even_cycle_deficit,
    girth_expansion,
    lemma9_audit,
    pivot_edge,
)
from app.errors import BudgetExceededError, HypothesisError
from app.hypergraph import (
    INFINITY,
    Hypergraph,
    classify,
    components,
    girth,
    hypertree,
    linear_cycle,
    random_hypergraph,
    theta,
)
from app.polynomial import K, ZERO, IntPolynomial, Sign


def _agree_with_oracles(seed: int) -> None:
    h = random_hypergraph(seed)
    dc = chromatic_dc(h, PolynomialMemo())
    assert dc == chromatic_subset_expansion(h)
    for k in (1, 2, 3):
        assert dc.evaluate(k) == chromatic_brute_count(h, k)


@pytest.mark.parametrize("seed", range(25))
def test_deletion_contraction_matches_oracles(seed):
    _agree_with_oracles(seed)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(25, 200))
def test_deletion_contraction_matches_oracles_corpus(seed):
    _agree_with_oracles(seed)


def test_known_polynomials(c4, k3, cycle34, memo):
    assert chromatic_dc(c4, memo).to_list() == [0, -3, 6, -4, 1]
    assert chromatic_dc(c4, memo).evaluate(3) == 18
    assert chromatic_dc(k3, memo) == K * (K - 1) * (K - 2)
    assert chromatic_dc(cycle34, memo) == K**8 - 4 * K**6 + 6 * K**4 - 4 * K**2 + K


def test_hypertree_polynomial(memo):
    tree = hypertree(3, 2, 5)
    assert chromatic_dc(tree, memo) == (K**3 - K) * (K**2 - 1)
    assert chromatic_dc(tree, memo).evaluate(2) == 18


def test_degenerate_and_edgeless():
    assert chromatic_dc(Hypergraph((1, 2), ((1,), (1, 2)))) == ZERO
    assert chromatic_dc(Hypergraph((1, 2, 3))) == K**3


def test_memo_reuse_and_preload(c4):
    memo = PolynomialMemo()
    chromatic_dc(c4, memo)
    before = memo.hits
    chromatic_dc(c4, memo)
    assert memo.hits > before
    memo.preload({"x": K})
    assert "x" not in memo.computed()
    assert memo.computed()
    memo.clear()
    assert len(memo) == 0


def test_pivot_edge(mixed):
    assert pivot_edge(mixed) == 0
    assert pivot_edge(Hypergraph.from_edges([(1, 2), (2, 3, 4), (4, 5, 6)])) == 1


def test_budgets(c4):
    with pytest.raises(BudgetExceededError):
        chromatic_subset_expansion(c4, budget=3)
    with pytest.raises(BudgetExceededError):
        chromatic_brute_count(c4, 3, budget=10)


def test_girth_expansion_of_cycles(c4, cycle34, memo):
    """On a single cycle the residual vanishes."""
    expansion = girth_expansion(c4, memo)
    assert (expansion.z, expansion.t) == (4, 1)
    assert expansion.binomial_part == K**4 - 4 * K**3 + 6 * K**2 - 4 * K
    assert expansion.cycle_term == K
    assert expansion.residual == ZERO
    assert girth_expansion(cycle34, memo).residual == ZERO


def test_girth_expansion_preconditions(mixed):
    with pytest.raises(HypothesisError):
        girth_expansion(mixed)
    with pytest.raises(HypothesisError):
        girth_expansion(hypertree(3, 3, 0))


def test_edge_deficits(c4, k3, mixed, memo):
    c4_deficit = even_cycle_deficit(c4, 0, memo)
    assert c4_deficit.delta == -K * (K - 1)
    assert c4_deficit.threshold.sign == Sign.NEGATIVE
    assert even_cycle_deficit(k3, 0, memo).delta == K * (K - 1)
    assert even_cycle_deficit(mixed, 0, memo).delta == -(K**2) * (K - 1)


def test_even_girth_edge_with_positive_deficit(memo):
    """A 2-edge of even girth whose deficit is still positive."""
    h = Hypergraph.from_edges([("u", "v"), ("u", "v", "w"), ("u", "x"), ("x", "v")])
    assert even_cycle_deficit(h, h.edge_index_of(["u", "v"]), memo).delta == K * (K - 1)


@pytest.mark.property_based
@given(st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_deficit_identity_and_weighted_convention(seed):
    """Cross-multiplied deficit identity and the weighted connecting-family sum hold on every edge."""
    h = random_hypergraph(seed, max_n=6, max_m=5)
    memo = PolynomialMemo()
    for index, edge in enumerate(h.edges):
        assert deficit_identity_check(h, index, memo)
        audit = lemma9_audit(h, index, edge[0], edge[1], memo)
        assert audit.conventions["weighted"].exact_match


def test_literal_connecting_sum_fails_on_c4(c4, memo):
    audit = lemma9_audit(c4, 0, 1, 2, memo)
    assert audit.lhs == -K * (K - 1)
    assert not audit.conventions["covered"].exact_match
    assert not audit.conventions["spanning"].exact_match
    assert audit.conventions["weighted"].rhs == audit.lhs
    assert audit.family.member_sets == (frozenset({1, 2, 3}),)


def test_connecting_family(c4):
    family = connecting_family(c4, 0, 1, 2)
    assert family.min_size == 3
    assert family.matches_girth
    with pytest.raises(HypothesisError):
        connecting_family(c4, 0, 1, 3)


def test_polynomial_type():
    assert isinstance(chromatic_dc(Hypergraph.from_edges([(1, 2)])), IntPolynomial)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(0, 200, 5))
def test_join_identity_over_corpus(seed):
    """P(H v K_p) = k(k-1)...(k-p+1) P(H, k-p) as polynomials."""
    from app.polynomial import falling_factorial

    h = random_hypergraph(seed)
    memo = PolynomialMemo()
    base = chromatic_dc(h, memo)
    for p in (1, 2, 3):
        assert chromatic_dc(h.join_clique(p), memo) == falling_factorial(p) * base.substitute_shift(p)


def _linear_uniform_with_cycles():
    candidates = [linear_cycle(r, length) for r, length in ((2, 4), (2, 5), (2, 7), (3, 3), (3, 4), (4, 3))]
    candidates += [theta(2, 2, 2), theta(2, 2, 3), theta(2, 3, 3), theta(3, 2, 2), theta(3, 1, 2)]
    candidates += [random_hypergraph(seed, max_n=10) for seed in range(200)]
    for h in candidates:
        shape = classify(h)
        if (
            h.n <= 10
            and shape.is_linear
            and shape.uniform_rank is not None
            and components(h).count == 1
            and girth(h) != INFINITY
        ):
            yield h


def test_girth_expansion_residual_degree_bound(memo):
    """deg(P - binomial part - cycle term) <= n - z(r-1) on linear uniform instances with a cycle."""
    checked = 0
    for h in _linear_uniform_with_cycles():
        expansion = girth_expansion(h, memo)
        assert expansion.residual_bound_holds, h.describe()
        assert expansion.binomial_part + expansion.cycle_term + expansion.residual == chromatic_dc(h, memo)
        checked += 1
    assert checked >= 10
