"""Covers, F-coloring counts, exact P_DP search and the closed-form bounds."""
import json
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.chromatic import chromatic_dc
from app.cli.instances import resolve_path
from app.config import enable_fault
from app.covers import (
    Cover,
    PermCoverSpec,
    ShiftSpec,
    apply_vertex_gauge,
    count_colorings_brute,
    count_colorings_ie,
    count_with_space,
    cover_from_dict,
    cover_to_dict,
    cwd1_cover,
    cwd1_pair,
    cwd1_value,
    cwd_bound,
    cwd_bound_polynomial,
    cycle_type_representatives,
    dp_exact,
    dp_upper_search,
    dump_cover,
    expand_spec,
    load_cover,
    natural_cover,
    require_valid,
    saturate,
    search_plan,
    search_size,
    validate_cover,
)
from app.covers.search import integer_partitions
from app.errors import CoverError, HypothesisError
from app.hypergraph import Hypergraph, hypertree, random_hypergraph
from app.polynomial import K
from app.utils.assignments import ColoringSpace


def _random_cover(h: Hypergraph, k: int, rng: random.Random, keep_all: bool = False) -> Cover:
    """Perfect cover from random column permutations, optionally thinned to a partial one."""
    columns = []
    for edge in h.edges:
        column = []
        for v in edge[1:]:
            perm = list(range(1, k + 1))
            rng.shuffle(perm)
            column.append((v, tuple(perm)))
        columns.append(tuple(column))
    cover = expand_spec(PermCoverSpec(tuple(e[0] for e in h.edges), tuple(columns)), h, k)
    if keep_all:
        return cover
    rows = [[row for row in cover.rows(i) if rng.random() < 0.6] for i in range(h.m)]
    return Cover.from_rows(k, rows)


@pytest.mark.property_based
@given(st.integers(0, 10_000), st.integers(2, 3), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_counting_methods_agree(seed, k, rng):
    """Enumeration, inclusion-exclusion and the bitset count agree on any cover."""
    h = random_hypergraph(seed, max_n=6, max_m=5)
    cover = _random_cover(h, k, rng)
    assert validate_cover(h, cover) is None
    brute = count_colorings_brute(h, cover)
    assert count_colorings_ie(h, cover) == brute
    assert count_with_space(ColoringSpace(h.n, k, 10**6), h, cover) == brute


@pytest.mark.property_based
@given(st.integers(0, 10_000), st.integers(2, 3), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_vertex_gauge_preserves_counts(seed, k, rng):
    h = random_hypergraph(seed, max_n=6, max_m=5)
    cover = _random_cover(h, k, rng, keep_all=True)
    gauge = {}
    for v in h.vertices:
        perm = list(range(1, k + 1))
        rng.shuffle(perm)
        gauge[v] = perm
    regauged = apply_vertex_gauge(h, cover, gauge)
    assert validate_cover(h, regauged) is None
    assert count_colorings_brute(h, regauged) == count_colorings_brute(h, cover)


@pytest.mark.property_based
@given(st.integers(0, 10_000), st.integers(2, 3), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_saturation_never_raises_counts(seed, k, rng):
    h = random_hypergraph(seed, max_n=6, max_m=5)
    partial = _random_cover(h, k, rng)
    full = saturate(h, partial)
    assert full.perfect
    assert validate_cover(h, full) is None
    assert count_colorings_brute(h, full) <= count_colorings_brute(h, partial)


@pytest.mark.parametrize("seed", range(10))
def test_natural_cover_counts_proper_colorings(seed):
    h = random_hypergraph(seed)
    for k in (2, 3):
        assert count_colorings_brute(h, natural_cover(h, k)) == chromatic_dc(h).evaluate(k)


def test_validate_cover():
    h = Hypergraph.from_edges([(1, 2)])
    clash = validate_cover(h, Cover.from_rows(2, [[[1, 1], [1, 2]]]))
    assert clash.edge_index == 0 and clash.pair == (0, 1)
    assert validate_cover(h, Cover.from_rows(2, [[[1, 1], [2, 2], [1, 2]]])) is not None
    assert validate_cover(h, Cover.from_rows(2, [[[1, 3]]])) is not None
    assert validate_cover(h, Cover.from_rows(2, [])) is not None
    with pytest.raises(CoverError):
        require_valid(h, Cover.from_rows(2, [[[1, 1], [1, 2]]]))


def test_shift_spec_expansion():
    h = Hypergraph.from_edges([(1, 2, 3)])
    cover = expand_spec(ShiftSpec(((0, 1, 2),)), h, 3)
    assert cover.rows(0) == ((1, 2, 3), (2, 3, 1), (3, 1, 2))
    with pytest.raises(CoverError):
        expand_spec(ShiftSpec(((0, 1),)), h, 3)


def test_dp_exact_on_c4(c4):
    result = dp_exact(c4, 3)
    assert (result.value, result.exact) == (15, True)
    assert result.search_size == 3
    assert count_colorings_brute(c4, expand_spec(result.witness, c4, 3)) == 15
    assert dp_exact(c4, 2).value == 0


def test_dp_exact_reductions_agree(c4, k3):
    for h in (c4, k3):
        reduced = dp_exact(h, 3).value
        assert dp_exact(h, 3, symmetry=False).value == reduced
        assert dp_exact(h, 3, gauge=False).value == reduced
    assert search_size(search_plan(c4, gauge=False), 3) == 3 * 6**3


def test_dp_exact_budget_gives_upper_bound(c4):
    result = dp_exact(c4, 3, cover_budget=2, gauge=False)
    assert not result.exact
    assert result.explored == 2
    assert result.value >= 15


def test_hypertrees_are_dp_rigid():
    for seed in range(3):
        tree = hypertree(3, 2, seed)
        assert dp_exact(tree, 2).value == chromatic_dc(tree).evaluate(2) == 18
    for m in (1, 2):
        tree = hypertree(3, m, 0)
        assert dp_exact(tree, 3).value == chromatic_dc(tree).evaluate(3)


def test_partitions_and_representatives():
    assert len(list(integer_partitions(4))) == 5
    representatives = cycle_type_representatives(3)
    assert len(representatives) == 3
    assert all(sorted(p) == [1, 2, 3] for p in representatives)


def test_upper_searches(c4):
    shifts = dp_upper_search(c4, 3, "shifts")
    assert shifts.bound == 15
    assert shifts.exhaustive
    sampled = dp_upper_search(c4, 3, "random-perms", budget=50, seed=4)
    assert 15 <= sampled.bound <= 18
    assert sampled.explored <= 50
    assert not sampled.exhaustive
    with pytest.raises(ValueError):
        dp_upper_search(c4, 3, "annealing")


def test_cwd_bounds(c4, cycle34):
    assert cwd_bound(c4, 3) == 16
    dense = Hypergraph.from_edges(combinations(range(1, 5), 3))
    assert cwd_bound(dense, 2) == Fraction(81, 16)
    polynomial = cwd_bound_polynomial(cycle34)
    assert polynomial.numerator == (K**2 - 1) ** 4
    assert polynomial.shift == 0
    with pytest.raises(HypothesisError):
        cwd_bound(Hypergraph.from_edges([(1, 2, 3), (3, 4)]), 3)


def test_cwd_exponent_fault(c4):
    enable_fault("cwd-exponent")
    assert cwd_bound(c4, 3) == 48


def test_single_edge_bound(c4, cycle34):
    value = cwd1_value(c4, 0, 3)
    assert value.value == 15
    assert value.branch == 2
    assert cwd1_pair(c4, 0) == (1, 2)
    cover = cwd1_cover(c4, 0, 3)
    assert count_colorings_brute(c4, cover) == 15
    assert cwd1_value(c4, 0, 2).value == 0
    with pytest.raises(HypothesisError):
        cwd1_value(cycle34, 0, 3)


def test_single_edge_cover_needs_a_split_pair():
    h = Hypergraph.from_edges([(1, 2, 3), (1, 2), (2, 3)], vertices=[1, 2, 3, 4])
    assert cwd1_pair(h, 0) is None
    assert cwd1_cover(h, 0, 3) is None


def test_cover_files(tmp_path, c4):
    cover = dp_exact(c4, 3).witness
    expanded = expand_spec(cover, c4, 3)
    path = tmp_path / "cover.json"
    dump_cover(c4, expanded, path)
    assert load_cover(c4, path) == expanded
    assert json.loads(path.read_text())["k"] == 3


def test_cover_from_dict_realigns_edge_order(c4):
    cover = cover_from_dict(c4, {"k": 2, "edges": [{"edge": [2, 1], "maps": [[1, 2], [2, 1]]}]})
    assert cover.rows(0) == ((2, 1), (1, 2))
    assert cover.rows(1) == ()
    assert cover_to_dict(c4, cover)["edges"][0] == {"edge": [1, 2], "maps": [[2, 1], [1, 2]]}


@pytest.mark.parametrize(
    "data",
    [
        {"edges": []},
        {"k": 2, "edges": [{"edge": [1, 9], "maps": [[1, 2]]}]},
        {"k": 2, "edges": [{"edge": [1, 3], "maps": [[1, 2]]}]},
        {"k": 2, "edges": [{"edge": [1, 2], "maps": [[1, 2, 1]]}]},
        {"k": 2, "edges": [{"edge": [1, 2], "maps": [[1, 1], [1, 2]]}]},
        {"k": 2, "edges": [{"edge": [1, 2], "maps": []}, {"edge": [2, 1], "maps": []}]},
    ],
)
def test_cover_from_dict_rejects(c4, data):
    with pytest.raises(CoverError):
        cover_from_dict(c4, data)


def test_invalid_cover_json(tmp_path, c4):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(CoverError):
        load_cover(c4, path)


def test_shipped_apex_cover_loads(table1):
    cover = load_cover(table1, resolve_path("data/table1_cover.json"))
    assert cover.k == 3
    assert cover.perfect


def test_single_edge_bound_first_branch(k3):
    value = cwd1_value(k3, 0, 3)
    assert (value.value, value.branch) == (6, 1)
    assert value.second == 9
    assert count_colorings_brute(k3, cwd1_cover(k3, 0, 3)) == 6
