"""Claim verifiers, apex covers, report aggregation and the audit runner."""
import pytest

from app.chromatic import chromatic_dc, girth_expansion
from app.cli.instances import resolve_path
from app.config import Budgets, enable_fault
from app.covers import load_cover, natural_cover
from app.errors import CoverError
from app.harness import (
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_VIOLATED,
    ApexCover,
    AuditCase,
    Status,
    VerificationReport,
    apex_decomposition,
    apex_layout,
    apex_specs,
    default_corpus,
    exit_code,
    level_mapping_check,
    reports_document,
    run_audit,
    run_case,
    verify_even_cyc,
    verify_gir1,
    verify_join_identity,
    verify_join_theorems,
    verify_lemma2_1,
    verify_lemma2_2,
    verify_lemma9,
    verify_level,
    verify_prop1_1,
)
from app.hypergraph import Hypergraph, hypertree, theta
from app.polynomial import K


@pytest.fixture
def table1_cover(table1) -> ApexCover:
    return ApexCover.build(table1, load_cover(table1, resolve_path("data/table1_cover.json")))


def test_gir1_on_three_uniform_cycle(cycle34, memo):
    report = verify_gir1(cycle34, "cycle:3:4", memo=memo)
    assert report.status == Status.VERIFIED
    assert report.payload["D"] == K - 1
    assert report.payload["threshold"] == {"sign": "+", "N": 2}
    assert report.payload["atN"] == {"k": 2, "P": 82, "bound": 81}
    assert report.payload["leadingTermMatches"]
    assert report.k_range == tuple(range(2, 13))


def test_gir1_statuses(c4, k3, memo):
    assert verify_gir1(c4, memo=memo).status == Status.VERIFIED
    odd = verify_gir1(k3, memo=memo)
    assert odd.status == Status.HYPOTHESIS_UNMET
    assert verify_gir1(hypertree(3, 3, 0), memo=memo).status == Status.HYPOTHESIS_UNMET


def test_gir1_detects_exponent_fault(cycle34, memo):
    enable_fault("cwd-exponent")
    report = verify_gir1(cycle34, memo=memo)
    assert report.status == Status.VIOLATED
    assert "counterexample" in report.payload


def test_gir1_reports_residual_degree_bound(cycle34, memo, monkeypatch):
    from dataclasses import replace

    from app.harness import verifiers

    assert verify_gir1(cycle34, memo=memo).payload["residualBoundHolds"]

    def tightened(h, memo=None):
        return replace(girth_expansion(h, memo), residual_degree_bound=-2)

    monkeypatch.setattr(verifiers, "girth_expansion", tightened)
    report = verify_gir1(cycle34, memo=memo)
    assert report.status == Status.VIOLATED
    assert not report.payload["residualBoundHolds"]
    assert any("residual has degree -1 > -2" in note for note in report.notes)


def test_even_cycle_edge(c4, k3, memo):
    report = verify_even_cyc(c4, 0, memo=memo)
    assert report.status == Status.VERIFIED
    assert report.payload["delta"] == -K * (K - 1)
    first = report.payload["witnesses"][0]
    assert first["k"] == 2
    assert first["bestCount"] == 0
    second = report.payload["witnesses"][1]
    assert (second["P"], second["bestCount"]) == (18, 15)
    assert verify_even_cyc(k3, 0, memo=memo).status == Status.HYPOTHESIS_UNMET


def test_even_cycle_counterexample_is_reported(memo):
    h = Hypergraph.from_edges([("u", "v"), ("u", "v", "w"), ("u", "x"), ("x", "v")])
    report = verify_even_cyc(h, h.edge_index_of(["u", "v"]), memo=memo)
    assert report.payload["edgeGirth"] == 2
    assert report.status == Status.VIOLATED


def test_even_cycle_hypothesis_payload(memo):
    report = verify_even_cyc(theta(3, 1, 1), 0, memo=memo)
    assert report.payload["componentsWithoutEdge"] == 2
    assert report.payload["edgeGirth"] == 2


def test_prop1_1(c4, memo):
    report = verify_prop1_1(c4, 0, range(2, 5), memo=memo)
    assert report.status == Status.VERIFIED
    assert all(row["applies"] for row in report.payload["rows"])
    assert [row["bestCount"] for row in report.payload["rows"]] == [0, 15, 80]


def test_lemma9_literal_reading_is_flagged(c4, memo):
    report = verify_lemma9(c4, 0, 1, 2, memo=memo)
    assert report.status == Status.VIOLATED
    assert report.payload["conventions"]["weighted"]["exactMatch"]


def test_join_identity(c4, memo):
    report = verify_join_identity(c4, 1, range(1, 7), memo=memo)
    assert report.status == Status.VERIFIED
    assert report.payload["spotValues"][4] == [72, 72]
    assert verify_join_identity(c4, 2, range(1, 7), memo=memo).status == Status.VERIFIED


def test_table1_levels(table1_cover):
    assert table1_cover.apex == "w"
    assert [level_mapping_check(table1_cover, j).is_level for j in (1, 2, 3)] == [False, True, False]
    failing = level_mapping_check(table1_cover, 1)
    assert failing.failing_edge is not None
    decomposition = apex_decomposition(table1_cover)
    assert decomposition.consistent
    assert len(decomposition.counts) == 3
    with pytest.raises(CoverError):
        level_mapping_check(table1_cover, 4)


def test_verify_level(table1_cover):
    report = verify_level(table1_cover, "table1")
    assert report.status == Status.VERIFIED
    assert report.payload["levelPattern"] == [False, True, False]


def test_lemma2_2_on_table1(table1_cover, memo):
    report = verify_lemma2_2(table1_cover, "table1", memo=memo)
    assert report.status == Status.HYPOTHESIS_UNMET
    assert report.payload["coloringNumber"] == 3
    assert report.payload["nonLevelSlices"] == 2
    assert report.payload["readings"] == {"statement": 18, "proof": 18}
    assert report.payload["dpInner"]["value"] == 18


def test_lemma2_2_natural_cover(single_edge, memo):
    joined = single_edge.join_clique(1)
    report = verify_lemma2_2(ApexCover.build(joined, natural_cover(joined, 6)), memo=memo)
    assert report.status == Status.VERIFIED
    assert report.payload["count"] == 720
    assert report.payload["nonLevelSlices"] == 0


def test_apex_cover_needs_one_apex(c4):
    with pytest.raises(CoverError):
        ApexCover.build(c4, natural_cover(c4, 2))


@pytest.mark.parametrize("k, examined", [(2, 32), (3, 7776)])
def test_lemma2_1_exhaustive(single_edge, memo, k, examined):
    report = verify_lemma2_1(single_edge, k, memo=memo)
    assert report.status == Status.VERIFIED
    assert report.payload["exhaustive"]
    assert report.payload["examined"] == examined


def test_lemma2_1_sampled(single_edge, memo):
    report = verify_lemma2_1(single_edge, 3, budgets=Budgets(covers=100), sample=20, memo=memo)
    assert report.status == Status.INCONCLUSIVE
    assert report.payload["examined"] == 20


def test_apex_specs(single_edge):
    layout = apex_layout(single_edge.join_clique(1))
    assert len(list(apex_specs(layout, 2, exhaustive=True))) == 32
    sampled = list(apex_specs(layout, 3, exhaustive=False, sample=5, seed=1))
    assert len(sampled) == 5
    assert all(column == () for column in sampled[0].columns)


def test_join_theorems_on_single_edge(single_edge, memo):
    th, co, ans = verify_join_theorems(single_edge, 1, range(3, 7), memo=memo)
    assert th.claim_id == "th2p1" and th.status == Status.VERIFIED
    assert [row["k"] for row in th.payload["rows"]] == [6]
    assert th.payload["rows"][0]["rhs"] == 720
    assert co.status == Status.HYPOTHESIS_UNMET
    assert ans.status == Status.HYPOTHESIS_UNMET


def test_join_gap_within_bound_on_c4(c4, memo):
    """P - P_DP on C_4 is k, within k^(n - r - 1) = k."""
    *_, ans = verify_join_theorems(c4, 1, [2, 3], memo=memo)
    rows = {row["k"]: row for row in ans.payload["rows"]}
    assert (rows[2]["gap"], rows[2]["gapBound"]) == (2, 2)
    assert (rows[3]["gap"], rows[3]["gapBound"]) == (3, 3)
    assert all(row["gapWithinBound"] for row in rows.values())
    assert ans.status == Status.HYPOTHESIS_UNMET
    assert not any("exceeds" in note for note in ans.notes)


def test_join_gap_beyond_bound_is_unmet(memo):
    """Two 3-edges sharing a pair: the twisted cover pushes the gap past k^0."""
    h = Hypergraph.from_edges([(1, 2, 3), (1, 2, 4)])
    *_, ans = verify_join_theorems(h, 1, [2, 3], memo=memo)
    rows = ans.payload["rows"]
    assert [row["gapBound"] for row in rows] == [1, 1]
    assert all(row["gap"] >= 2 for row in rows)
    assert not any(row["gapWithinBound"] for row in rows)
    assert ans.status == Status.HYPOTHESIS_UNMET
    assert any("exceeds k^0" in note for note in ans.notes)


def test_exit_code_aggregation():
    def report(status):
        return VerificationReport("gir1", "x", (), status)

    assert exit_code([]) == EXIT_OK
    assert exit_code([report(Status.VERIFIED), report(Status.HYPOTHESIS_UNMET)]) == EXIT_OK
    assert exit_code([report(Status.INCONCLUSIVE), report(Status.VERIFIED)]) == EXIT_INCONCLUSIVE
    assert exit_code([report(Status.INCONCLUSIVE), report(Status.VIOLATED)]) == EXIT_VIOLATED


def test_report_document_is_sorted_and_jsonable(c4, memo):
    reports = [
        verify_join_identity(c4, 1, range(1, 3), "b", memo),
        verify_gir1(c4, "a", memo=memo),
        verify_join_identity(c4, 1, range(1, 3), "a", memo),
    ]
    document = reports_document(reports)
    assert document["schemaVersion"] == 1
    keys = [(r["claimId"], r["instance"]) for r in document["reports"]]
    assert keys == [("gir1", "a"), ("join-identity", "a"), ("join-identity", "b")]
    identity = document["reports"][1]
    assert identity["payload"]["left"] == identity["payload"]["right"]
    assert identity["payload"]["spotValues"]["2"][0] == identity["payload"]["spotValues"]["2"][1]
    restored = VerificationReport.from_dict(identity)
    assert restored.status == Status.VERIFIED
    with pytest.raises(ValueError):
        VerificationReport("not-a-claim", "x", (), Status.VERIFIED)


def test_audit_case_labels():
    assert AuditCase("evencyc", "cycle:2:4", {"edge": 0}).label == "cycle:2:4#e0"
    assert AuditCase("join", "cycle:2:4", {"p": 2}).label == "cycle:2:4#p2"
    assert AuditCase("lemma22", "hypertree:3:1:0", {"cover": "random", "seed": 3}).label == (
        "hypertree:3:1:0#seed3"
    )
    with pytest.raises(ValueError):
        AuditCase("unknown", "cycle:2:4")


def test_run_case_turns_budget_exhaustion_into_inconclusive():
    reports = run_case(AuditCase("lemma21", "hypertree:3:1:0", {"k": 3}), Budgets(assignments=10))
    assert [(r.claim_id, r.status) for r in reports] == [("lemma2p1", Status.INCONCLUSIVE)]


def test_run_case_apex_covers():
    natural = run_case(AuditCase("lemma22", "hypertree:3:1:0", {"k": 6, "cover": "natural"}))
    assert natural[0].status == Status.VERIFIED
    level = run_case(AuditCase("level", "file:data/table1.hg", {"cover": "data/table1_cover.json"}))
    assert level[0].payload["levelPattern"] == [False, True, False]


def test_audit_threads_match_serial():
    cases = [
        AuditCase("gir1", "cycle:2:4"),
        AuditCase("join", "cycle:2:3", {"p": 1, "k_range": [1, 4]}),
        AuditCase("evencyc", "cycle:2:4", {"edge": 0}),
    ]
    serial = reports_document(run_audit(cases))
    threaded = reports_document(run_audit(cases, threads=3))
    assert serial == threaded


def test_audit_is_fault_sensitive():
    cases = [AuditCase("gir1", "cycle:3:4"), AuditCase("gir1", "cycle:2:4")]
    assert exit_code(run_audit(cases)) == EXIT_OK
    enable_fault("cwd-exponent")
    assert exit_code(run_audit(cases)) == EXIT_VIOLATED


def test_default_corpus_is_seeded():
    corpus = default_corpus(3)
    assert [c.to_dict() for c in corpus] == [c.to_dict() for c in default_corpus(3)]
    assert {c.verifier for c in corpus} >= {"gir1", "evencyc", "join", "level", "lemma21", "lemma22"}


@pytest.mark.slow
def test_default_audit_gir1_reports():
    reports = run_audit(default_corpus(0))
    gir1 = [r for r in reports if r.claim_id == "gir1"]
    assert gir1
    assert all(r.status in (Status.VERIFIED, Status.HYPOTHESIS_UNMET) for r in gir1)
    assert all(r.status != Status.VIOLATED for r in reports if r.claim_id == "join-identity")


def test_mixed_instance_certificate(mixed, memo):
    report = verify_even_cyc(mixed, 0, memo=memo)
    assert report.payload["edgeGirth"] == 2
    assert report.payload["delta"] == -(K**2) * (K - 1)
    assert report.status == Status.VERIFIED


def test_natural_apex_decomposition(single_edge, memo):
    joined = single_edge.join_clique(1)
    for k in (1, 2, 3):
        decomposition = apex_decomposition(ApexCover.build(joined, natural_cover(joined, k)))
        assert decomposition.consistent
        assert decomposition.total == chromatic_dc(joined, memo).evaluate(k)
    degenerate = apex_decomposition(ApexCover.build(joined, natural_cover(joined, 1)))
    assert degenerate.counts == (0,)


@pytest.mark.slow
def test_cli_audit_is_deterministic_and_fault_sensitive(tmp_path):
    from app.cli.main import main

    first, second, faulted = (tmp_path / name for name in ("a.json", "b.json", "f.json"))
    assert main(["verify", "audit", "--format", "json", "--output", str(first)]) == EXIT_OK
    assert main(["verify", "audit", "--format", "json", "--output", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    code = main(["verify", "audit", "--inject-fault", "cwd-exponent", "--format", "json", "--output", str(faulted)])
    assert code == EXIT_VIOLATED
