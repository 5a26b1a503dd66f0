"""Audit corpus and runner."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from app.chromatic import PolynomialMemo
from app.cli.instances import load_instance, parse_instance_spec, resolve_path
from app.config import Budgets, active_faults
from app.covers import expand_spec, load_cover
from app.errors import BudgetExceededError, HypergraphError, HypothesisError
from app.harness.apex import ApexCover, apex_layout, apex_specs
from app.harness.reports import Status, VerificationReport, sort_reports
from app.harness.verifiers import (
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
from app.hypergraph import Hypergraph, Vertex
from app.utils.logging import logger

TABLE1_INSTANCE = "file:data/table1.hg"
TABLE1_COVER = "data/table1_cover.json"

# Verifier name -> claim ids it reports on.
CLAIMS = {
    "gir1": ("gir1",),
    "evencyc": ("evencyc",),
    "prop1p1": ("prop1p1",),
    "lemma9": ("lemma9",),
    "join": ("join-identity",),
    "level": ("level",),
    "lemma21": ("lemma2p1",),
    "lemma22": ("lemma2p2",),
    "jointheorems": ("th2p1", "co2p1", "ans3"),
}


@dataclass(frozen=True)
class AuditCase:
    """One verifier applied to one instance.

    ``params`` keys by verifier: ``edge`` (evencyc, prop1p1, lemma9), ``v1``/``v2``
    (lemma9), ``p`` (join, jointheorems), ``k`` (lemma21, lemma22),
    ``k_range`` (prop1p1, join, jointheorems), ``cover`` (level, lemma22:
    a cover file, ``"natural"`` or ``"random"``) and ``seed``.
    """

    verifier: str
    instance: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verifier not in CLAIMS:
            raise ValueError(f"Unknown verifier: {self.verifier}")

    @property
    def label(self) -> str:
        label = parse_instance_spec(self.instance).label
        if "edge" in self.params:
            label += f"#e{self.params['edge']}"
        if "p" in self.params:
            label += f"#p{self.params['p']}"
        cover = self.params.get("cover")
        if cover == "random":
            label += f"#seed{self.params.get('seed', 0)}"
        elif cover == "natural":
            label += "#natural"
        return label

    def to_dict(self) -> dict[str, Any]:
        return {"verifier": self.verifier, "instance": self.instance, "params": dict(self.params)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AuditCase:
        return cls(data["verifier"], data["instance"], dict(data.get("params", {})))


def default_corpus(seed: int = 0) -> list[AuditCase]:
    hypertree_two = f"hypertree:3:2:{seed}"
    single_edge = f"hypertree:3:1:{seed}"
    cases = [
        AuditCase("gir1", "cycle:2:4"),
        AuditCase("evencyc", "cycle:2:4", {"edge": 0}),
        AuditCase("prop1p1", "cycle:2:4", {"edge": 0, "k_range": [2, 4]}),
        AuditCase("join", "cycle:2:4", {"p": 1, "k_range": [1, 6]}),
        AuditCase("join", "cycle:2:4", {"p": 2, "k_range": [1, 6]}),
        AuditCase("gir1", "cycle:2:3"),
        AuditCase("evencyc", "cycle:2:3", {"edge": 0}),
        AuditCase("join", "cycle:2:3", {"p": 1, "k_range": [1, 6]}),
        AuditCase("gir1", "cycle:3:3"),
        AuditCase("join", "cycle:3:3", {"p": 1, "k_range": [1, 6]}),
        AuditCase("gir1", "cycle:3:4"),
        AuditCase("evencyc", "cycle:3:4", {"edge": 0}),
        AuditCase("gir1", hypertree_two),
        AuditCase("join", hypertree_two, {"p": 1, "k_range": [1, 6]}),
        AuditCase("evencyc", "theta:2:3:3", {"edge": 0}),
        AuditCase("evencyc", "theta:3:1:1", {"edge": 0}),
        AuditCase("evencyc", "file:data/mixed.hg", {"edge": 0}),
        AuditCase("jointheorems", single_edge, {"p": 1, "k_range": [3, 6]}),
        AuditCase("lemma21", single_edge, {"k": 2}),
        AuditCase("lemma21", single_edge, {"k": 3}),
        AuditCase("lemma22", single_edge, {"k": 6, "cover": "natural"}),
        AuditCase("level", TABLE1_INSTANCE, {"cover": TABLE1_COVER}),
        AuditCase("lemma22", TABLE1_INSTANCE, {"cover": TABLE1_COVER}),
    ]
    cases.extend(
        AuditCase("lemma22", single_edge, {"k": 6, "cover": "random", "seed": seed + offset})
        for offset in range(3)
    )
    return cases


def _k_range(params: dict[str, Any]) -> range:
    low, high = params["k_range"]
    return range(low, high + 1)


def _vertex(h: Hypergraph, raw: Vertex) -> Vertex:
    """Vertex of h whose id prints as ``raw`` (command-line ids arrive as strings)."""
    for v in h.vertices:
        if str(v) == str(raw):
            return v
    raise HypergraphError(f"Unknown vertex {raw!r}")


def _apex_cover(case: AuditCase, h: Hypergraph) -> ApexCover:
    """The cover named by the case: a file, the natural cover of K_1 v H, or a seeded random one."""
    source = case.params["cover"]
    if source in ("natural", "random"):
        joined = h.join_clique(1)
        k = case.params["k"]
        layout = apex_layout(joined)
        if source == "natural":
            spec = next(apex_specs(layout, k, exhaustive=False, sample=1))
        else:
            *_, spec = apex_specs(layout, k, exhaustive=False, sample=2, seed=case.params.get("seed", 0))
        return ApexCover.build(joined, expand_spec(spec, joined, k))
    return ApexCover.build(h, load_cover(h, resolve_path(source)))


def run_case(
    case: AuditCase,
    budgets: Budgets | None = None,
    memo: PolynomialMemo | None = None,
    infer_vertices: bool = False,
) -> list[VerificationReport]:
    """Reports for one case; budget exhaustion becomes an inconclusive report."""
    budgets = budgets or Budgets()
    label = case.label
    params = case.params
    try:
        h = load_instance(case.instance, infer_vertices)
        match case.verifier:
            case "gir1":
                return [verify_gir1(h, label, budgets, memo)]
            case "evencyc":
                return [verify_even_cyc(h, params["edge"], label, budgets, memo)]
            case "prop1p1":
                return [verify_prop1_1(h, params["edge"], _k_range(params), label, budgets, memo)]
            case "lemma9":
                index = params["edge"]
                edge = h.edge(index)
                v1 = _vertex(h, params.get("v1", edge[0]))
                v2 = _vertex(h, params.get("v2", edge[1]))
                return [verify_lemma9(h, index, v1, v2, label, budgets, memo)]
            case "join":
                return [verify_join_identity(h, params["p"], _k_range(params), label, memo)]
            case "level":
                return [verify_level(_apex_cover(case, h), label, budgets)]
            case "lemma21":
                seed = params.get("seed", 0)
                return [verify_lemma2_1(h, params["k"], label, budgets, seed, memo=memo)]
            case "lemma22":
                return [verify_lemma2_2(_apex_cover(case, h), label, budgets, memo)]
            case "jointheorems":
                return verify_join_theorems(h, params["p"], _k_range(params), label, budgets, memo)
    except BudgetExceededError as exc:
        logger.warning("Budget exhausted on %s %s: %s", case.verifier, label, exc)
        return [
            VerificationReport(
                claim, label, (), Status.INCONCLUSIVE, {"budget": exc.budget, "size": exc.size}, [str(exc)]
            )
            for claim in CLAIMS[case.verifier]
        ]
    raise ValueError(f"Unknown verifier: {case.verifier}")


def _run_local(
    cases: list[AuditCase], budgets: Budgets, memo: PolynomialMemo, threads: int
) -> list[VerificationReport]:
    def safe(case: AuditCase) -> list[VerificationReport]:
        try:
            return run_case(case, budgets, memo)
        except HypothesisError as exc:
            logger.info("Skipping %s on %s: %s", case.verifier, case.instance, exc)
            return []

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(safe, cases))
    else:
        batches = [safe(case) for case in cases]
    return [report for batch in batches for report in batch]


def _run_distributed(cases: list[AuditCase], budgets: Budgets) -> list[VerificationReport]:
    # app.tasks.verification imports this module
    from app.tasks.verification import run_verification

    faults = list(active_faults())
    pending = [run_verification.delay(case.to_dict(), budgets.to_dict(), faults) for case in cases]
    reports = []
    for result in pending:
        reports.extend(VerificationReport.from_dict(data) for data in result.get())
    return reports


def run_audit(
    cases: Iterable[AuditCase],
    budgets: Budgets | None = None,
    memo: PolynomialMemo | None = None,
    threads: int = 1,
    distributed: bool = False,
) -> list[VerificationReport]:
    """Run every case and return the reports sorted by claim id and instance."""
    budgets = budgets or Budgets()
    cases = list(cases)
    memo = memo if memo is not None else PolynomialMemo()
    logger.info("Running audit over %s cases", len(cases))
    if distributed:
        reports = _run_distributed(cases, budgets)
    else:
        reports = _run_local(cases, budgets, memo, threads)
    for report in reports:
        logger.info("%s %s: %s", report.claim_id, report.instance, report.status.value)
    return sort_reports(reports)
