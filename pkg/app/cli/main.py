"""Command-line entry point: ``hyperchroma <command> [options]``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from app.chromatic import (
    PolynomialMemo,
    chromatic_dc,
    chromatic_subset_expansion,
)
from app.cli.config import OUTPUT_FORMATS, RunConfig
from app.cli.formats import render_reports, render_result
from app.cli.instances import load_instance, parse_instance_spec
from app.cli.textformat import write_hypergraph
from app.config import (
    ASSIGNMENT_BUDGET,
    COVER_BUDGET,
    KNOWN_FAULTS,
    SUBSET_BUDGET,
    Budgets,
    enable_fault,
)
from app.covers import (
    count_colorings_brute,
    count_colorings_ie,
    cwd1_value,
    cwd_bound,
    dp_exact,
    dp_upper_search,
    dump_cover,
    expand_spec,
    load_cover,
)
from app.db import load_cache, resolve_cache_url, store_cache
from app.errors import (
    BudgetExceededError,
    CoverError,
    HypergraphError,
    HypothesisError,
)
from app.harness import (
    EXIT_DATA,
    EXIT_INCONCLUSIVE,
    EXIT_INTERNAL,
    EXIT_NO_INPUT,
    EXIT_OK,
    EXIT_USAGE,
    AuditCase,
    default_corpus,
    exit_code,
    run_audit,
    run_case,
)
from app.hypergraph import (
    Hypergraph,
    classify,
    components,
    girth,
    girth_of_edge,
    shortest_cycle_census,
)
from app.utils.logging import logger

load_dotenv()

DEFAULT_K_RANGE = (2, 6)
UPPER_SEARCH_BUDGET = 2000

# verify <claim> -> audit verifier name
VERIFY_CLAIMS = {
    "gir1": "gir1",
    "evencyc": "evencyc",
    "prop1p1": "prop1p1",
    "lemma9": "lemma9",
    "join": "join",
    "level": "level",
    "lemma21": "lemma21",
    "lemma22": "lemma22",
    "jointheorems": "jointheorems",
}


class UsageError(Exception):
    """Invalid combination of command-line options."""


class CliArgumentParser(argparse.ArgumentParser):
    """Exits with 64 on usage errors; 2 is reserved for inconclusive runs."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = CliArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--gen", help="instance descriptor, e.g. cycle:3:4 or join:1:hypertree:3:2:7")
    source.add_argument("--file", help="hypergraph text file")
    common.add_argument("--infer-vertices", action="store_true", help="allow files without a vertices line")
    common.add_argument("--k", type=int, help="number of colors")
    common.add_argument("--k-range", type=int, nargs=2, metavar=("LOW", "HIGH"))
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="markdown", dest="output_format")
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--cache", help="polynomial cache: SQLite path or database URL")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--assignment-budget", type=int, default=ASSIGNMENT_BUDGET)
    common.add_argument("--cover-budget", type=int, default=COVER_BUDGET)
    common.add_argument("--subset-budget", type=int, default=SUBSET_BUDGET)
    common.add_argument("--inject-fault", action="append", choices=KNOWN_FAULTS, default=[])
    return common


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(prog="hyperchroma", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    chromatic = commands.add_parser("chromatic", parents=[common], help="chromatic polynomial")
    chromatic.add_argument("--method", choices=("dc", "subset"), default="dc")

    commands.add_parser("girth", parents=[common], help="girth and per-edge shortest cycles")
    commands.add_parser("census", parents=[common], help="shortest cycles as edge sets")

    count = commands.add_parser("dp-count", parents=[common], help="colorings avoiding a cover")
    count.add_argument("--cover", required=True, help="cover JSON file")
    count.add_argument("--method", choices=("brute", "ie"), default="brute")

    exact = commands.add_parser("dp-exact", parents=[common], help="P_DP(H, k) by exhaustive search")
    exact.add_argument("--emit-witness", metavar="PATH", help="write the minimizing cover as JSON")
    exact.add_argument("--no-gauge", action="store_true", help="disable spanning-forest normalization")
    exact.add_argument("--no-symmetry", action="store_true", help="disable color-permutation pruning")

    bounds = commands.add_parser("dp-bounds", parents=[common], help="upper bounds on P_DP(H, k)")
    bounds.add_argument("--strategy", choices=("shifts", "random-perms"), default="shifts")
    bounds.add_argument("--search-budget", type=int, default=UPPER_SEARCH_BUDGET)

    verify = commands.add_parser("verify", parents=[common], help="check a claim and emit reports")
    verify.add_argument("claim", choices=(*VERIFY_CLAIMS, "audit"))
    verify.add_argument("--edge", type=int, default=0, help="edge index for per-edge claims")
    verify.add_argument("--p", type=int, default=1, help="clique size for join claims")
    verify.add_argument("--cover", help="cover JSON file, or 'natural'/'random' for apex covers")
    verify.add_argument("--v1")
    verify.add_argument("--v2")
    verify.add_argument("--distributed", action="store_true", help="run the audit on Celery workers")

    commands.add_parser("gen", parents=[common], help="write an instance in the text format")
    return parser


def _descriptor(args: argparse.Namespace) -> str:
    if args.gen:
        return args.gen
    if args.file:
        return f"file:{args.file}"
    raise UsageError("an instance is required: --gen DESCRIPTOR or --file PATH")


def _instance(args: argparse.Namespace) -> tuple[str, Hypergraph]:
    descriptor = _descriptor(args)
    return parse_instance_spec(descriptor).label, load_instance(descriptor, args.infer_vertices)


def _run_config(args: argparse.Namespace) -> RunConfig:
    budgets = Budgets(args.assignment_budget, args.cover_budget, args.subset_budget)
    if args.k_range:
        low, high = args.k_range
    elif args.k is not None:
        low = high = args.k
    else:
        low, high = DEFAULT_K_RANGE
    return RunConfig.from_bounds(
        low,
        high,
        budgets=budgets,
        output_format=args.output_format,
        output=args.output,
        cache=args.cache,
        threads=args.threads,
        seed=args.seed,
    )


def _require_k(args: argparse.Namespace) -> int:
    if args.k is None:
        raise UsageError(f"{args.command} needs --k")
    if args.k < 1:
        raise UsageError("--k must be positive")
    return args.k


def _chromatic(args, config: RunConfig, memo: PolynomialMemo) -> tuple[dict, int]:
    label, h = _instance(args)
    if args.method == "subset":
        poly = chromatic_subset_expansion(h, config.budgets.subset_edges)
    else:
        poly = chromatic_dc(h, memo)
    values = {k: poly.evaluate(k) for k in config.k_range}
    return {"instance": label, "coefficients": poly, "polynomial": poly.pretty(), "values": values}, EXIT_OK


def _girth(args, config: RunConfig, memo: PolynomialMemo) -> tuple[dict, int]:
    label, h = _instance(args)
    edges = []
    for index, edge in enumerate(h.edges):
        result = girth_of_edge(h, index)
        edges.append(
            {
                "edge": list(edge),
                "girth": result.length,
                "cycle": result.witness.to_dict() if result.witness else None,
            }
        )
    return {"instance": label, "girth": girth(h), "edges": edges}, EXIT_OK


def _census(args, config: RunConfig, memo: PolynomialMemo) -> tuple[dict, int]:
    label, h = _instance(args)
    census = shortest_cycle_census(h)
    cycles = sorted(sorted(s) for s in census.witnesses)
    return {"instance": label, "girth": census.z, "count": census.t, "cycles": cycles}, EXIT_OK


def _dp_count(args, config: RunConfig, memo: PolynomialMemo) -> tuple[dict, int]:
    label, h = _instance(args)
    cover = load_cover(h, args.cover)
    if args.method == "ie":
        count = count_colorings_ie(h, cover)
    else:
        count = count_colorings_brute(h, cover, config.budgets.assignments)
    result = {"instance": label, "k": cover.k, "count": count, "P": chromatic_dc(h, memo).evaluate(cover.k)}
    return result, EXIT_OK


def _dp_exact(args, config: RunConfig, memo: PolynomialMemo) -> tuple[dict, int]:
    label, h = _instance(args)
    k = _require_k(args)
    budgets = config.budgets
    found = dp_exact(
        h, k, budgets.covers, budgets.assignments, gauge=not args.no_gauge, symmetry=not args.no_symmetry
    )
    result = {
        "instance": label,
        "k": k,
        "value": found.value,
        "exact": found.exact,
        "explored": found.explored,
        "searchSize": found.search_size,
        "P": chromatic_dc(h, memo).evaluate(k),
        "witness": found.witness,
    }
    if args.emit_witness and found.witness is not None:
        dump_cover(h, expand_spec(found.witness, h, k), Path(args.emit_witness))
        result["witnessFile"] = args.emit_witness
    if not found.exact:
        logger.warning("Cover budget reached before the search finished; value is an upper bound")
    return result, EXIT_OK if found.exact else EXIT_INCONCLUSIVE


def _dp_bounds(args, config: RunConfig, memo: PolynomialMemo) -> tuple[dict, int]:
    label, h = _instance(args)
    k = _require_k(args)
    result: dict[str, Any] = {"instance": label, "k": k, "P": chromatic_dc(h, memo).evaluate(k)}
    if classify(h).uniform_rank is not None:
        result["cwd"] = cwd_bound(h, k)
    single_edge = {}
    for index, edge in enumerate(h.edges):
        if components(h.delete_edge(index)).count != len(edge) - 1 or k < 2:
            continue
        value = cwd1_value(h, index, k, memo)
        single_edge[index] = {"edge": list(edge), "value": value.value, "branch": value.branch}
    result["cwd1"] = single_edge
    upper = dp_upper_search(
        h, k, args.strategy, args.search_budget, config.seed, config.budgets.assignments
    )
    result["upper"] = {
        "bound": upper.bound,
        "strategy": args.strategy,
        "explored": upper.explored,
        "exhaustive": upper.exhaustive,
        "witness": upper.witness,
    }
    return result, EXIT_OK


def _verify_case(args, config: RunConfig) -> AuditCase:
    verifier = VERIFY_CLAIMS[args.claim]
    params: dict[str, Any] = {}
    if verifier in ("evencyc", "prop1p1", "lemma9"):
        params["edge"] = args.edge
    if verifier == "lemma9":
        if args.v1 is not None:
            params["v1"] = args.v1
        if args.v2 is not None:
            params["v2"] = args.v2
    if verifier in ("join", "jointheorems"):
        params["p"] = args.p
    if verifier in ("prop1p1", "join", "jointheorems"):
        params["k_range"] = [config.k_range[0], config.k_range[-1]]
    if verifier in ("lemma21", "lemma22"):
        params["k"] = _require_k(args)
        params["seed"] = config.seed
    if verifier in ("level", "lemma22"):
        if not args.cover:
            raise UsageError(f"verify {args.claim} needs --cover")
        params["cover"] = args.cover
        if args.cover in ("natural", "random"):
            params["k"] = _require_k(args)
            params["seed"] = config.seed
    return AuditCase(verifier, _descriptor(args), params)


def _verify(args, config: RunConfig, memo: PolynomialMemo):
    if args.claim == "audit":
        reports = run_audit(
            default_corpus(config.seed), config.budgets, memo, config.threads, args.distributed
        )
    else:
        reports = run_case(_verify_case(args, config), config.budgets, memo, args.infer_vertices)
    return reports, exit_code(reports)


def _gen(args, config: RunConfig, memo: PolynomialMemo) -> tuple[str, int]:
    _, h = _instance(args)
    return write_hypergraph(h), EXIT_OK


COMMANDS = {
    "chromatic": _chromatic,
    "girth": _girth,
    "census": _census,
    "dp-count": _dp_count,
    "dp-exact": _dp_exact,
    "dp-bounds": _dp_bounds,
    "verify": _verify,
    "gen": _gen,
}


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def dispatch(args: argparse.Namespace) -> int:
    config = _run_config(args)
    for name in args.inject_fault:
        enable_fault(name)
        logger.warning("Fault injected: %s", name)

    memo = PolynomialMemo()
    cache_url = resolve_cache_url(config.cache)
    if cache_url:
        memo.preload(load_cache(cache_url))

    outcome, code = COMMANDS[args.command](args, config, memo)
    if args.command == "verify":
        text = render_reports(outcome, config.output_format)
    elif args.command == "gen":
        text = outcome
    else:
        text = render_result(args.command, outcome, config.output_format)
    _emit(text, config.output)

    logger.info("Polynomial memo: %s hits, %s misses", memo.hits, memo.misses)
    if cache_url:
        store_cache(cache_url, memo.computed())
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return dispatch(args)
    except UsageError as exc:
        logger.error("Usage error: %s", exc)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        logger.error("Input not found: %s", exc)
        return EXIT_NO_INPUT
    except BudgetExceededError as exc:
        logger.error("Budget exceeded: %s", exc)
        return EXIT_INCONCLUSIVE
    except (HypergraphError, CoverError, HypothesisError) as exc:
        logger.error("Invalid input: %s", exc)
        return EXIT_DATA
    except ValueError as exc:
        logger.error("Invalid option: %s", exc)
        return EXIT_USAGE
    except Exception as exc:
        logger.error(f"Unexpected error: {exc}", exc_info=True)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
