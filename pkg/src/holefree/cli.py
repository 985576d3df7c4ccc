"""Command-line front end: solve, verify, analyze, generate.

Exit codes: 0 success, 2 parse error or bad parameters, 3 capacity or
retry budget exceeded, 4 internal witness failure.  Verdicts from
``verify`` are data, not failures, and never change the exit status.

JSON reports keep a stable key set so downstream scripts can rely on the
shape: {version, command, input, result, verdicts, analysis, stats}.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import __version__
from .engine import SolveConfig, SolveResult
from .errors import (
    CapacityExceededError,
    GenerationError,
    GraphFormatError,
    NoDominationError,
    SolverInvariantError,
    WitnessNotFoundError,
)
from .families import lhf_filter, prism_graph, random_chordal
from .graph import Graph, emit_graph, format_weight, parse_graph
from .pmc import dominate_pmc, enumerate_pmcs
from .recognition import find_long_hole, is_chordal, largest_prism
from .separators import enumerate_minimal_separators
from .solvers import STRATEGIES, balanced_separator, solve

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_INTERNAL = 4


def _report(command: str, input_id: str, result=None, verdicts=None, analysis=None, stats=None) -> dict:
    return {
        "version": __version__,
        "command": command,
        "input": input_id,
        "result": result,
        "verdicts": verdicts,
        "analysis": analysis,
        "stats": stats or {},
    }


def _print_report(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)


def _load(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _ones(vertices) -> list[int]:
    return [v + 1 for v in vertices]


def _result_payload(res: SolveResult) -> dict:
    return {
        "weight": format_weight(res.weight),
        "vertices": _ones(res.vertices),
        "strategy": res.strategy,
    }


def _stats_payload(res: SolveResult) -> dict:
    return {
        "time_ms": round(res.stats.time_ms, 3),
        "table_entries": res.stats.table_entries,
        "minseps": res.stats.minseps,
        "pmcs": res.stats.pmcs,
        "branches": res.stats.branches,
    }


def cmd_solve(args) -> int:
    g = _load(args.graph)
    config = SolveConfig(cap_seps=args.cap_seps, cap_pmcs=args.cap_pmcs)
    res = solve(g, strategy=args.strategy, config=config)
    report = _report(
        "solve", args.graph, result=_result_payload(res), stats=_stats_payload(res)
    )
    _print_report(
        report,
        args.json,
        [
            f"weight {format_weight(res.weight)}",
            "witness: " + " ".join(str(v) for v in _ones(res.vertices)),
            f"strategy: {res.strategy}",
            f"minseps: {res.stats.minseps}  pmcs: {res.stats.pmcs}  "
            f"table entries: {res.stats.table_entries}",
        ],
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.graph)
    t0 = time.perf_counter()
    hole = find_long_hole(g)
    prism = largest_prism(g, args.max_k)
    chordal = is_chordal(g).chordal
    verdicts = {
        "long_hole_free": hole is None,
        "certificate": None if hole is None else _ones(hole),
        "largest_prism": prism,
        "chordal": chordal,
    }
    stats = {"time_ms": round((time.perf_counter() - t0) * 1000.0, 3), "table_entries": 0}
    report = _report("verify", args.graph, verdicts=verdicts, stats=stats)
    lines = [
        f"long-hole-free: {str(hole is None).lower()}",
    ]
    if hole is not None:
        lines.append("certificate: " + " ".join(str(v) for v in _ones(hole)))
    lines.append(f"largest prism (up to k={args.max_k}): {prism}")
    lines.append(f"chordal: {str(chordal).lower()}")
    _print_report(report, args.json, lines)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _load(args.graph)
    t0 = time.perf_counter()
    minseps = enumerate_minimal_separators(g, cap=args.cap_seps)
    pmcs = enumerate_pmcs(g, minseps, cap=args.cap_pmcs)
    prism = largest_prism(g, args.max_k)
    # the graph is (prism+1)-prism-free, which bounds the separator count
    free_k = prism + 1
    bound = g.n ** (free_k + 2)
    histogram = {"single-vertex": 0, "lemma-chain": 0, "brute-fallback": 0}
    sizes: dict[str, int] = {}
    for p in pmcs:
        histogram[dominate_pmc(g, p).method] += 1
        key = str(p.set.bit_count())
        sizes[key] = sizes.get(key, 0) + 1
    bal = None
    if g.n > 0 and g.is_connected() and g.total_weight() > 0:
        try:
            b = balanced_separator(g)
            bal = {
                "bag_size": b.bag.bit_count(),
                "z_size": len(b.z),
                "sep_size": b.separator.bit_count(),
                "bound": 3 * (g.max_degree() + 1),
            }
        except (WitnessNotFoundError, NoDominationError):
            bal = None
    analysis = {
        "minseps": len(minseps),
        "minsep_bound": bound,
        "minsep_bound_exponent": free_k + 2,
        "minsep_bound_ok": len(minseps) <= bound,
        "pmcs": len(pmcs),
        "pmc_sizes": dict(sorted(sizes.items(), key=lambda kv: int(kv[0]))),
        "largest_prism": prism,
        "dom_histogram": histogram,
        "balanced_separator": bal,
    }
    stats = {"time_ms": round((time.perf_counter() - t0) * 1000.0, 3), "table_entries": 0}
    report = _report("analyze", args.graph, analysis=analysis, stats=stats)
    lines = [
        f"minseps: {len(minseps)}",
        f"bound check: {len(minseps)} <= {g.n}^{free_k + 2} "
        f"{'pass' if len(minseps) <= bound else 'FAIL'}",
        f"pmcs: {len(pmcs)}",
        "domination: "
        + "  ".join(f"{k}={v}" for k, v in histogram.items()),
    ]
    if bal is not None:
        lines.append(
            f"balanced separator: bag={bal['bag_size']} z={bal['z_size']} "
            f"sep={bal['sep_size']} bound={bal['bound']}"
        )
    _print_report(report, args.json, lines)
    return EXIT_OK


def cmd_generate(args) -> int:
    rng = random.Random(args.seed)
    provenance = [f"holefree generate {args.family} seed={args.seed}"]
    if args.family == "prism":
        k = int(args.params[0])
        g = prism_graph(k)
        provenance.append(f"k={k}")
    elif args.family == "chordal":
        n, m = int(args.params[0]), int(args.params[1])
        g = random_chordal(n, m, rng)
        provenance.append(f"n={n} m_target={m}")
    elif args.family == "lhf-filter":
        n, p = int(args.params[0]), float(args.params[1])
        g = lhf_filter(n, p, rng, max_tries=args.max_tries)
        provenance.append(f"n={n} p={p}")
    elif args.family == "complement-of":
        g = _load(args.params[0]).complement()
        provenance.append(f"source={args.params[0]}")
    else:
        raise ValueError(f"unknown family {args.family!r}")
    text = emit_graph(g, comments=provenance)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holefree",
        description="Exact maximum weight independent set solving on "
        "(long-hole, k-prism)-free graphs and friends",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve MWIS on a graph file")
    p_solve.add_argument("graph")
    p_solve.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p_solve.add_argument(
        "--cap-seps", type=int, default=5000, help="separator cap, 0 = unlimited"
    )
    p_solve.add_argument(
        "--cap-pmcs", type=int, default=50000, help="PMC cap, 0 = unlimited"
    )
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="class membership verdicts")
    p_verify.add_argument("graph")
    p_verify.add_argument("--max-k", type=int, default=4)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_analyze = sub.add_parser("analyze", help="separator/PMC structure report")
    p_analyze.add_argument("graph")
    p_analyze.add_argument("--max-k", type=int, default=4)
    p_analyze.add_argument("--cap-seps", type=int, default=0)
    p_analyze.add_argument("--cap-pmcs", type=int, default=0)
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.set_defaults(func=cmd_analyze)

    p_gen = sub.add_parser("generate", help="write instance files")
    p_gen.add_argument("family", choices=["prism", "chordal", "lhf-filter", "complement-of"])
    p_gen.add_argument("params", nargs="*")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--max-tries", type=int, default=200)
    p_gen.add_argument("--out")
    p_gen.set_defaults(func=cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, IndexError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapacityExceededError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (SolverInvariantError, WitnessNotFoundError, NoDominationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
