"""Command-line entry point: ``fracpack <command> ...``.

Exit codes: 0 success, 1 a verification check failed (the counterexample is in the
report), 2 invalid input or flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .expand import (
    certificate_via_projections, conjecture_scan, is_in_expand, labelmap_to_sequence,
    verify_certificate,
)
from .formats import GraphParseError, parse_graph, to_jsonable
from .graph import Graph, GraphSizeError, bits, is_perfect, is_vertex_transitive, maximal_cliques
from .invariants import (
    fractional_packing, generalized_fractional, generalized_independence, max_independent_set,
)
from .relative import cycle_table, ratio_bound_check, relative
from .theorems import SUITES, run_suite

JOBS_ENV = "FRACPACK_JOBS"

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Input helpers
# ---------------------------------------------------------------------------

def read_graph(arg: str, stdin=None) -> Graph:
    text = (stdin or sys.stdin).read() if arg == "-" else arg.replace("\\n", "\n")
    return parse_graph(text)


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None:
        return 1
    try:
        return _positive(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"{JOBS_ENV}: {exc}")


# ---------------------------------------------------------------------------
# Commands (each returns a report dict and a pass flag)
# ---------------------------------------------------------------------------

def cmd_invariants(g: Graph, k: int = 1) -> tuple[dict, bool]:
    mis = max_independent_set(g)
    report = {
        "graph": g,
        "n": g.n,
        "k": k,
        "alpha": mis.bit_count(),
        "fractional": fractional_packing(g),
        "alpha_k": generalized_independence(g, k)[0],
        "fractional_k": generalized_fractional(g, k),
        "maximal_cliques": len(maximal_cliques(g)),
        "perfect": is_perfect(g),
        "vertex_transitive": is_vertex_transitive(g),
        "independent_set": list(bits(mis)),
    }
    return report, True


def cmd_relative(g: Graph, h: Graph, budget: int | None = None) -> tuple[dict, bool]:
    res = relative(g, h, budget)
    check = ratio_bound_check(g, h, res)
    report = {"G": g, "H": h, "exact": res.exact, **res.to_json(), "ratio_bound_check": check}
    return report, check["alpha_ok"] and check["fractional_ok"]


def cmd_cycles(max_n: int = 9) -> tuple[dict, bool]:
    if not 3 <= max_n <= 9:
        raise UsageError("--max-n must be between 3 and 9")
    rows = cycle_table(max_n)
    flagged_ok = all(r.flagged == (r.n == 3) for r in rows)
    return {"max_n": max_n, "rows": [r.to_json() for r in rows]}, flagged_ok


def cmd_expand(g: Graph, h: Graph) -> tuple[dict, bool]:
    cert = is_in_expand(g, h)
    report: dict = {"G": g, "H": h, "member": cert is not None}
    ok = True
    if cert is not None:
        seq = labelmap_to_sequence(g, h, cert.phi)
        replayed = verify_certificate(g, h, cert) and verify_certificate(g, h, seq)
        report.update(labelmap=cert, sequence=seq, replayed=replayed)
        ok = replayed
    outcome = certificate_via_projections(g, h)
    report["projection_route"] = outcome.route
    if outcome.certificate is not None:
        report["projection_verified"] = verify_certificate(g, h, outcome.certificate)
        ok = ok and report["projection_verified"]
    return report, ok


def cmd_conjecture_scan(max_vertices: int = 5, jobs: int = 1) -> tuple[dict, bool]:
    if not 1 <= max_vertices <= 7:
        raise UsageError("--max-vertices must be between 1 and 7")
    rep = conjecture_scan(max_vertices, jobs=jobs)
    return rep, rep["passed"]


def cmd_theorems(suite: str = "all", jobs: int = 1, seed: int = 0) -> tuple[dict, bool]:
    checks = run_suite(suite, jobs, seed)
    passed = all(c.passed for c in checks)
    return {"suite": suite, "seed": seed, "passed": passed, "checks": [c.to_json() for c in checks]}, passed


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def _csv_rows(report: dict) -> list[dict]:
    if "rows" in report:
        return report["rows"]
    if "checks" in report:
        return report["checks"]
    return [report]


def render(report: dict, fmt: str) -> str:
    data = to_jsonable(report)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2) + "\n"
    rows = _csv_rows(data)
    header = sorted({key for row in rows for key in row})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        out = []
        for key in header:
            v = row.get(key, "")
            if isinstance(v, (dict, list)):
                v = json.dumps(v, sort_keys=True, separators=(",", ":"))
            elif isinstance(v, bool):
                v = "true" if v else "false"
            out.append(v)
        writer.writerow(out)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=_positive, default=None,
                        help=f"worker processes for pair enumeration (default ${JOBS_ENV} or 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    parser = argparse.ArgumentParser(prog="fracpack", description="Exact fractional packing computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="α, α*, αₖ, α*ₖ and structure of one graph")
    p.add_argument("graph", help='graph6, sparse6, edge list, shorthand (C5, K3, P4, E2, petersen) or "-"')
    p.add_argument("--k", type=_positive, default=1)

    p = sub.add_parser("relative", parents=[common], help="α*(G|H)")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--budget", type=int, default=None, help="witness candidates for the bounds interval")

    p = sub.add_parser("cycles", parents=[common], help="cycle formula table against brute force")
    p.add_argument("--max-n", type=int, default=9)

    p = sub.add_parser("expand", parents=[common], help="decide G ∈ Expand(H) with certificates")
    p.add_argument("G")
    p.add_argument("H")

    p = sub.add_parser("conjecture-scan", parents=[common], help="membership vs α*(G|H) <= 1 on all small pairs")
    p.add_argument("--max-vertices", type=int, default=5)

    p = sub.add_parser("theorems", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    return parser


def dispatch(args: argparse.Namespace, stdin=None) -> tuple[dict, bool]:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if args.command == "invariants":
        return cmd_invariants(read_graph(args.graph, stdin), args.k)
    if args.command in ("relative", "expand"):
        if args.G == "-" and args.H == "-":
            raise UsageError("only one graph may be read from stdin")
        g, h = read_graph(args.G, stdin), read_graph(args.H, stdin)
        if args.command == "relative":
            if args.budget is not None and args.budget < 0:
                raise UsageError("--budget must be nonnegative")
            return cmd_relative(g, h, args.budget)
        return cmd_expand(g, h)
    if args.command == "cycles":
        return cmd_cycles(args.max_n)
    if args.command == "conjecture-scan":
        return cmd_conjecture_scan(args.max_vertices, jobs)
    return cmd_theorems(args.suite, jobs, args.seed)


def main(argv: list[str] | None = None, stdin=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report, passed = dispatch(args, stdin)
    except GraphParseError as exc:
        print(f"fracpack: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphSizeError, UsageError, ValueError) as exc:
        print(f"fracpack: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(render(report, args.output))
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
