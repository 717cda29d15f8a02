"""Command line: ``densek solve | params | gen | bench``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bench import SUITES, run_suite, to_csv
from .deletion import default_threads
from .errors import DksError, InputError
from .expression import emit_expression, parse_expression
from .generators import KINDS, InstanceSpec, generate
from .graph import format_edge_list, parse_instance, parse_weights
from .oracle import Objective
from .params import check_parameter_inequalities
from .solve import Strategy, solve


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _vertex_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",")]
    except ValueError:
        raise InputError(f"bad vertex list {text!r}; expected e.g. '0,4,7'") from None


def cmd_solve(args: argparse.Namespace) -> int:
    g, weights = parse_instance(_read(args.graph))
    if args.weights:
        weights = parse_weights(_read(args.weights), g.n)
    expr = parse_expression(_read(args.expression)) if args.expression else None
    d = _vertex_list(args.deletion_set) if args.deletion_set is not None else None
    start = time.perf_counter()
    res = solve(g, args.k, args.objective, args.strategy, deletion_set=d,
                expression=expr, weights=weights, threads=args.threads)
    elapsed = (time.perf_counter() - start) * 1000
    print(json.dumps({"value": res.value, "witness": list(res.witness), "strategy": res.strategy,
                      "k": args.k, "objective": Objective.parse(args.objective).value,
                      "elapsed_ms": round(elapsed, 3)}))
    return 0


def cmd_params(args: argparse.Namespace) -> int:
    g, _ = parse_instance(_read(args.graph))
    report = check_parameter_inequalities(g, args.budget)
    print(report.to_json())
    for v in report.violations:
        print(f"inequality violated: {v}", file=sys.stderr)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    spec = InstanceSpec(args.kind, args.n, args.seed, d=args.d, p=args.p, max_clique=args.max_clique)
    inst = generate(spec)
    notes = [f"kind={spec.kind} n={spec.n} seed={spec.seed} d={spec.d} p={spec.p}"]
    if inst.deletion_set:
        notes.append("deletion-set: " + ",".join(map(str, inst.deletion_set)))
    out = Path(args.out)
    out.write_text(format_edge_list(inst.graph, comments=notes))
    summary = {"graph": str(out), "n": inst.graph.n, "m": inst.graph.m,
               "deletion_set": list(inst.deletion_set)}
    if inst.expression is not None:
        expr_path = out.with_suffix(out.suffix + ".expr")
        expr_path.write_text(emit_expression(inst.expression) + "\n")
        summary["expression"] = str(expr_path)
    print(json.dumps(summary))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    rows, csv_path, png_path = run_suite(args.suite, Path(args.out), args.quick, args.threads)
    sys.stdout.write(to_csv(rows))
    print(f"wrote {csv_path} and {png_path}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="densek",
                                     description="Densest/Sparsest k-Subgraph solvers on structured graphs")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker cap for subset enumeration (default: $DKS_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance and print a JSON result")
    p.add_argument("--graph", required=True, help="edge-list file (optional weights section)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--objective", choices=[o.value for o in Objective], default="densest")
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="oracle")
    p.add_argument("--deletion-set", help="comma-separated vertices, e.g. '0,4,7'")
    p.add_argument("--expression", help="clique-width expression file for the residual graph")
    p.add_argument("--weights", help="vertex weight file, overrides weights in --graph")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("params", help="structural parameters and their inequalities, as JSON")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, default=25, help="largest deletion set searched")
    p.set_defaults(run=cmd_params)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--d", type=int, default=0, help="planted deletion-set size")
    p.add_argument("--p", type=float, default=0.3, help="edge probability")
    p.add_argument("--max-clique", type=int, default=5)
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("bench", help="timing suite: CSV on stdout, CSV and PNG in --out")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--out", default="bench-out")
    p.add_argument("--quick", action="store_true", help="small sizes, for smoke runs")
    p.set_defaults(run=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads is None:
        args.threads = default_threads()
    try:
        return args.run(args)
    except DksError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
