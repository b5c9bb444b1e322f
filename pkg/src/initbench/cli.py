"""Command-line front end.

Thin client over the core package: each verb parses flags, calls the same
operations the HTTP service exposes, and writes files or stdout.  Exit codes:
0 on success, 1 on runtime failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import benchmarks, initializers
from .experiment import (
    DEFAULT_NP_T,
    ExperimentPlan,
    export_csv,
    import_csv,
    run_plan,
)
from .optimizers import algorithm_ids
from .reports import (
    build_rank_report,
    correlation_csv,
    correlation_report,
    friedman_csv,
    rank_report_csv,
    rank_report_markdown,
)
from .rng import derive_stream


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="initbench",
        description="Metaheuristic optimizers under 22 population-initialization methods.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("list", help="print the algorithm, init-method and function catalogs")

    p_run = sub.add_parser("run", help="execute an experiment plan")
    p_run.add_argument("--plan", required=True, help="JSON plan file")
    p_run.add_argument("--seed", type=int, default=None, help="master seed (overrides the plan's)")
    p_run.add_argument("--jobs", type=int, default=1, help="parallel worker count")
    p_run.add_argument("--out", required=True, help="results CSV path")

    p_rank = sub.add_parser("rank", help="rank reports from a results CSV")
    p_rank.add_argument("--in", dest="infile", required=True)
    p_rank.add_argument("--scope", required=True, choices=["per-function", "cross-function"])
    p_rank.add_argument("--out", required=True, help="output directory")

    p_corr = sub.add_parser("correlate", help="initial-distance vs Dist correlation per algorithm-function")
    p_corr.add_argument("--in", dest="infile", required=True)
    p_corr.add_argument("--outlier-filter", choices=["iqr"], default=None)
    p_corr.add_argument("--out", required=True, help="output CSV path")

    p_rep = sub.add_parser("report", help="full analysis bundle (both rank scopes + correlation)")
    p_rep.add_argument("--in", dest="infile", required=True)
    p_rep.add_argument("--out", required=True, help="output directory")

    p_chk = sub.add_parser("sample-check", help="empirical vs analytic moments of one init method")
    p_chk.add_argument("--method", required=True)
    p_chk.add_argument("--n", type=int, required=True)
    p_chk.add_argument("--seed", type=int, default=0)

    p_srv = sub.add_parser("serve", help="run the HTTP API")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_list() -> int:
    algs = algorithm_ids()
    methods = initializers.method_names()
    fns = benchmarks.function_names()
    print(f"algorithms ({len(algs)}):")
    for a in algs:
        print(f"  {a}")
    print(f"init methods ({len(methods)}):")
    for m in methods:
        print(f"  {m}")
    print(f"functions ({len(fns)}):")
    for f in fns:
        print(f"  {f}")
    return 0


def _cmd_run(args) -> int:
    raw = json.loads(Path(args.plan).read_text(encoding="utf-8"))
    if args.seed is not None:
        raw["master_seed"] = args.seed
        raw.pop("seed", None)
    plan = ExperimentPlan.from_dict(raw)
    plan.validate()

    # Provenance header: every effective setting, for reproducibility audits.
    print(f"# plan={args.plan} seed={plan.master_seed} dimension={plan.dimension} "
          f"budget_fes={plan.budget_fes} runs_per_cell={plan.runs_per_cell} jobs={args.jobs}")
    for alg_id, overrides in plan.algorithms.items():
        pairs = plan._np_t_pairs(alg_id, overrides)
        grid = " ".join(f"np={np_},t={'budget' if t is None else t}" for np_, t in pairs)
        extra = f" overrides={overrides}" if overrides else ""
        print(f"# {alg_id}: {grid}{extra}")
    print(f"# init_methods={len(list(plan.init_methods))} functions={list(plan.functions)}")

    store = run_plan(plan, jobs=args.jobs)
    export_csv(store, args.out)
    print(f"wrote {len(store)} rows to {args.out}")
    return 0


def _write_rank_outputs(report, out_dir: Path) -> None:
    scope_slug = report.scope.replace("-", "_")
    (out_dir / f"{scope_slug}_ranks.csv").write_text(rank_report_csv(report), encoding="utf-8")
    (out_dir / f"{scope_slug}_friedman.csv").write_text(friedman_csv(report), encoding="utf-8")
    (out_dir / f"{scope_slug}_report.md").write_text(rank_report_markdown(report), encoding="utf-8")


def _cmd_rank(args) -> int:
    store = import_csv(args.infile)
    report = build_rank_report(store, args.scope)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_rank_outputs(report, out_dir)
    print(f"wrote {args.scope} rank report to {out_dir}")
    return 0


def _cmd_correlate(args) -> int:
    store = import_csv(args.infile)
    rows = correlation_report(store, outlier_filter=args.outlier_filter)
    Path(args.out).write_text(correlation_csv(rows), encoding="utf-8")
    print(f"wrote {len(rows)} correlation rows to {args.out}")
    return 0


def _cmd_report(args) -> int:
    store = import_csv(args.infile)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for scope in ("per-function", "cross-function"):
        _write_rank_outputs(build_rank_report(store, scope), out_dir)
    rows = correlation_report(store)
    (out_dir / "correlation.csv").write_text(correlation_csv(rows), encoding="utf-8")
    print(f"wrote full report bundle to {out_dir}")
    return 0


def _cmd_sample_check(args) -> int:
    method = initializers.get_method(args.method)
    if args.n < 2:
        raise ValueError("--n must be >= 2")
    stream = derive_stream(args.seed, ["sample-check", method.name])
    if method.family == "LHS":
        draws = initializers.lhs_unit_matrix(args.n, 1, stream).values.ravel()
    else:
        draws = initializers.sample_raw(method, args.n, stream)
    mean, var = initializers.analytic_moments(method)
    print(f"method={method.name} n={args.n} seed={args.seed}")
    print(f"{'':>12}  {'empirical':>14}  {'analytic':>14}")
    print(f"{'mean':>12}  {np.mean(draws):>14.6g}  {mean:>14.6g}")
    print(f"{'variance':>12}  {np.var(draws, ddof=1):>14.6g}  {var:>14.6g}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "list":
            return _cmd_list()
        if args.verb == "run":
            return _cmd_run(args)
        if args.verb == "rank":
            return _cmd_rank(args)
        if args.verb == "correlate":
            return _cmd_correlate(args)
        if args.verb == "report":
            return _cmd_report(args)
        if args.verb == "sample-check":
            return _cmd_sample_check(args)
        if args.verb == "serve":
            return _cmd_serve(args)
        parser.error(f"unknown verb {args.verb!r}")
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
