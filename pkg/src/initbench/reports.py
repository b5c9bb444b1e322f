"""Rank reports and the initial-distance correlation study over a result store.

Per-function scope: for one algorithm and one function, the four indicator
rows (Best/Mean/Var/Dist across the 22 init methods) are the blocks of a
Friedman test; methods are ordered by mean rank and then dense-ranked.
Cross-function scope: each function's dense ranks become one block, yielding
an aggregate ranking per algorithm with its own Friedman p-value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import benchmarks, initializers
from .experiment import ResultStore
from .stats import (
    FriedmanResult,
    average_ranks,
    dense_rank,
    friedman_test,
    pearson_test,
    summarize_runs,
)

INDICATORS = ("best", "mean", "var", "dist")
SCOPES = ("per-function", "cross-function")


@dataclass(frozen=True)
class RankTable:
    methods: list
    block_labels: list
    per_block_ranks: np.ndarray  # blocks x methods, fractional average ranks
    mean_rank: np.ndarray
    dense: np.ndarray
    friedman: FriedmanResult


@dataclass(frozen=True)
class RankReport:
    scope: str
    # per-function: {algorithm: {function: RankTable}}
    # cross-function: {algorithm: RankTable}
    tables: dict


class CoverageError(ValueError):
    """A rank report needs every init method present for every cell."""


def _check_coverage(store: ResultStore) -> None:
    methods = initializers.method_names()
    missing = []
    for alg in store.algorithms():
        for fn_id in store.functions(alg):
            group = store.group(alg, fn_id)
            for m in methods:
                if len(group.get(m, [])) < 2:
                    missing.append(f"({alg}, {fn_id}, {m})")
    if missing:
        raise CoverageError(
            "store does not cover all 22 init methods with >= 2 runs; missing: "
            + ", ".join(missing)
        )


def _indicator_values(store: ResultStore, algorithm: str, function: str,
                      indicators: Sequence[str]) -> np.ndarray:
    """indicators x methods matrix of summary values, catalog method order."""
    methods = initializers.method_names()
    group = store.group(algorithm, function)
    d = group[methods[0]][0].best_position.shape[0]
    x_opt, _ = benchmarks.optimum(function, d)
    rows = []
    for m in methods:
        recs = group[m]
        summary = summarize_runs(recs, x_opt)
        rows.append([getattr(summary, ind) for ind in indicators])
    return np.array(rows, dtype=float).T  # blocks x methods


def rank_table_from_values(values: np.ndarray, methods: Sequence[str],
                           block_labels: Sequence[str]) -> RankTable:
    """Rank each block row (smaller is better), then aggregate."""
    per_block = np.vstack([average_ranks(row) for row in values])
    mean_rank = per_block.mean(axis=0)
    return RankTable(
        methods=list(methods),
        block_labels=list(block_labels),
        per_block_ranks=per_block,
        mean_rank=mean_rank,
        dense=dense_rank(mean_rank),
        friedman=friedman_test(per_block, already_ranked=True),
    )


def build_rank_report(store: ResultStore, scope: str,
                      indicators: Sequence[str] = INDICATORS) -> RankReport:
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}")
    for ind in indicators:
        if ind not in INDICATORS:
            raise ValueError(f"unknown indicator: {ind!r}")
    _check_coverage(store)
    methods = initializers.method_names()

    per_function: dict = {}
    for alg in store.algorithms():
        per_function[alg] = {}
        for fn_id in store.functions(alg):
            values = _indicator_values(store, alg, fn_id, indicators)
            per_function[alg][fn_id] = rank_table_from_values(values, methods, indicators)

    if scope == "per-function":
        return RankReport(scope, per_function)

    cross: dict = {}
    for alg, by_fn in per_function.items():
        fn_ids = list(by_fn.keys())
        dense_blocks = np.array([by_fn[f].dense for f in fn_ids], dtype=float)
        cross[alg] = rank_table_from_values(dense_blocks, methods, fn_ids)
    return RankReport("cross-function", cross)


@dataclass(frozen=True)
class CorrelationRow:
    algorithm: str
    function: str
    r: Optional[float]
    p_value: Optional[float]
    n: int
    outliers_removed: int


def correlation_report(store: ResultStore, outlier_filter: Optional[str] = None) -> list:
    """Pearson test of mean initial distance vs Dist, one row per
    (algorithm, function); degenerate cells yield r = None."""
    rows = []
    for alg in store.algorithms():
        for fn_id in store.functions(alg):
            group = store.group(alg, fn_id)
            methods = [m for m in initializers.method_names() if m in group]
            d = group[methods[0]][0].best_position.shape[0]
            x_opt, _ = benchmarks.optimum(fn_id, d)
            deltas = []
            dists = []
            for m in methods:
                recs = group[m]
                deltas.append(float(np.mean([r.initial_delta for r in recs])))
                dists.append(summarize_runs(recs, x_opt).dist)
            try:
                res = pearson_test(deltas, dists, outlier_filter=outlier_filter)
                rows.append(CorrelationRow(alg, fn_id, res.r, res.p_value, res.n, res.outliers_removed))
            except ValueError:
                rows.append(CorrelationRow(alg, fn_id, None, None, len(methods), 0))
    return rows


# ---------------------------------------------------------------------------
# Rendering

def _fmt(x: float) -> str:
    return format(float(x), ".6g")


def rank_report_csv(report: RankReport) -> str:
    lines = []
    if report.scope == "per-function":
        sample = next(iter(next(iter(report.tables.values())).values()))
        blocks = [f"rank_{b}" for b in sample.block_labels]
        lines.append(",".join(["algorithm", "function", "method"] + blocks + ["mean_rank", "dense_rank"]))
        for alg, by_fn in report.tables.items():
            for fn_id, table in by_fn.items():
                for j, m in enumerate(table.methods):
                    cells = [alg, fn_id, f'"{m}"']
                    cells += [_fmt(table.per_block_ranks[b, j]) for b in range(len(table.block_labels))]
                    cells += [_fmt(table.mean_rank[j]), str(int(table.dense[j]))]
                    lines.append(",".join(cells))
    else:
        sample = next(iter(report.tables.values()))
        blocks = [f"rank_{b}" for b in sample.block_labels]
        lines.append(",".join(["algorithm", "method"] + blocks + ["mean_rank", "dense_rank"]))
        for alg, table in report.tables.items():
            for j, m in enumerate(table.methods):
                cells = [alg, f'"{m}"']
                cells += [_fmt(table.per_block_ranks[b, j]) for b in range(len(table.block_labels))]
                cells += [_fmt(table.mean_rank[j]), str(int(table.dense[j]))]
                lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def friedman_csv(report: RankReport) -> str:
    lines = ["scope,algorithm,function,statistic,df,p_value"]
    if report.scope == "per-function":
        for alg, by_fn in report.tables.items():
            for fn_id, table in by_fn.items():
                fr = table.friedman
                lines.append(
                    f"per-function,{alg},{fn_id},{_fmt(fr.statistic)},{fr.treatments - 1},{_fmt(fr.p_value)}"
                )
    else:
        for alg, table in report.tables.items():
            fr = table.friedman
            lines.append(
                f"cross-function,{alg},,{_fmt(fr.statistic)},{fr.treatments - 1},{_fmt(fr.p_value)}"
            )
    return "\n".join(lines) + "\n"


def _markdown_table(table: RankTable) -> list:
    head = ["method"] + [str(b) for b in table.block_labels] + ["mean rank", "rank"]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for j, m in enumerate(table.methods):
        row = [m]
        row += [_fmt(table.per_block_ranks[b, j]) for b in range(len(table.block_labels))]
        row += [_fmt(table.mean_rank[j]), str(int(table.dense[j]))]
        lines.append("| " + " | ".join(row) + " |")
    fr = table.friedman
    lines.append("")
    lines.append(f"Friedman chi-square = {_fmt(fr.statistic)} (df = {fr.treatments - 1}), p = {_fmt(fr.p_value)}")
    return lines


def rank_report_markdown(report: RankReport) -> str:
    lines = [f"# Initialization ranks ({report.scope})", ""]
    if report.scope == "per-function":
        for alg, by_fn in report.tables.items():
            lines.append(f"## {alg}")
            lines.append("")
            for fn_id, table in by_fn.items():
                lines.append(f"### {fn_id}")
                lines.append("")
                lines.extend(_markdown_table(table))
                lines.append("")
    else:
        for alg, table in report.tables.items():
            lines.append(f"## {alg}")
            lines.append("")
            lines.extend(_markdown_table(table))
            lines.append("")
    return "\n".join(lines)


def correlation_csv(rows: Sequence[CorrelationRow]) -> str:
    lines = ["algorithm,function,r,p_value,n,outliers_removed"]
    for row in rows:
        r = "" if row.r is None else format(row.r, ".17g")
        p = "" if row.p_value is None else format(row.p_value, ".17g")
        lines.append(f"{row.algorithm},{row.function},{r},{p},{row.n},{row.outliers_removed}")
    return "\n".join(lines) + "\n"
