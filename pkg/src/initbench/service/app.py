"""HTTP front end over the core operations.

Every endpoint is a stateless wrapper: plans run synchronously, reports are
pure functions of the posted CSV.  The CLI drives the same core functions
in-process; this service exposes them to remote clients.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import benchmarks, initializers
from ..experiment import (
    ExperimentPlan,
    PlanError,
    export_csv_text,
    import_csv_text,
    run_plan,
)
from ..optimizers import algorithm_ids
from ..reports import (
    INDICATORS,
    build_rank_report,
    correlation_csv,
    correlation_report,
    friedman_csv,
    rank_report_csv,
    rank_report_markdown,
)
from ..rng import derive_stream
from . import schemas

app = FastAPI(
    title="initbench",
    description="Metaheuristic optimizers under 22 population-initialization methods: "
    "runs, rank statistics, and correlation reports.",
)


@app.get("/catalog", response_model=schemas.CatalogResponse)
def catalog() -> schemas.CatalogResponse:
    return schemas.CatalogResponse(
        algorithms=algorithm_ids(),
        init_methods=initializers.method_names(),
        functions=benchmarks.function_names(),
    )


def _plan_from_request(req: schemas.RunRequest) -> ExperimentPlan:
    raw = req.plan.model_dump(exclude_none=True)
    if req.seed is not None:
        raw["master_seed"] = req.seed
    try:
        return ExperimentPlan.from_dict(raw)
    except PlanError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/runs", response_model=schemas.RunResponse)
def runs(req: schemas.RunRequest) -> schemas.RunResponse:
    plan = _plan_from_request(req)
    try:
        store = run_plan(plan, jobs=req.jobs)
    except PlanError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    records = [
        schemas.RunRecordModel(
            algorithm=r.algorithm,
            init_method=r.init_method,
            function=r.function,
            np=r.np_,
            t=r.t,
            run_index=r.run_index,
            best_value=r.best_value,
            fe_used=r.fe_used,
            initial_delta=r.initial_delta,
            best_position=[float(v) for v in r.best_position],
        )
        for r in store.records
    ]
    return schemas.RunResponse(records=records, csv_text=export_csv_text(store))


def _store_from_text(csv_text: str):
    try:
        return import_csv_text(csv_text)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/reports/rank", response_model=schemas.RankResponse)
def rank(req: schemas.RankRequest) -> schemas.RankResponse:
    store = _store_from_text(req.csv_text)
    indicators = tuple(req.indicators) if req.indicators else INDICATORS
    try:
        report = build_rank_report(store, req.scope, indicators)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

    tables = []
    if report.scope == "per-function":
        items = [
            (alg, fn_id, table)
            for alg, by_fn in report.tables.items()
            for fn_id, table in by_fn.items()
        ]
    else:
        items = [(alg, None, table) for alg, table in report.tables.items()]
    for alg, fn_id, table in items:
        tables.append(
            schemas.RankTableModel(
                algorithm=alg,
                function=fn_id,
                methods=table.methods,
                block_labels=[str(b) for b in table.block_labels],
                per_block_ranks=table.per_block_ranks.tolist(),
                mean_rank=table.mean_rank.tolist(),
                dense_rank=[int(v) for v in table.dense],
                statistic=table.friedman.statistic,
                df=table.friedman.treatments - 1,
                p_value=table.friedman.p_value,
            )
        )
    return schemas.RankResponse(
        scope=report.scope,
        tables=tables,
        ranks_csv=rank_report_csv(report),
        friedman_csv=friedman_csv(report),
        markdown=rank_report_markdown(report),
    )


@app.post("/reports/correlation", response_model=schemas.CorrelateResponse)
def correlation(req: schemas.CorrelateRequest) -> schemas.CorrelateResponse:
    store = _store_from_text(req.csv_text)
    rows = correlation_report(store, outlier_filter=req.outlier_filter)
    return schemas.CorrelateResponse(
        rows=[
            schemas.CorrelationRowModel(
                algorithm=r.algorithm,
                function=r.function,
                r=r.r,
                p_value=r.p_value,
                n=r.n,
                outliers_removed=r.outliers_removed,
            )
            for r in rows
        ],
        csv_text=correlation_csv(rows),
    )


@app.post("/samples/check", response_model=schemas.SampleCheckResponse)
def sample_check(req: schemas.SampleCheckRequest) -> schemas.SampleCheckResponse:
    try:
        method = initializers.get_method(req.method)
    except KeyError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    if req.n < 2:
        raise HTTPException(status_code=400, detail="n must be >= 2")
    stream = derive_stream(req.seed, ["sample-check", method.name])
    if method.family == "LHS":
        draws = initializers.lhs_unit_matrix(req.n, 1, stream).values.ravel()
    else:
        draws = initializers.sample_raw(method, req.n, stream)
    mean, var = initializers.analytic_moments(method)
    return schemas.SampleCheckResponse(
        method=method.name,
        n=req.n,
        empirical_mean=float(np.mean(draws)),
        empirical_variance=float(np.var(draws, ddof=1)),
        analytic_mean=float(mean),
        analytic_variance=float(var),
    )
