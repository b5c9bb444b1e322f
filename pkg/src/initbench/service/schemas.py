"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class CatalogResponse(BaseModel):
    algorithms: list[str]
    init_methods: list[str]
    functions: list[str]


class PlanModel(BaseModel):
    master_seed: Optional[int] = None
    dimension: int = 30
    budget_fes: int = 600_000
    runs_per_cell: int = 20
    algorithms: dict[str, dict] = Field(default_factory=lambda: {"de-a": {}})
    init_methods: Optional[list[str]] = None
    functions: Optional[list[str]] = None
    np_t_grid: Optional[dict[str, list[tuple[int, Optional[int]]]]] = None


class RunRequest(BaseModel):
    plan: PlanModel
    seed: Optional[int] = None  # overrides plan.master_seed
    jobs: int = 1


class RunRecordModel(BaseModel):
    algorithm: str
    init_method: str
    function: str
    np: int
    t: Optional[int]
    run_index: int
    best_value: float
    fe_used: int
    initial_delta: float
    best_position: list[float]


class RunResponse(BaseModel):
    records: list[RunRecordModel]
    csv_text: str


class RankRequest(BaseModel):
    csv_text: str
    scope: Literal["per-function", "cross-function"] = "per-function"
    indicators: Optional[list[Literal["best", "mean", "var", "dist"]]] = None


class RankTableModel(BaseModel):
    algorithm: str
    function: Optional[str] = None  # absent for the cross-function scope
    methods: list[str]
    block_labels: list[str]
    per_block_ranks: list[list[float]]
    mean_rank: list[float]
    dense_rank: list[int]
    statistic: float
    df: int
    p_value: float


class RankResponse(BaseModel):
    scope: str
    tables: list[RankTableModel]
    ranks_csv: str
    friedman_csv: str
    markdown: str


class CorrelateRequest(BaseModel):
    csv_text: str
    outlier_filter: Optional[Literal["iqr"]] = None


class CorrelationRowModel(BaseModel):
    algorithm: str
    function: str
    r: Optional[float]
    p_value: Optional[float]
    n: int
    outliers_removed: int


class CorrelateResponse(BaseModel):
    rows: list[CorrelationRowModel]
    csv_text: str


class SampleCheckRequest(BaseModel):
    method: str
    n: int = 100_000
    seed: int = 0


class SampleCheckResponse(BaseModel):
    method: str
    n: int
    empirical_mean: float
    empirical_variance: float
    analytic_mean: float
    analytic_variance: float
