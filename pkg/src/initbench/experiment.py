"""Declarative experiment plans, parallel execution, CSV persistence.

A plan is a grid of (algorithm, init method, function, NP/T) cells, each run
``runs_per_cell`` times.  Every run draws from a stream derived with lineage
[algorithm, init, function, np, run_index], so results are independent of
worker scheduling and of which other cells exist in the plan.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from . import benchmarks, initializers
from .optimizers import GENERATION_COST_FACTOR, algorithm_ids, make_algorithm, run
from .rng import derive_stream

# Table-5 style defaults: (NP, T). A T of None means the FE budget governs.
DEFAULT_NP_T = {
    "de-a": (100, 6000),
    "pso-w": (3000, 200),
    "cs": (30, 10000),
    "abc": (50, None),
    "ga": (3000, None),
}

CSV_HEADER = [
    "algorithm",
    "init_method",
    "function",
    "np",
    "t",
    "run_index",
    "best_value",
    "fe_used",
    "initial_delta",
    "best_position",
]

DEFAULT_FUNCTIONS = [
    "Rosenbrock", "Ackley", "Sphere", "Rastrigin", "Griewank",
    "Zakharov", "Alpine", "Easom", "Schwefel",
]


class PlanError(ValueError):
    """Raised when a plan cannot be validated before execution."""


@dataclass(frozen=True)
class Cell:
    algorithm: str
    init_method: str
    function: str
    np_: int
    t: Optional[int]


@dataclass(frozen=True)
class RunRecord:
    algorithm: str
    init_method: str
    function: str
    np_: int
    t: Optional[int]
    run_index: int
    best_value: float
    fe_used: int
    initial_delta: float
    best_position: np.ndarray

    @property
    def key(self) -> tuple:
        return (self.algorithm, self.init_method, self.function, self.np_, self.run_index)

    @property
    def lineage(self) -> list:
        """Labels of the stream this run drew from."""
        return [self.algorithm, self.init_method, self.function, self.np_, self.run_index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RunRecord):
            return NotImplemented
        return (
            self.key == other.key
            and self.t == other.t
            and self.best_value == other.best_value
            and self.fe_used == other.fe_used
            and self.initial_delta == other.initial_delta
            and np.array_equal(self.best_position, other.best_position)
        )


@dataclass
class ExperimentPlan:
    master_seed: int
    dimension: int = 30
    budget_fes: int = 600_000
    runs_per_cell: int = 20
    algorithms: dict = field(default_factory=lambda: {"de-a": {}})
    init_methods: Sequence[str] = field(default_factory=initializers.method_names)
    functions: Sequence[str] = field(default_factory=lambda: list(DEFAULT_FUNCTIONS))
    np_t_grid: Optional[dict] = None  # algorithm -> list of (NP, T) pairs

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentPlan":
        known = {
            "master_seed", "seed", "dimension", "budget_fes", "runs_per_cell",
            "algorithms", "init_methods", "functions", "np_t_grid",
        }
        unknown = set(raw) - known
        if unknown:
            raise PlanError(f"unknown plan keys: {sorted(unknown)}")
        data = dict(raw)
        if "seed" in data:  # config-file spelling of master_seed
            data["master_seed"] = data.pop("seed")
        if "master_seed" not in data:
            raise PlanError("plan needs a seed (key 'seed' or 'master_seed', or --seed)")
        grid = data.get("np_t_grid")
        if grid is not None:
            data["np_t_grid"] = {
                alg: [(int(np_), None if t is None else int(t)) for np_, t in pairs]
                for alg, pairs in grid.items()
            }
        algorithms = data.get("algorithms")
        if isinstance(algorithms, list):
            data["algorithms"] = {alg: {} for alg in algorithms}
        return cls(**data)

    @classmethod
    def from_json_file(cls, path) -> "ExperimentPlan":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def _np_t_pairs(self, alg_id: str, overrides: dict) -> list[tuple[int, Optional[int]]]:
        if self.np_t_grid and alg_id in self.np_t_grid:
            return list(self.np_t_grid[alg_id])
        default_np, default_t = DEFAULT_NP_T[alg_id]
        np_ = int(overrides.get("np", overrides.get("pop_size", default_np)))
        return [(np_, default_t if np_ == default_np else None)]

    def validate(self) -> None:
        problems = []
        if self.runs_per_cell < 1:
            problems.append("runs_per_cell must be >= 1")
        if self.dimension < 1:
            problems.append("dimension must be >= 1")
        for alg_id in self.algorithms:
            if alg_id not in algorithm_ids():
                problems.append(f"unknown algorithm: {alg_id!r}")
        for name in self.init_methods:
            if name not in initializers.CATALOG:
                problems.append(f"unknown init method: {name!r}")
        for fn_id in self.functions:
            if fn_id not in benchmarks.function_names():
                problems.append(f"unknown function: {fn_id!r}")
            else:
                try:
                    benchmarks.make_function(fn_id, self.dimension)
                except ValueError as exc:
                    problems.append(str(exc))
        for alg_id, overrides in self.algorithms.items():
            if alg_id not in algorithm_ids():
                continue
            pairs = self._np_t_pairs(alg_id, overrides)
            seen_np = set()
            for np_, t in pairs:
                if np_ in seen_np:
                    problems.append(f"{alg_id}: duplicate NP {np_} in np_t_grid (run keys would collide)")
                seen_np.add(np_)
                if self.budget_fes < np_:
                    problems.append(f"{alg_id}: budget {self.budget_fes} cannot evaluate NP={np_}")
                if t is not None:
                    cost = np_ * t * GENERATION_COST_FACTOR[alg_id]
                    if cost > self.budget_fes:
                        problems.append(
                            f"{alg_id}: NP={np_}, T={t} needs {cost:.0f} FEs, over the {self.budget_fes} budget"
                        )
                try:
                    make_algorithm(alg_id, {**overrides, "np": np_})
                except (ValueError, KeyError) as exc:
                    problems.append(f"{alg_id}: {exc}")
        if problems:
            raise PlanError("; ".join(problems))

    def cells(self) -> Iterator[Cell]:
        for alg_id, overrides in self.algorithms.items():
            for np_, t in self._np_t_pairs(alg_id, overrides):
                for init_name in self.init_methods:
                    for fn_id in self.functions:
                        yield Cell(alg_id, init_name, fn_id, np_, t)


def execute_run(plan: ExperimentPlan, cell: Cell, run_index: int) -> RunRecord:
    """One independent run; the stream lineage makes it scheduling-invariant."""
    stream = derive_stream(
        plan.master_seed,
        [cell.algorithm, cell.init_method, cell.function, cell.np_, run_index],
    )
    fn = benchmarks.make_function(cell.function, plan.dimension)
    method = initializers.get_method(cell.init_method)
    init = initializers.initial_population(method, cell.np_, fn.space, stream)
    algorithm = make_algorithm(cell.algorithm, {**plan.algorithms[cell.algorithm], "np": cell.np_})
    result = run(algorithm, fn, init, plan.budget_fes, stream, max_generations=cell.t)
    return RunRecord(
        algorithm=cell.algorithm,
        init_method=cell.init_method,
        function=cell.function,
        np_=cell.np_,
        t=cell.t,
        run_index=run_index,
        best_value=result.best_value,
        fe_used=result.fe_used,
        initial_delta=result.initial_delta,
        best_position=result.best_position,
    )


class ResultStore:
    """Sorted, uniquely-keyed collection of run records."""

    def __init__(self, records: Sequence[RunRecord] = ()):
        self.records: list[RunRecord] = []
        seen = set()
        for rec in sorted(records, key=lambda r: r.key):
            if rec.key in seen:
                raise ValueError(f"duplicate run key: {rec.key}")
            seen.add(rec.key)
            self.records.append(rec)

    def __len__(self) -> int:
        return len(self.records)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResultStore):
            return NotImplemented
        return self.records == other.records

    def algorithms(self) -> list[str]:
        return sorted({r.algorithm for r in self.records})

    def functions(self, algorithm: Optional[str] = None) -> list[str]:
        return sorted({r.function for r in self.records if algorithm in (None, r.algorithm)})

    def group(self, algorithm: str, function: str) -> dict[str, list[RunRecord]]:
        """Records of one (algorithm, function) pair, keyed by init method."""
        out: dict[str, list[RunRecord]] = {}
        for r in self.records:
            if r.algorithm == algorithm and r.function == function:
                out.setdefault(r.init_method, []).append(r)
        return out


def _run_task(args) -> RunRecord:
    plan, cell, run_index = args
    return execute_run(plan, cell, run_index)


def run_plan(plan: ExperimentPlan, jobs: int = 1) -> ResultStore:
    """Execute every cell x run of the plan; output is identical for any
    worker count."""
    plan.validate()
    tasks = [(plan, cell, i) for cell in plan.cells() for i in range(plan.runs_per_cell)]
    if jobs <= 1:
        records = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (jobs * 4) or 1)))
    return ResultStore(records)


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _write_csv(store: ResultStore, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(CSV_HEADER)
    for r in store.records:
        writer.writerow([
            r.algorithm,
            r.init_method,
            r.function,
            r.np_,
            "" if r.t is None else r.t,
            r.run_index,
            _fmt(r.best_value),
            r.fe_used,
            _fmt(r.initial_delta),
            ";".join(_fmt(v) for v in r.best_position),
        ])


def export_csv(store: ResultStore, path) -> None:
    if len(store) == 0:
        raise ValueError("refusing to export an empty store")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        _write_csv(store, fh)


def export_csv_text(store: ResultStore) -> str:
    if len(store) == 0:
        raise ValueError("refusing to export an empty store")
    buf = io.StringIO(newline="")
    _write_csv(store, buf)
    return buf.getvalue()


def _parse_csv(fh, origin: str) -> ResultStore:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError(f"{origin}: empty file") from None
    if header != CSV_HEADER:
        missing = [c for c in CSV_HEADER if c not in header]
        if missing:
            raise ValueError(f"{origin}: missing column(s): {', '.join(missing)}")
        raise ValueError(f"{origin}: unexpected header {header}")
    records = []
    for line_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(CSV_HEADER):
            raise ValueError(f"{origin}:{line_no}: expected {len(CSV_HEADER)} fields, got {len(row)}")
        try:
            records.append(RunRecord(
                algorithm=row[0],
                init_method=row[1],
                function=row[2],
                np_=int(row[3]),
                t=None if row[4] == "" else int(row[4]),
                run_index=int(row[5]),
                best_value=float(row[6]),
                fe_used=int(row[7]),
                initial_delta=float(row[8]),
                best_position=np.array([float(v) for v in row[9].split(";")]),
            ))
        except ValueError as exc:
            raise ValueError(f"{origin}:{line_no}: {exc}") from None
    return ResultStore(records)


def import_csv(path) -> ResultStore:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return _parse_csv(fh, str(path))


def import_csv_text(text: str) -> ResultStore:
    return _parse_csv(io.StringIO(text, newline=""), "<csv>")
