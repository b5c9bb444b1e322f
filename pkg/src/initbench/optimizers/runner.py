"""Budget-driven run loop shared by all five optimizers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..benchmarks import BenchmarkFn
from ..rng import RngStream
from .base import Population
from .bees import ABCConfig, ArtificialBeeColony
from .cuckoo import CSConfig, CuckooSearch
from .de import DEAConfig, AdaptiveDE
from .ga import GAConfig, GeneticAlgorithm
from .pso import PSOWConfig, InertiaWeightPSO

ALGORITHMS = {
    "de-a": (AdaptiveDE, DEAConfig),
    "pso-w": (InertiaWeightPSO, PSOWConfig),
    "cs": (CuckooSearch, CSConfig),
    "abc": (ArtificialBeeColony, ABCConfig),
    "ga": (GeneticAlgorithm, GAConfig),
}

# FEs consumed per individual per generation, for budget/plan arithmetic.
GENERATION_COST_FACTOR = {"de-a": 1.0, "pso-w": 1.0, "cs": 2.0, "abc": 2.0, "ga": 0.5}


def algorithm_ids() -> list[str]:
    return list(ALGORITHMS.keys())


def make_algorithm(alg_id: str, overrides: Optional[dict] = None):
    """Instantiate an algorithm from its id and external config keys.

    The external key ``np`` maps to the internal ``pop_size`` field.
    """
    if alg_id not in ALGORITHMS:
        raise KeyError(f"unknown algorithm: {alg_id!r}")
    cls, cfg_cls = ALGORITHMS[alg_id]
    kwargs = dict(overrides or {})
    if "np" in kwargs:
        kwargs["pop_size"] = kwargs.pop("np")
    valid = set(cfg_cls.__dataclass_fields__)
    unknown = set(kwargs) - valid
    if unknown:
        raise ValueError(f"unknown {alg_id} config keys: {sorted(unknown)}")
    if "cr_pool" in kwargs:
        kwargs["cr_pool"] = tuple(kwargs["cr_pool"])
    if "f_pool" in kwargs:
        kwargs["f_pool"] = tuple(kwargs["f_pool"])
    return cls(cfg_cls(**kwargs))


@dataclass
class RunResult:
    """Outcome of a single optimizer run."""

    best_value: float
    best_position: np.ndarray
    fe_used: int
    initial_delta: float
    history: Optional[list] = None


def run(
    algorithm,
    fn: BenchmarkFn,
    init_positions: np.ndarray,
    budget_fes: int,
    stream: RngStream,
    max_generations: Optional[int] = None,
    record_history: bool = False,
) -> RunResult:
    """Evaluate the initial population, then advance generations until the
    next one could exceed the FE budget (or the generation cap is reached)."""
    init_positions = np.asarray(init_positions, dtype=float)
    if init_positions.ndim != 2 or init_positions.shape[1] != fn.d:
        raise ValueError(f"initial positions must be (np, {fn.d})")
    if not fn.space.contains(init_positions):
        raise ValueError("initial positions must lie within the search bounds")
    n = init_positions.shape[0]
    if budget_fes < n:
        raise ValueError(f"budget of {budget_fes} FEs cannot evaluate the initial population of {n}")

    initial_delta = float(np.abs(init_positions - fn.x_opt).sum() / n)

    fitness = fn.evaluate_many(init_positions)
    pop = Population(init_positions.copy(), fitness.copy(), fe_count=n)
    state = algorithm.init_state(pop, stream)

    best_value = pop.best_value
    best_position = pop.best_position
    history = [] if record_history else None

    # Planned horizon, used by iteration-dependent schedules.
    nominal = max(algorithm.max_generation_cost(n), 1)
    budget_horizon = (budget_fes - n) // nominal
    t_max = budget_horizon if max_generations is None else min(max_generations, budget_horizon)
    t_max = max(t_max, 1)

    t = 0
    while (max_generations is None or t < max_generations) and \
            pop.fe_count + algorithm.max_generation_cost(n) <= budget_fes:
        algorithm.generation(pop, state, fn, stream, t, t_max)
        if pop.best_value < best_value:
            best_value = pop.best_value
            best_position = pop.best_position
        if history is not None:
            history.append(best_value)
        t += 1

    return RunResult(best_value, best_position, pop.fe_count, initial_delta, history)
