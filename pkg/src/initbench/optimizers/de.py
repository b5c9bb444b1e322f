"""Adaptive differential evolution with a five-strategy mutation pool.

Each individual carries its own (strategy, F, CR) triple.  A triple survives
as long as it keeps producing improvements; on a failed trial it is resampled
uniformly from the pools.  Selection is synchronous: all trials are built
against the generation-start population.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..benchmarks import BenchmarkFn
from ..rng import RngStream
from .base import Population, distinct_indices

CR_POOL = (0.4, 0.5, 0.6, 0.7, 0.8)
F_POOL = (0.5, 0.6, 0.7, 0.8, 0.9)
N_STRATEGIES = 5  # rand/1, best/1, current-to-best/1, best/2, rand/2
MIN_POP = 6  # rand/2 needs five distinct partners plus the target


@dataclass(frozen=True)
class DEAConfig:
    pop_size: int = 100
    cr_pool: tuple = CR_POOL
    f_pool: tuple = F_POOL

    def __post_init__(self):
        if self.pop_size < MIN_POP:
            raise ValueError(f"adaptive DE needs a population of at least {MIN_POP}")
        if not self.cr_pool or not self.f_pool:
            raise ValueError("parameter pools must be non-empty")


def build_mutants(x: np.ndarray, best: np.ndarray, idx: np.ndarray,
                  strategy: np.ndarray, f: np.ndarray) -> np.ndarray:
    """Mutant vectors for all individuals given their strategies.

    idx holds five pairwise-distinct partner indices per row (none equal to
    the row itself); strategies use as many as they need.
    """
    r1, r2, r3, r4, r5 = (x[idx[:, c]] for c in range(5))
    fc = f[:, None]
    v = np.empty_like(x)
    m = strategy == 0  # rand/1
    v[m] = r1[m] + fc[m] * (r2[m] - r3[m])
    m = strategy == 1  # best/1
    v[m] = best + fc[m] * (r1[m] - r2[m])
    m = strategy == 2  # current-to-best/1
    v[m] = x[m] + fc[m] * (best - x[m]) + fc[m] * (r2[m] - r3[m])
    m = strategy == 3  # best/2
    v[m] = best + fc[m] * (r1[m] - r2[m]) + fc[m] * (r3[m] - r4[m])
    m = strategy == 4  # rand/2
    v[m] = r1[m] + fc[m] * (r2[m] - r3[m]) + fc[m] * (r4[m] - r5[m])
    return v


def crossover_mask(stream: RngStream, n: int, d: int, cr: np.ndarray) -> np.ndarray:
    """Binomial crossover mask: take the mutant where rand < CR or j == j_rand."""
    mask = stream.gen.random((n, d)) < cr[:, None]
    j_rand = stream.integers(0, d, n)
    mask[np.arange(n), j_rand] = True
    return mask


class AdaptiveDE:
    """Algorithm id ``de-a``."""

    def __init__(self, cfg: DEAConfig = DEAConfig()):
        self.cfg = cfg

    def max_generation_cost(self, n: int) -> int:
        return n

    def _sample_settings(self, stream: RngStream, m: int):
        strategy = stream.integers(0, N_STRATEGIES, m)
        f = np.asarray(self.cfg.f_pool)[stream.integers(0, len(self.cfg.f_pool), m)]
        cr = np.asarray(self.cfg.cr_pool)[stream.integers(0, len(self.cfg.cr_pool), m)]
        return strategy, f, cr

    def init_state(self, pop: Population, stream: RngStream) -> dict:
        if pop.size < MIN_POP:
            raise ValueError(f"adaptive DE needs a population of at least {MIN_POP}")
        strategy, f, cr = self._sample_settings(stream, pop.size)
        return {"strategy": strategy, "F": f, "CR": cr}

    def generation(self, pop: Population, state: dict, fn: BenchmarkFn,
                   stream: RngStream, t: int, t_max: int) -> None:
        x = pop.positions
        fit = pop.fitness
        n, d = x.shape
        best = x[pop.best_index].copy()

        idx = distinct_indices(stream, n, 5)
        mutants = build_mutants(x, best, idx, state["strategy"], state["F"])
        mask = crossover_mask(stream, n, d, state["CR"])
        trials = fn.space.clamp(np.where(mask, mutants, x))

        f_trial = fn.evaluate_many(trials)
        pop.fe_count += n

        improved = f_trial < fit
        x[improved] = trials[improved]
        fit[improved] = f_trial[improved]

        failed = ~improved
        m = int(failed.sum())
        if m:
            strategy, f_new, cr_new = self._sample_settings(stream, m)
            state["strategy"][failed] = strategy
            state["F"][failed] = f_new
            state["CR"][failed] = cr_new
