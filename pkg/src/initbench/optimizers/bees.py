"""Artificial bee colony: employed/onlooker neighbor moves plus scout resets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..benchmarks import BenchmarkFn
from ..rng import RngStream
from .base import Population


@dataclass(frozen=True)
class ABCConfig:
    pop_size: int = 50
    limit: Optional[int] = None  # abandonment threshold; defaults to D * NP

    def __post_init__(self):
        if self.pop_size < 2:
            raise ValueError("bee colony needs at least 2 food sources")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be >= 1")


def neighbor_move(x: np.ndarray, partner: np.ndarray, dim: int, phi: float) -> np.ndarray:
    """Candidate source: perturb one dimension toward/away from a partner."""
    v = x.copy()
    v[dim] = x[dim] + phi * (x[dim] - partner[dim])
    return v


def selection_weights(fitness: np.ndarray) -> np.ndarray:
    """Standard objective-to-weight map for the onlooker roulette."""
    return np.where(fitness >= 0.0, 1.0 / (1.0 + fitness), 1.0 + np.abs(fitness))


class ArtificialBeeColony:
    """Algorithm id ``abc``.

    Proposals within a phase are built from the phase-start population and
    accepted greedily; trial counters reset on improvement and grow otherwise.
    Sources whose counter exceeds the limit are re-initialized uniformly.
    """

    def __init__(self, cfg: ABCConfig = ABCConfig()):
        self.cfg = cfg

    def max_generation_cost(self, n: int) -> int:
        return 3 * n  # two move phases plus at most n scouts

    def init_state(self, pop: Population, stream: RngStream) -> dict:
        n, d = pop.positions.shape
        limit = self.cfg.limit if self.cfg.limit is not None else d * n
        return {"counters": np.zeros(n, dtype=int), "limit": int(limit)}

    def _moves(self, x: np.ndarray, sources: np.ndarray, stream: RngStream) -> np.ndarray:
        n = sources.shape[0]
        total = x.shape[0]
        partners = stream.integers(0, total, n)
        while True:
            clash = partners == sources
            if not clash.any():
                break
            partners[clash] = stream.integers(0, total, int(clash.sum()))
        dims = stream.integers(0, x.shape[1], n)
        phi = stream.uniform(-1.0, 1.0, n)
        rows = np.arange(n)
        v = x[sources].copy()
        v[rows, dims] = x[sources, dims] + phi * (x[sources, dims] - x[partners, dims])
        return v

    def generation(self, pop: Population, state: dict, fn: BenchmarkFn,
                   stream: RngStream, t: int, t_max: int) -> None:
        x = pop.positions
        fit = pop.fitness
        counters = state["counters"]
        n, d = x.shape

        # Employed phase: one candidate per source.
        all_sources = np.arange(n)
        v = fn.space.clamp(self._moves(x, all_sources, stream))
        fv = fn.evaluate_many(v)
        pop.fe_count += n
        better = fv < fit
        x[better] = v[better]
        fit[better] = fv[better]
        counters[better] = 0
        counters[~better] += 1

        # Onlooker phase: fitness-proportional source selection.
        weights = selection_weights(fit)
        cum = np.cumsum(weights / weights.sum())
        cum[-1] = 1.0
        chosen = np.searchsorted(cum, stream.gen.random(n), side="right")
        v = fn.space.clamp(self._moves(x, chosen, stream))
        fv = fn.evaluate_many(v)
        pop.fe_count += n
        for o in range(n):  # sequential so repeated picks see fresh values
            s = chosen[o]
            if fv[o] < fit[s]:
                x[s] = v[o]
                fit[s] = fv[o]
                counters[s] = 0
            else:
                counters[s] += 1

        # Scout phase: abandon exhausted sources.
        exhausted = np.flatnonzero(counters > state["limit"])
        if exhausted.size:
            space = fn.space
            fresh = space.lower + stream.gen.random((exhausted.size, d)) * (space.upper - space.lower)
            f_fresh = fn.evaluate_many(fresh)
            pop.fe_count += exhausted.size
            x[exhausted] = fresh
            fit[exhausted] = f_fresh
            counters[exhausted] = 0
