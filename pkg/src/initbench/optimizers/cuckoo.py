"""Cuckoo search: Levy-flight global walk plus a gated pairwise local walk."""

from __future__ import annotations

from dataclasses import dataclass
from math import gamma, pi, sin

import numpy as np

from ..benchmarks import BenchmarkFn
from ..rng import RngStream
from .base import Population, distinct_indices

MIN_POP = 3  # local walk pairs two distinct other nests


@dataclass(frozen=True)
class CSConfig:
    pop_size: int = 30
    pa: float = 0.25          # switching probability between walks
    levy_lambda: float = 1.5  # tail exponent of the flight lengths
    alpha: float = 0.01       # global-walk step factor

    def __post_init__(self):
        if self.pop_size < MIN_POP:
            raise ValueError(f"cuckoo search needs a population of at least {MIN_POP}")
        if not 0.0 < self.pa < 1.0:
            raise ValueError("pa must lie in (0, 1)")
        if not 1.0 < self.levy_lambda <= 3.0:
            raise ValueError("levy_lambda must lie in (1, 3]")


def mantegna_sigma(lam: float) -> float:
    """Gaussian scale for the numerator of the Mantegna step construction."""
    num = gamma(1.0 + lam) * sin(pi * lam / 2.0)
    den = gamma((1.0 + lam) / 2.0) * lam * 2.0 ** ((lam - 1.0) / 2.0)
    return (num / den) ** (1.0 / lam)


def levy_from_normals(u: np.ndarray, v: np.ndarray, lam: float) -> np.ndarray:
    return u / np.abs(v) ** (1.0 / lam)


def levy_matrix(shape, lam: float, stream: RngStream) -> np.ndarray:
    """Heavy-tailed step components with tail index lam (Mantegna sampler)."""
    if not 1.0 < lam <= 3.0:
        raise ValueError("lam must lie in (1, 3]")
    sigma = mantegna_sigma(lam)
    u = stream.normal(0.0, sigma, shape)
    v = stream.normal(0.0, 1.0, shape)
    return levy_from_normals(u, v, lam)


def levy_step(d: int, lam: float, stream: RngStream) -> np.ndarray:
    """Length-d vector of Levy-distributed step components."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return levy_matrix((d,), lam, stream)


class CuckooSearch:
    """Algorithm id ``cs``.  Each generation evaluates 2 * np proposals."""

    def __init__(self, cfg: CSConfig = CSConfig()):
        self.cfg = cfg

    def max_generation_cost(self, n: int) -> int:
        return 2 * n

    def init_state(self, pop: Population, stream: RngStream) -> dict:
        if pop.size < MIN_POP:
            raise ValueError(f"cuckoo search needs a population of at least {MIN_POP}")
        return {}

    def _greedy_replace(self, pop: Population, proposals: np.ndarray, fn: BenchmarkFn) -> None:
        proposals = fn.space.clamp(proposals)
        f_prop = fn.evaluate_many(proposals)
        pop.fe_count += proposals.shape[0]
        better = f_prop < pop.fitness
        pop.positions[better] = proposals[better]
        pop.fitness[better] = f_prop[better]

    def generation(self, pop: Population, state: dict, fn: BenchmarkFn,
                   stream: RngStream, t: int, t_max: int) -> None:
        cfg = self.cfg
        x = pop.positions
        n, d = x.shape

        # Global walk: step size scales with the distance from the best nest,
        # so the best nest itself proposes in place.
        best = x[pop.best_index].copy()
        steps = levy_matrix((n, d), cfg.levy_lambda, stream)
        self._greedy_replace(pop, x + cfg.alpha * steps * (x - best), fn)

        # Local walk: pairwise difference move, applied with probability pa.
        eps = stream.gen.random(n)
        gate = (eps < cfg.pa).astype(float)[:, None]
        scale = stream.gen.random((n, 1))
        jk = distinct_indices(stream, n, 2)
        diff = x[jk[:, 0]] - x[jk[:, 1]]
        self._greedy_replace(pop, x + scale * gate * diff, fn)
