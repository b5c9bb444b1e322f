"""Real-coded genetic algorithm: the better half survives, the worse half is
rebuilt from blend-crossover offspring with per-gene uniform mutation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..benchmarks import BenchmarkFn
from ..rng import RngStream
from .base import Population

ELITE_FRACTION = 0.5  # fixed: half the population is kept each generation


@dataclass(frozen=True)
class GAConfig:
    pop_size: int = 3000
    mutation_prob: float = 0.1

    def __post_init__(self):
        if self.pop_size < 4 or self.pop_size % 2 != 0:
            raise ValueError("pop_size must be even and >= 4")
        if not 0.0 <= self.mutation_prob <= 1.0:
            raise ValueError("mutation_prob must lie in [0, 1]")


def blend(p1: np.ndarray, p2: np.ndarray, weight) -> np.ndarray:
    """Arithmetic crossover: weight * p1 + (1 - weight) * p2."""
    return weight * p1 + (1.0 - weight) * p2


def tournament_pick(stream: RngStream, fitness: np.ndarray, count: int) -> np.ndarray:
    """Size-2 tournament: the better of two uniformly drawn contestants."""
    n = fitness.shape[0]
    a = stream.integers(0, n, count)
    b = stream.integers(0, n, count)
    return np.where(fitness[a] <= fitness[b], a, b)


class GeneticAlgorithm:
    """Algorithm id ``ga``.  Each generation evaluates np / 2 offspring."""

    def __init__(self, cfg: GAConfig = GAConfig()):
        self.cfg = cfg

    def max_generation_cost(self, n: int) -> int:
        return n // 2

    def init_state(self, pop: Population, stream: RngStream) -> dict:
        if pop.size < 4 or pop.size % 2 != 0:
            raise ValueError("population must be even and >= 4")
        return {}

    def generation(self, pop: Population, state: dict, fn: BenchmarkFn,
                   stream: RngStream, t: int, t_max: int) -> None:
        x = pop.positions
        fit = pop.fitness
        n, d = x.shape
        half = n // 2

        order = np.argsort(fit, kind="stable")
        elite = order[:half]
        elite_pos = x[elite].copy()
        elite_fit = fit[elite].copy()

        p1 = tournament_pick(stream, elite_fit, half)
        p2 = tournament_pick(stream, elite_fit, half)
        while True:  # parents must be two distinct elites
            same = p1 == p2
            if not same.any():
                break
            p2[same] = tournament_pick(stream, elite_fit, int(same.sum()))

        weight = stream.gen.random((half, 1))
        children = blend(elite_pos[p1], elite_pos[p2], weight)
        mutate = stream.gen.random((half, d)) < self.cfg.mutation_prob
        space = fn.space
        resampled = space.lower + stream.gen.random((half, d)) * (space.upper - space.lower)
        children = np.where(mutate, resampled, children)

        f_children = fn.evaluate_many(children)
        pop.fe_count += half

        x[:half] = elite_pos
        fit[:half] = elite_fit
        x[half:] = children
        fit[half:] = f_children
