"""Particle swarm optimization with an inertia weight."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..benchmarks import BenchmarkFn
from ..rng import RngStream
from .base import Population


@dataclass(frozen=True)
class PSOWConfig:
    pop_size: int = 3000
    c1: float = 1.5
    c2: float = 1.5
    w_mode: str = "fixed"  # "fixed" uses w; "linear" decays w_max -> w_min
    w: float = 0.8
    w_max: float = 0.9
    w_min: float = 0.4
    per_dimension_r: bool = False
    velocity_clamp: float = 0.2  # |v_j| <= clamp * range_j; prevents divergence

    def __post_init__(self):
        if self.pop_size < 1:
            raise ValueError("pop_size must be >= 1")
        if self.w_mode not in ("fixed", "linear"):
            raise ValueError("w_mode must be 'fixed' or 'linear'")
        for name, val in (("w", self.w), ("w_max", self.w_max), ("w_min", self.w_min)):
            if not 0.0 < val < 2.0:
                raise ValueError(f"{name} must lie in (0, 2)")
        if self.w_mode == "linear" and not self.w_min < self.w_max:
            raise ValueError("linear schedule needs w_min < w_max")


def velocity_update(v, x, pbest, gbest, w, c1, c2, r1, r2):
    """New velocity from the inertia, cognitive and social terms."""
    return w * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x)


def inertia_weight(cfg: PSOWConfig, t: int, t_max: int) -> float:
    if cfg.w_mode == "fixed":
        return cfg.w
    return cfg.w_max - (cfg.w_max - cfg.w_min) * t / max(t_max, 1)


class InertiaWeightPSO:
    """Algorithm id ``pso-w``."""

    def __init__(self, cfg: PSOWConfig = PSOWConfig()):
        self.cfg = cfg

    def max_generation_cost(self, n: int) -> int:
        return n

    def init_state(self, pop: Population, stream: RngStream) -> dict:
        best = pop.best_index
        return {
            "velocity": np.zeros_like(pop.positions),
            "pbest_pos": pop.positions.copy(),
            "pbest_val": pop.fitness.copy(),
            "gbest_pos": pop.positions[best].copy(),
            "gbest_val": float(pop.fitness[best]),
        }

    def generation(self, pop: Population, state: dict, fn: BenchmarkFn,
                   stream: RngStream, t: int, t_max: int) -> None:
        cfg = self.cfg
        x = pop.positions
        n, d = x.shape
        w = inertia_weight(cfg, t, t_max)

        r_shape = (n, d) if cfg.per_dimension_r else (n, 1)
        r1 = stream.gen.random(r_shape)
        r2 = stream.gen.random(r_shape)
        v = velocity_update(state["velocity"], x, state["pbest_pos"],
                            state["gbest_pos"], w, cfg.c1, cfg.c2, r1, r2)
        v_max = cfg.velocity_clamp * (fn.space.upper - fn.space.lower)
        np.clip(v, -v_max, v_max, out=v)
        state["velocity"] = v

        new_x = fn.space.clamp(x + v)
        f_new = fn.evaluate_many(new_x)
        pop.fe_count += n
        pop.positions[:] = new_x
        pop.fitness[:] = f_new

        improved = f_new < state["pbest_val"]
        state["pbest_pos"][improved] = new_x[improved]
        state["pbest_val"][improved] = f_new[improved]
        i = int(np.argmin(state["pbest_val"]))
        if state["pbest_val"][i] < state["gbest_val"]:
            state["gbest_val"] = float(state["pbest_val"][i])
            state["gbest_pos"] = state["pbest_pos"][i].copy()
