"""initbench: metaheuristic optimizers under 22 population-initialization
methods, with the benchmark suite, rank statistics, and experiment harness."""

from . import benchmarks, experiment, initializers, optimizers, reports, special, stats
from .rng import RngStream, derive_stream, next_unit

__all__ = [
    "RngStream",
    "benchmarks",
    "derive_stream",
    "experiment",
    "initializers",
    "next_unit",
    "optimizers",
    "reports",
    "special",
    "stats",
]

__version__ = "0.1.0"
