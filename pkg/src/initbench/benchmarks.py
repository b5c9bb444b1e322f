"""Objective functions with known optima, plus seeded shift/rotate wrappers.

Evaluators are pure and vectorized over populations: they map an (n, d)
position matrix to an (n,) value vector.  One evaluated row equals one
function evaluation for budget accounting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .rng import derive_stream

SCHWEFEL_CONSTANT = 418.98288727243369  # per-dimension offset, as published
SCHWEFEL_X_OPT = 420.96857
MICHALEWICZ_M = 10


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned box domain: per-dimension lower/upper bounds."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise ValueError("lower and upper must be 1-D vectors of equal length")
        if not np.all(lower < upper):
            raise ValueError("every lower bound must be strictly below its upper bound")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def d(self) -> int:
        return self.lower.shape[0]

    @classmethod
    def cube(cls, low: float, high: float, d: int) -> "SearchSpace":
        return cls(np.full(d, float(low)), np.full(d, float(high)))

    def clamp(self, x: np.ndarray) -> np.ndarray:
        """Per-coordinate repair of out-of-domain points."""
        return np.clip(x, self.lower, self.upper)

    def contains(self, x: np.ndarray) -> bool:
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))


@dataclass(frozen=True)
class BenchmarkFn:
    """Objective with its domain and known optimum."""

    id: str
    space: SearchSpace
    x_opt: np.ndarray
    f_opt: float
    evaluator: Callable[[np.ndarray], np.ndarray] = field(repr=False)

    @property
    def d(self) -> int:
        return self.space.d

    def evaluate(self, x) -> float:
        x = np.asarray(x, dtype=float)
        if x.ndim != 1 or x.shape[0] != self.d:
            raise ValueError(f"{self.id} expects a length-{self.d} vector, got shape {x.shape}")
        return float(self.evaluator(x[None, :])[0])

    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        if xs.ndim != 2 or xs.shape[1] != self.d:
            raise ValueError(f"{self.id} expects an (n, {self.d}) matrix, got shape {xs.shape}")
        return self.evaluator(xs)


def _rosenbrock(x):
    return np.sum(100.0 * (x[:, 1:] - x[:, :-1] ** 2) ** 2 + (x[:, :-1] - 1.0) ** 2, axis=1)

def _ackley(x):
    d = x.shape[1]
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x**2, axis=1) / d))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x), axis=1) / d)
        + 20.0
        + math.e
    )

def _sphere(x):
    return np.sum(x**2, axis=1)

def _rastrigin(x):
    return np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0, axis=1)

def _griewank(x):
    i = np.arange(1, x.shape[1] + 1, dtype=float)
    return np.sum(x**2, axis=1) / 4000.0 - np.prod(np.cos(x / np.sqrt(i)), axis=1) + 1.0

def _zakharov(x):
    i = np.arange(1, x.shape[1] + 1, dtype=float)
    s = 0.5 * np.sum(i * x, axis=1)
    return np.sum(x**2, axis=1) + s**2 + s**4

def _alpine(x):
    return np.sum(np.abs(x * np.sin(x) + 0.1 * x), axis=1)

def _easom(x):
    # D-dimensional product form, as tabulated (not the classic 2-D Easom).
    return -np.prod(np.cos(x), axis=1) * np.exp(-np.sum((x - np.pi) ** 2, axis=1))

def _schwefel(x):
    return SCHWEFEL_CONSTANT * x.shape[1] - np.sum(x * np.sin(np.sqrt(np.abs(x))), axis=1)

def _bukin_n6(x):
    return 100.0 * np.sqrt(np.abs(x[:, 1] - 0.01 * x[:, 0] ** 2)) + 0.01 * np.abs(x[:, 0] + 10.0)

def _michalewicz(x):
    i = np.arange(1, x.shape[1] + 1, dtype=float)
    return -np.sum(np.sin(x) * np.sin(i * x**2 / np.pi) ** (2 * MICHALEWICZ_M), axis=1)


# name -> (evaluator, (low, high) or per-dim bounds, x_opt builder, f_opt, fixed_d)
_CATALOG = {
    "Rosenbrock": (_rosenbrock, (-5.0, 5.0), lambda d: np.ones(d), 0.0, None),
    "Ackley": (_ackley, (-10.0, 10.0), lambda d: np.zeros(d), 0.0, None),
    "Sphere": (_sphere, (-5.0, 5.0), lambda d: np.zeros(d), 0.0, None),
    "Rastrigin": (_rastrigin, (-5.12, 5.12), lambda d: np.zeros(d), 0.0, None),
    "Griewank": (_griewank, (-600.0, 600.0), lambda d: np.zeros(d), 0.0, None),
    "Zakharov": (_zakharov, (-100.0, 100.0), lambda d: np.zeros(d), 0.0, None),
    "Alpine": (_alpine, (-10.0, 10.0), lambda d: np.zeros(d), 0.0, None),
    "Easom": (_easom, (-100.0, 100.0), lambda d: np.full(d, np.pi), -1.0, None),
    "Schwefel": (_schwefel, (-500.0, 500.0), lambda d: np.full(d, SCHWEFEL_X_OPT), 0.0, None),
    "BukinN6": (_bukin_n6, ((-15.0, -5.0), (-6.0, 3.0)), lambda d: np.array([-10.0, 1.0]), 0.0, 2),
    "Michalewicz": (_michalewicz, (0.0, math.pi), lambda d: np.array([2.20319, 1.57049]), -1.801, 2),
}

DEFAULT_DIMENSION = 30


def function_names() -> list[str]:
    return list(_CATALOG.keys())


def _resolve_dimension(fn_id: str, d: Optional[int]) -> int:
    _, _, _, _, fixed_d = _CATALOG[fn_id]
    if fixed_d is not None:
        if d is not None and d != fixed_d:
            raise ValueError(f"{fn_id} is only defined for d={fixed_d}")
        return fixed_d
    return DEFAULT_DIMENSION if d is None else int(d)


def make_function(fn_id: str, d: Optional[int] = None) -> BenchmarkFn:
    """Build a catalogued function at dimension ``d`` (default 30; demos are 2-D)."""
    if fn_id not in _CATALOG:
        raise KeyError(f"unknown benchmark function: {fn_id!r}")
    evaluator, bounds, x_opt_fn, f_opt, _ = _CATALOG[fn_id]
    d = _resolve_dimension(fn_id, d)
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if isinstance(bounds[0], tuple):
        lower = np.array([b[0] for b in bounds])
        upper = np.array([b[1] for b in bounds])
        space = SearchSpace(lower, upper)
    else:
        space = SearchSpace.cube(bounds[0], bounds[1], d)
    return BenchmarkFn(fn_id, space, x_opt_fn(d), f_opt, evaluator)


def optimum(fn_id: str, d: Optional[int] = None) -> tuple[np.ndarray, float]:
    """Known optimum (location, value) of a catalogued function."""
    fn = make_function(fn_id, d)
    return fn.x_opt, fn.f_opt


def random_rotation(d: int, rotation_seed: int) -> np.ndarray:
    """Seeded random orthogonal matrix (QR of a Gaussian matrix, sign-fixed)."""
    stream = derive_stream(rotation_seed, ["rotation", d])
    g = stream.normal(size=(d, d))
    q, r = np.linalg.qr(g)
    q = q * np.sign(np.diag(r))
    return q


def make_transformed(
    fn_id: str,
    shift: np.ndarray,
    rotation_seed: Optional[int] = None,
    d: Optional[int] = None,
) -> BenchmarkFn:
    """Shifted/rotated wrapper: evaluator(x) = base(R @ (x - shift)).

    Stands in for suite functions whose official shift/rotation data files are
    out of scope.  With no rotation the optimum moves to shift + x_opt; with a
    seeded rotation it moves to shift + R^T x_opt.  The relocated optimum must
    stay inside the base domain.
    """
    base = make_function(fn_id, d)
    shift = np.asarray(shift, dtype=float)
    if shift.shape != (base.d,):
        raise ValueError(f"shift must have shape ({base.d},), got {shift.shape}")
    if rotation_seed is None:
        rot = None
        x_opt = shift + base.x_opt
    else:
        rot = random_rotation(base.d, rotation_seed)
        x_opt = shift + rot.T @ base.x_opt
    if not base.space.contains(x_opt):
        raise ValueError(f"transformed optimum {x_opt} falls outside the {fn_id} domain")

    base_eval = base.evaluator
    if rot is None:
        def evaluator(xs, _shift=shift):
            return base_eval(xs - _shift)
    else:
        def evaluator(xs, _shift=shift, _rot=rot):
            return base_eval((xs - _shift) @ _rot.T)

    return BenchmarkFn(f"{fn_id}[transformed]", base.space, x_opt, base.f_opt, evaluator)
