"""The 22 population-initialization methods and their unit-cube samplers.

Samplers draw on the unit scale; unbounded-support families (Normal,
Lognormal, Exponential, Rayleigh, Weibull) are clipped to [0, 1] before the
affine map onto the search bounds, preserving each distribution's mass
concentration while guaranteeing feasibility.  Per-batch normalization was
rejected: it would make each sample depend on batch extremes and break
per-entry reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gamma, pi, sqrt

import numpy as np

from .benchmarks import SearchSpace
from .rng import RngStream

UNIFORM_MOMENTS = (0.5, 1.0 / 12.0)


@dataclass(frozen=True)
class InitMethod:
    """One catalogued initialization strategy."""

    name: str      # canonical spelling used in configs and CSV columns
    family: str    # Beta | Uniform | Normal | Lognormal | Exponential | Rayleigh | Weibull | PseudoRandom | LHS
    params: tuple

    def __post_init__(self):
        p = self.params
        fam = self.family
        if fam == "Beta":
            a, b = p
            if a <= 0 or b <= 0:
                raise ValueError(f"{self.name}: Beta shape parameters must be positive")
        elif fam == "Uniform":
            a, b = p
            if not a < b:
                raise ValueError(f"{self.name}: Uniform needs a < b")
        elif fam in ("Normal", "Lognormal"):
            _, sigma = p
            if sigma <= 0:
                raise ValueError(f"{self.name}: sigma must be positive")
        elif fam == "Exponential":
            (lam,) = p
            if lam <= 0:
                raise ValueError(f"{self.name}: rate must be positive")
        elif fam == "Rayleigh":
            (sigma,) = p
            if sigma <= 0:
                raise ValueError(f"{self.name}: scale must be positive")
        elif fam == "Weibull":
            lam, k = p
            if lam <= 0 or k <= 0:
                raise ValueError(f"{self.name}: scale and shape must be positive")
        elif fam in ("PseudoRandom", "LHS"):
            if p:
                raise ValueError(f"{self.name}: takes no parameters")
        else:
            raise ValueError(f"unknown family: {fam!r}")


def _catalog() -> dict[str, InitMethod]:
    entries = [
        InitMethod("Be(3,2)", "Beta", (3.0, 2.0)),
        InitMethod("Be(2.5,2.5)", "Beta", (2.5, 2.5)),
        InitMethod("Be(2,3)", "Beta", (2.0, 3.0)),
        InitMethod("U(0,1)", "Uniform", (0.0, 1.0)),
        InitMethod("N(0,1)", "Normal", (0.0, 1.0)),
        InitMethod("N(0.5,1)", "Normal", (0.5, 1.0)),
        InitMethod("N(0.5,0.5)", "Normal", (0.5, 0.5)),
        InitMethod("logn(0,1)", "Lognormal", (0.0, 1.0)),
        InitMethod("logn(0.69,0.25)", "Lognormal", (0.69, 0.25)),
        InitMethod("logn(0,0.5)", "Lognormal", (0.0, 0.5)),
        InitMethod("logn(0,2/3)", "Lognormal", (0.0, 2.0 / 3.0)),
        InitMethod("E(0.5)", "Exponential", (0.5,)),
        InitMethod("E(0.1)", "Exponential", (0.1,)),
        InitMethod("E(0.8)", "Exponential", (0.8,)),
        InitMethod("Rayl(0.4)", "Rayleigh", (0.4,)),
        InitMethod("Rayl(0.8)", "Rayleigh", (0.8,)),
        InitMethod("Rayl(0.1)", "Rayleigh", (0.1,)),
        InitMethod("Weib(1,1.5)", "Weibull", (1.0, 1.5)),
        InitMethod("Weib(1.5,1)", "Weibull", (1.5, 1.0)),
        InitMethod("Weib(1,1)", "Weibull", (1.0, 1.0)),
        InitMethod("random", "PseudoRandom", ()),
        InitMethod("LHS", "LHS", ()),
    ]
    return {m.name: m for m in entries}


CATALOG = _catalog()


def method_names() -> list[str]:
    return list(CATALOG.keys())


def get_method(name: str) -> InitMethod:
    if name not in CATALOG:
        raise KeyError(f"unknown initialization method: {name!r}")
    return CATALOG[name]


@dataclass(frozen=True)
class UnitMatrix:
    """(np, d) samples on [0, 1], the stage before bound scaling."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2:
            raise ValueError("unit matrix must be 2-D")
        if np.any(v < 0.0) or np.any(v > 1.0):
            raise ValueError("unit matrix entries must lie in [0, 1]")
        object.__setattr__(self, "values", v)

    @property
    def np_(self) -> int:
        return self.values.shape[0]

    @property
    def d(self) -> int:
        return self.values.shape[1]


def sample_raw(method: InitMethod, size, stream: RngStream) -> np.ndarray:
    """Pre-clip draws from the method's distribution (row-major fill)."""
    g = stream.gen
    fam = method.family
    p = method.params
    if fam == "Beta":
        return g.beta(p[0], p[1], size)
    if fam == "Uniform":
        return p[0] + (p[1] - p[0]) * g.random(size)
    if fam == "Normal":
        return g.normal(p[0], p[1], size)
    if fam == "Lognormal":
        return g.lognormal(p[0], p[1], size)
    if fam == "Exponential":
        return g.exponential(1.0 / p[0], size)
    if fam == "Rayleigh":
        return g.rayleigh(p[0], size)
    if fam == "Weibull":
        return p[0] * g.weibull(p[1], size)
    if fam == "PseudoRandom":
        return g.random(size)
    raise ValueError(f"{method.name} has no i.i.d. sampler")


def sample_unit_matrix(method: InitMethod, np_: int, d: int, stream: RngStream) -> UnitMatrix:
    """np x d i.i.d. draws from the method, clipped to the unit interval."""
    if method.family == "LHS":
        raise ValueError("LHS is a designed sample; use lhs_unit_matrix")
    if np_ < 1 or d < 1:
        raise ValueError("np and d must be >= 1")
    raw = sample_raw(method, (np_, d), stream)
    return UnitMatrix(np.clip(raw, 0.0, 1.0))


def lhs_unit_matrix(np_: int, d: int, stream: RngStream) -> UnitMatrix:
    """Latin hypercube: per dimension, one point in each of np equal strata.

    Stratum-to-row assignment is an independent uniform permutation per
    dimension; the position inside a stratum is uniform.
    """
    if np_ < 1 or d < 1:
        raise ValueError("np and d must be >= 1")
    values = np.empty((np_, d))
    for j in range(d):
        strata = stream.permutation(np_)
        offsets = stream.gen.random(np_)
        values[:, j] = (strata + offsets) / np_
    return UnitMatrix(values)


def sample_population(method: InitMethod, np_: int, d: int, stream: RngStream) -> UnitMatrix:
    """Dispatch to the LHS design or the i.i.d. sampler."""
    if method.family == "LHS":
        return lhs_unit_matrix(np_, d, stream)
    return sample_unit_matrix(method, np_, d, stream)


def scale_to_bounds(unit: UnitMatrix, space: SearchSpace) -> np.ndarray:
    """Affine map of unit samples onto the search box."""
    if unit.d != space.d:
        raise ValueError(f"unit matrix is {unit.d}-D but the space is {space.d}-D")
    return space.lower + unit.values * (space.upper - space.lower)


def initial_population(method: InitMethod, np_: int, space: SearchSpace, stream: RngStream) -> np.ndarray:
    """Sampled, scaled starting positions for one run."""
    return scale_to_bounds(sample_population(method, np_, space.d, stream), space)


def analytic_moments(method: InitMethod) -> tuple[float, float]:
    """Closed-form (mean, variance) of the pre-clip distribution.

    PseudoRandom and LHS report the U(0,1) moments.
    """
    fam = method.family
    p = method.params
    if fam == "Beta":
        a, b = p
        return a / (a + b), a * b / ((a + b) ** 2 * (a + b + 1.0))
    if fam == "Uniform":
        a, b = p
        return (a + b) / 2.0, (b - a) ** 2 / 12.0
    if fam == "Normal":
        mu, sigma = p
        return mu, sigma**2
    if fam == "Lognormal":
        mu, sigma = p
        s2 = sigma**2
        return np.exp(mu + s2 / 2.0), (np.exp(s2) - 1.0) * np.exp(2.0 * mu + s2)
    if fam == "Exponential":
        (lam,) = p
        return 1.0 / lam, 1.0 / lam**2
    if fam == "Rayleigh":
        (sigma,) = p
        return sigma * sqrt(pi / 2.0), (4.0 - pi) / 2.0 * sigma**2
    if fam == "Weibull":
        lam, k = p
        mean = lam * gamma(1.0 + 1.0 / k)
        return mean, lam**2 * gamma(1.0 + 2.0 / k) - mean**2
    return UNIFORM_MOMENTS
