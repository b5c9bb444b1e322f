"""Run summaries, tie-aware rank statistics, and the correlation test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .special import chi2_sf, student_t_sf_two_sided


@dataclass(frozen=True)
class SummaryStats:
    """Best / Mean / Var / Dist indicators over repeated runs."""

    best: float
    mean: float
    var: float
    dist: float
    tn: int


def initial_mean_distance(positions: np.ndarray, x_opt: np.ndarray) -> float:
    """Mean L1 distance of a population from the known optimum."""
    positions = np.asarray(positions, dtype=float)
    x_opt = np.asarray(x_opt, dtype=float)
    if positions.ndim != 2 or positions.shape[1] != x_opt.shape[0]:
        raise ValueError("positions must be (np, d) with d matching x_opt")
    return float(np.abs(positions - x_opt).sum() / positions.shape[0])


def summarize_runs(results: Sequence, x_opt: np.ndarray) -> SummaryStats:
    """Indicators over a batch of runs of one (algorithm, init, function) cell.

    ``dist`` sums the L1 distance of every found solution from the optimum and
    divides by the number of runs; ``var`` is the unbiased sample variance of
    the best values.
    """
    if len(results) < 2:
        raise ValueError("need at least 2 runs to summarize")
    x_opt = np.asarray(x_opt, dtype=float)
    values = np.array([r.best_value for r in results], dtype=float)
    positions = np.array([r.best_position for r in results], dtype=float)
    if positions.shape[1] != x_opt.shape[0]:
        raise ValueError("run positions do not match x_opt dimension")
    dist = float(np.abs(positions - x_opt).sum() / len(results))
    return SummaryStats(
        best=float(values.min()),
        mean=float(values.mean()),
        var=float(values.var(ddof=1)),
        dist=dist,
        tn=len(results),
    )


def average_ranks(values, direction: str = "minimize") -> np.ndarray:
    """Fractional ranks with ties averaged; the best value gets rank 1."""
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.shape[0] < 2:
        raise ValueError("values must be a vector of length >= 2")
    if np.isnan(v).any():
        raise ValueError("values contain NaN")
    if direction == "maximize":
        v = -v
    elif direction != "minimize":
        raise ValueError("direction must be 'minimize' or 'maximize'")
    order = np.argsort(v, kind="stable")
    ranks = np.empty(v.shape[0])
    i = 0
    while i < v.shape[0]:
        j = i
        while j + 1 < v.shape[0] and v[order[j + 1]] == v[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0  # mean of spanned ranks
        i = j + 1
    return ranks


def dense_rank(mean_ranks) -> np.ndarray:
    """Map values to consecutive integers 1, 2, ...; equal values share one."""
    v = np.asarray(mean_ranks, dtype=float)
    if v.ndim != 1 or v.shape[0] < 1:
        raise ValueError("mean_ranks must be a non-empty vector")
    _, inverse = np.unique(v, return_inverse=True)
    return inverse + 1


@dataclass(frozen=True)
class FriedmanResult:
    statistic: float
    p_value: float
    blocks: int
    treatments: int


def _tie_term(row: np.ndarray) -> float:
    _, counts = np.unique(row, return_counts=True)
    return float(np.sum(counts.astype(float) ** 3 - counts))


def friedman_test(ranks_or_values, already_ranked: bool = False) -> FriedmanResult:
    """Tie-corrected Friedman chi-square over a blocks x treatments matrix.

    Each row is ranked (unless pre-ranked); the statistic is the classic
    12/(Bk(k+1)) * sum R_j^2 - 3B(k+1) divided by the tie-correction factor
    1 - sum(t^3 - t) / (B k (k^2 - 1)).  Fully tied data yields (0, 1).
    """
    m = np.asarray(ranks_or_values, dtype=float)
    if m.ndim != 2:
        raise ValueError("expected a 2-D blocks x treatments matrix")
    b, k = m.shape
    if b < 2 or k < 2:
        raise ValueError("need at least 2 blocks and 2 treatments")
    if np.isnan(m).any():
        raise ValueError("matrix contains NaN")
    if already_ranked:
        ranks = m
    else:
        ranks = np.vstack([average_ranks(row) for row in m])
    tie_sum = sum(_tie_term(row) for row in ranks)
    correction = 1.0 - tie_sum / (b * k * (k**2 - 1.0))
    col_sums = ranks.sum(axis=0)
    chi2 = 12.0 / (b * k * (k + 1.0)) * float(np.sum(col_sums**2)) - 3.0 * b * (k + 1.0)
    if correction <= 1e-12:  # every block fully tied: no evidence at all
        return FriedmanResult(0.0, 1.0, b, k)
    statistic = max(chi2 / correction, 0.0)
    return FriedmanResult(statistic, chi2_sf(statistic, k - 1), b, k)


@dataclass(frozen=True)
class CorrelationResult:
    r: float
    p_value: float
    n: int
    outliers_removed: int


def _iqr_mask(v: np.ndarray) -> np.ndarray:
    q1, q3 = np.percentile(v, [25.0, 75.0])
    iqr = q3 - q1
    return (v >= q1 - 3.0 * iqr) & (v <= q3 + 3.0 * iqr)


def pearson_test(x, y, outlier_filter: Optional[str] = None) -> CorrelationResult:
    """Pearson r with a two-sided t-test p-value.

    The optional ``iqr`` filter drops pairs whose x or y lies more than
    3 x IQR beyond the quartiles before the test.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or x.shape != y.shape:
        raise ValueError("x and y must be equal-length vectors")
    removed = 0
    if outlier_filter is not None:
        if outlier_filter != "iqr":
            raise ValueError("outlier_filter must be None or 'iqr'")
        keep = _iqr_mask(x) & _iqr_mask(y)
        removed = int(x.shape[0] - keep.sum())
        x = x[keep]
        y = y[keep]
    n = x.shape[0]
    if n < 3:
        raise ValueError("need at least 3 points after filtering")
    xc = x - x.mean()
    yc = y - y.mean()
    sx = float(np.sqrt(np.sum(xc**2)))
    sy = float(np.sqrt(np.sum(yc**2)))
    if sx == 0.0 or sy == 0.0:
        raise ValueError("correlation undefined: zero variance in x or y")
    r = float(np.dot(xc, yc) / (sx * sy))
    r = max(-1.0, min(1.0, r))
    if abs(r) == 1.0:
        p = 0.0
    else:
        t = r * math.sqrt((n - 2) / (1.0 - r * r))
        p = student_t_sf_two_sided(t, n - 2)
    return CorrelationResult(r, p, n, removed)
