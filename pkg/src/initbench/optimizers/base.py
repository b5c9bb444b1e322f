"""Shared population state and index-sampling utilities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..rng import RngStream


@dataclass
class Population:
    """Current candidate set of one run.

    Invariants: fitness[i] is the objective at positions[i]; fe_count is the
    cumulative number of objective rows evaluated so far.
    """

    positions: np.ndarray
    fitness: np.ndarray
    fe_count: int = 0

    @property
    def size(self) -> int:
        return self.positions.shape[0]

    @property
    def best_index(self) -> int:
        return int(np.argmin(self.fitness))

    @property
    def best_value(self) -> float:
        return float(self.fitness[self.best_index])

    @property
    def best_position(self) -> np.ndarray:
        return self.positions[self.best_index].copy()


def distinct_indices(stream: RngStream, n: int, k: int, exclude_self: bool = True) -> np.ndarray:
    """(n, k) random indices in [0, n): pairwise distinct per row, row i never
    containing i.  Rows with collisions are redrawn until clean."""
    needed = k + 1 if exclude_self else k
    if n < needed:
        raise ValueError(f"need a population of at least {needed} to draw {k} distinct partners")
    idx = stream.integers(0, n, (n, k))
    if k == 1 and not exclude_self:
        return idx
    rows = np.arange(n)
    while True:
        bad = np.zeros(n, dtype=bool)
        if exclude_self:
            bad |= (idx == rows[:, None]).any(axis=1)
        for a in range(k):
            for b in range(a + 1, k):
                bad |= idx[:, a] == idx[:, b]
        n_bad = int(bad.sum())
        if n_bad == 0:
            return idx
        idx[bad] = stream.integers(0, n, (n_bad, k))
