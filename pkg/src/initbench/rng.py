"""Deterministic, lineage-derived random streams.

Every stochastic component in the package draws from an :class:`RngStream`
identified by ``(master_seed, lineage)``.  Derivation hashes the seed and the
lineage labels, so sibling streams can be created in any order (or in
different processes) and still produce bit-identical sequences.
"""

from __future__ import annotations

import hashlib
import struct
from typing import Sequence, Union

import numpy as np

Label = Union[str, int]

_MASK64 = (1 << 64) - 1


def _lineage_digest(master_seed: int, lineage: Sequence[Label]) -> int:
    """256-bit digest of (seed, lineage), stable across platforms."""
    h = hashlib.sha256()
    h.update(struct.pack("<Q", master_seed & _MASK64))
    for label in lineage:
        # Type-tag labels so the int 1 and the string "1" derive differently.
        if isinstance(label, bool) or not isinstance(label, (int, str)):
            raise TypeError(f"lineage labels must be str or int, got {label!r}")
        if isinstance(label, int):
            raw = str(label).encode("utf-8")
            h.update(b"i")
        else:
            raw = label.encode("utf-8")
            h.update(b"s")
        h.update(struct.pack("<I", len(raw)))
        h.update(raw)
    return int.from_bytes(h.digest(), "little")


class RngStream:
    """A PCG64 stream plus the (seed, lineage) identity it was derived from.

    A stream is consumed by exactly one run at a time; create further
    independent streams with :meth:`spawn` or :func:`derive_stream`.
    """

    __slots__ = ("master_seed", "lineage", "gen")

    def __init__(self, master_seed: int, lineage: tuple, gen: np.random.Generator):
        self.master_seed = master_seed
        self.lineage = lineage
        self.gen = gen

    def __repr__(self) -> str:
        return f"RngStream(seed={self.master_seed}, lineage={list(self.lineage)!r})"

    def spawn(self, *labels: Label) -> "RngStream":
        """Derive a child stream; independent of this stream's draw position."""
        return derive_stream(self.master_seed, list(self.lineage) + list(labels))

    # Draw primitives used throughout the package.  All delegate to the
    # underlying numpy Generator, which fills arrays in row-major order.

    def uniform(self, low: float = 0.0, high: float = 1.0, size=None):
        return low + (high - low) * self.gen.random(size)

    def normal(self, loc: float = 0.0, scale: float = 1.0, size=None):
        return self.gen.normal(loc, scale, size)

    def integers(self, low: int, high: int, size=None):
        return self.gen.integers(low, high, size=size)

    def permutation(self, n: int) -> np.ndarray:
        return self.gen.permutation(n)


def derive_stream(master_seed: int, lineage: Sequence[Label]) -> RngStream:
    """Create the stream identified by ``(master_seed, lineage)``.

    Pure function of its arguments: deriving siblings in any order, on any
    thread, yields the same streams.
    """
    if len(lineage) == 0:
        raise ValueError("lineage must be non-empty")
    digest = _lineage_digest(master_seed, lineage)
    gen = np.random.Generator(np.random.PCG64(digest))
    return RngStream(master_seed, tuple(lineage), gen)


def next_unit(stream: RngStream) -> float:
    """Advance the stream and return one uniform draw in [0, 1)."""
    return float(stream.gen.random())
