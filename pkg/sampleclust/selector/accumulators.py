"""Streaming accumulators for trimmed objectives.

Both structures merge associatively, so a pass split into blocks (in any order)
ends in the same state as a single scan.
"""

from __future__ import annotations

import math

import numpy as np

_MAX_EXPANSION_ROUNDS = 64


class ExactSum:
    """Exact running sum of floats, kept as a short non-overlapping expansion.

    ``total()`` and ``total_minus()`` return correctly rounded results, so they
    agree bitwise with ``math.fsum`` over the same multiset of values.
    """

    def __init__(self) -> None:
        self._parts: list[float] = []

    @property
    def parts(self) -> list[float]:
        """Expansion terms; their exact sum is the running total."""
        return list(self._parts)

    def add(self, values: np.ndarray | list[float]) -> None:
        """Add a block of values."""
        terms = self._parts + np.asarray(values, dtype=np.float64).ravel().tolist()
        self._parts = self._compress(terms)

    def merge(self, other: "ExactSum") -> None:
        """Add another accumulator's total."""
        self._parts = self._compress(self._parts + other._parts)

    @staticmethod
    def _compress(terms: list[float]) -> list[float]:
        # peel off correctly rounded partial sums until the residual is exactly zero
        expansion: list[float] = []
        for _ in range(_MAX_EXPANSION_ROUNDS):
            head = math.fsum(terms + [-e for e in expansion])
            if head == 0.0:
                return expansion
            expansion.append(head)
        raise ArithmeticError("float expansion did not settle")

    def total(self) -> float:
        """Correctly rounded total."""
        return math.fsum(self._parts)

    def total_minus(self, values: np.ndarray | list[float]) -> float:
        """Correctly rounded ``total - sum(values)``."""
        removed = np.asarray(values, dtype=np.float64).ravel().tolist()
        return math.fsum(self._parts + [-v for v in removed])


class TopCosts:
    """The ``capacity`` largest (cost, point index) pairs seen so far.

    Pairs are ordered by cost, then index, matching the trimming order of
    :func:`sampleclust.core.objective.trim_order`.
    """

    def __init__(self, capacity: int) -> None:
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        self.capacity = int(capacity)
        self.costs = np.empty(0, dtype=np.float64)
        self.indices = np.empty(0, dtype=np.int64)

    def push(self, costs: np.ndarray, indices: np.ndarray) -> None:
        """Offer a block of pairs."""
        costs = np.concatenate([self.costs, np.asarray(costs, dtype=np.float64)])
        indices = np.concatenate([self.indices, np.asarray(indices, dtype=np.int64)])
        order = np.lexsort((indices, costs))[-self.capacity:]
        self.costs = costs[order]
        self.indices = indices[order]

    def merge(self, other: "TopCosts") -> None:
        """Keep the largest pairs of the union."""
        self.push(other.costs, other.indices)

    def __len__(self) -> int:
        return int(self.costs.shape[0])

    def largest(self, count: int) -> tuple[np.ndarray, np.ndarray]:
        """The ``count`` largest pairs in ascending order."""
        if count <= 0:
            return self.costs[:0], self.indices[:0]
        return self.costs[-count:], self.indices[-count:]

    def smallest_kept(self) -> float:
        """Smallest stored cost (the (capacity)-th largest overall)."""
        return float(self.costs[0])
