"""Deterministic randomness policy for sampleclust.

Every randomized operation takes an explicit ``numpy.random.Generator``. Seeds of
independent runs are derived by hashing labels, never by advancing a shared stream,
so results do not depend on execution order or worker count.
"""

from __future__ import annotations

import hashlib
from typing import Any

import numpy as np


class DeterministicRNG:
    """Deterministic random number generator with label-derived child streams."""

    def __init__(self, seed: int = 42) -> None:
        """Initialize with base seed."""
        self._base_seed = int(seed)

    @property
    def base_seed(self) -> int:
        """Get base seed."""
        return self._base_seed

    def derive_seed(self, *args: Any) -> int:
        """Derive a deterministic seed from arguments."""
        return derive_seed(self._base_seed, *args)

    def child(self, *args: Any) -> np.random.Generator:
        """Create an independent generator keyed by ``args``."""
        return np.random.default_rng(self.derive_seed(*args))


def derive_seed(base_seed: int, *args: Any) -> int:
    """Derive a 32-bit seed from a base seed and labels."""
    seed_str = f"{base_seed}:" + ":".join(str(arg) for arg in args)
    hash_bytes = hashlib.sha256(seed_str.encode()).digest()
    return int.from_bytes(hash_bytes[:4], "big")


def create_rng(seed: int | np.random.Generator | None, *labels: Any) -> np.random.Generator:
    """Coerce a seed or generator into a generator, optionally keyed by labels."""
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        seed = 42
    if labels:
        return DeterministicRNG(seed).child(*labels)
    return np.random.default_rng(seed)
