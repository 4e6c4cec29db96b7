"""Significance parameters, sample-size formulas and budget resolution.

All logarithms are natural and every formula output is rounded up.
"""

from __future__ import annotations

import math
import re
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any

from sampleclust.core.types import ObjectiveKind
from sampleclust.errors import ConfigurationError, InputError
from sampleclust.subroutines.base import IterConfig

# ceil() slack so products like 80.00000000000001 do not round up to 81
_CEIL_SLACK = 1e-9


def _ceil(value: float) -> int:
    return int(math.ceil(value - _CEIL_SLACK))


class Variant(str, Enum):
    """Budget-inflation variant: extra centers (I) or extra sample outliers (II)."""

    I = "I"     # noqa: E741
    II = "II"

    @classmethod
    def parse(cls, value: "Variant | str | int") -> "Variant":
        """Parse ``I``/``II`` (also ``1``/``2``)."""
        if isinstance(value, Variant):
            return value
        key = str(value).strip().upper()
        if key in ("I", "1"):
            return cls.I
        if key in ("II", "2"):
            return cls.II
        raise InputError(f"Unknown variant: {value!r}")


@dataclass
class SignificanceParams:
    """Parameters of an (epsilon1, epsilon2)-significant instance.

    Every optimal cluster holds at least ``epsilon1 / k * n`` points and
    ``z = epsilon2 / k * n``. ``eta`` is the failure probability, ``delta`` the
    concentration slack and ``xi`` the k-means additive-error parameter.
    """

    epsilon1: float
    epsilon2: float
    eta: float
    delta: float = 0.5
    xi: float = 0.1

    def __post_init__(self) -> None:
        for name in ("epsilon1", "eta", "delta", "xi"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ConfigurationError(f"{name} must lie in (0, 1), got {value}")
        if self.epsilon2 < 0.0:
            raise ConfigurationError(f"epsilon2 must be >= 0, got {self.epsilon2}")

    @classmethod
    def from_instance(
        cls,
        n: int,
        k: int,
        z: int,
        min_cluster_size: int,
        eta: float,
        delta: float = 0.5,
        xi: float = 0.1,
    ) -> "SignificanceParams":
        """Derive epsilon1, epsilon2 from realized instance sizes."""
        return cls(
            epsilon1=min(k * min_cluster_size / n, 1.0 - 1e-12),
            epsilon2=k * z / n,
            eta=eta,
            delta=delta,
            xi=xi,
        )

    @property
    def ratio(self) -> float:
        """Significance ratio epsilon1 / epsilon2."""
        return math.inf if self.epsilon2 == 0 else self.epsilon1 / self.epsilon2

    @property
    def t(self) -> float:
        """t = eta * (1 - delta) * epsilon1 / epsilon2."""
        return self.eta * (1.0 - self.delta) * self.ratio

    def satisfies_center_condition(self) -> bool:
        """epsilon1 / epsilon2 > 1 / (eta * (1 - delta)), required by variant II k-center."""
        return self.ratio > 1.0 / (self.eta * (1.0 - self.delta))

    def satisfies_means_condition(self) -> bool:
        """t > 1, required by variant II k-means/k-median."""
        return self.t > 1.0

    def to_dict(self) -> dict[str, float]:
        return asdict(self)


def sample_size_alg1(k: int, epsilon1: float, eta: float) -> int:
    """(k / epsilon1) * ln(k / eta); ``max(1, k)`` when the log is nonpositive."""
    arg = k / eta
    if arg <= 1.0:
        return max(1, k)
    return max(1, _ceil(k / epsilon1 * math.log(arg)))


def sample_size_concentration(k: int, epsilon1: float, delta: float, eta: float) -> int:
    """(3k / (delta^2 epsilon1)) * ln(2k / eta)."""
    arg = 2 * k / eta
    if arg <= 1.0:
        return max(1, k)
    return max(1, _ceil(3 * k / (delta ** 2 * epsilon1) * math.log(arg)))


def sample_size_means(k: int, epsilon1: float, delta: float, xi: float, eta: float) -> int:
    """max of the concentration term and (k / (2 xi^2 epsilon1 (1 - delta))) * ln(2k / eta)."""
    arg = 2 * k / eta
    if arg <= 1.0:
        return max(1, k)
    log_term = math.log(arg)
    first = 3 * k / (delta ** 2 * epsilon1) * log_term
    second = k / (2 * xi ** 2 * epsilon1 * (1 - delta)) * log_term
    return max(1, _ceil(max(first, second)))


def budget_extra(eta: float, epsilon2: float, k: int, sample_size: int) -> int:
    """k' (variant I) or z' (variant II): (1 / eta) * (epsilon2 / k) * |S|."""
    return max(0, _ceil(epsilon2 / (eta * k) * sample_size))


@dataclass
class SampleBudget:
    """Sample size |S| and the variant's extra budget (k' or z')."""

    sample_size: int
    extra: int = 0

    def __post_init__(self) -> None:
        if self.sample_size < 1:
            raise ConfigurationError(f"sample_size must be >= 1, got {self.sample_size}")
        if self.extra < 0:
            raise ConfigurationError(f"extra must be >= 0, got {self.extra}")

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


_PERCENT_RE = re.compile(r"^\s*([0-9]*\.?[0-9]+)\s*%\s*(n)?\s*$", re.IGNORECASE)


def parse_sample_size(value: int | float | str, n: int) -> int:
    """Resolve an absolute size, a fraction of n, or a ``"2%n"`` string."""
    if isinstance(value, str):
        match = _PERCENT_RE.match(value)
        if match:
            return max(1, _ceil(float(match.group(1)) / 100.0 * n))
        try:
            value = float(value) if "." in value else int(value)
        except ValueError as e:
            raise ConfigurationError(f"Invalid sample size: {value!r}") from e
    if isinstance(value, float) and not value.is_integer():
        if not 0.0 < value <= 1.0:
            raise ConfigurationError(f"Fractional sample size must lie in (0, 1], got {value}")
        return max(1, _ceil(value * n))
    size = int(value)
    if size < 1:
        raise ConfigurationError(f"sample_size must be >= 1, got {size}")
    return size


def direct_budget(
    n: int,
    k: int,
    z: int,
    variant: Variant | str,
    sample_size: int | float | str,
    extra: int | None = None,
    tau: float | None = None,
    outlier_ratio: float | None = None,
    default_tau: float = 2.0,
    default_outlier_ratio: float = 2.0,
) -> SampleBudget:
    """Build a budget from the two experiment knobs (|S|, k') or (|S|, z').

    Variant I: k' = extra, else round((tau - 1) * k).
    Variant II: z' = extra, else ceil(outlier_ratio * z~) with z~ = z * |S| / n,
    the expected number of outliers in the sample.
    """
    variant = Variant.parse(variant)
    size = parse_sample_size(sample_size, n)
    if extra is not None:
        return SampleBudget(size, int(extra))
    if variant is Variant.I:
        tau = default_tau if tau is None else tau
        if tau < 1.0:
            raise ConfigurationError(f"tau must be >= 1, got {tau}")
        return SampleBudget(size, int(round((tau - 1.0) * k)))
    ratio = default_outlier_ratio if outlier_ratio is None else outlier_ratio
    expected = z * size / n
    return SampleBudget(size, _ceil(ratio * expected))


@dataclass
class FrameworkConfig:
    """One configuration of the sampling framework.

    Attributes:
        variant: I (k + k' centers) or II (k centers, z' sample outliers).
        kind: Objective kind.
        k: Number of clusters.
        z: Number of outliers of the full instance.
        budget: Direct mode (|S|, extra), used verbatim.
        params: Theory mode; |S| and extra follow the sample-size formulas.
        solver: Sample solver name; defaults by variant and kind.
        seed: Seed used when no generator is passed.
        n_init: k-means++ seedings tried by the Lloyd-style solvers.
        local_trials: Greedy k-means++ candidates per step; ``None`` means 2 + ln k.
    """

    variant: Variant
    kind: ObjectiveKind
    k: int
    z: int = 0
    budget: SampleBudget | None = None
    params: SignificanceParams | None = None
    solver: str | None = None
    seed: int = 42
    iteration: IterConfig = field(default_factory=IterConfig)
    max_sample_size: int = 200_000
    kmeanspp_retries: int = 10
    n_init: int = 10
    local_trials: int | None = None

    def __post_init__(self) -> None:
        self.variant = Variant.parse(self.variant)
        self.kind = ObjectiveKind.parse(self.kind)
        if self.n_init < 1:
            raise ConfigurationError(f"n_init must be >= 1, got {self.n_init}")
        if self.k < 1:
            raise ConfigurationError(f"k must be >= 1, got {self.k}")
        if self.z < 0:
            raise ConfigurationError(f"z must be >= 0, got {self.z}")
        if (self.budget is None) == (self.params is None):
            raise ConfigurationError("Exactly one of budget (direct mode) or params (theory mode) is required")

    @property
    def mode(self) -> str:
        """``direct`` or ``theory``."""
        return "direct" if self.budget is not None else "theory"

    @property
    def algorithm(self) -> int:
        """Sample-size rule: 1, 2 for k-center I/II, 3, 4 for k-means/median I/II."""
        base = 1 if self.kind is ObjectiveKind.CENTER else 3
        return base + (0 if self.variant is Variant.I else 1)

    def resolve_budget(self) -> tuple[SampleBudget, list[str]]:
        """Return the budget and any theory-mode precondition warnings."""
        if self.budget is not None:
            return self.budget, []

        p = self.params
        assert p is not None
        warnings: list[str] = []
        if self.algorithm == 1:
            size = sample_size_alg1(self.k, p.epsilon1, p.eta)
        elif self.algorithm == 2:
            size = sample_size_concentration(self.k, p.epsilon1, p.delta, p.eta)
            if not p.satisfies_center_condition():
                warnings.append(
                    f"epsilon1/epsilon2={p.ratio:.4g} <= 1/(eta(1-delta))="
                    f"{1.0 / (p.eta * (1.0 - p.delta)):.4g}; the variant II k-center guarantee does not apply"
                )
        else:
            size = sample_size_means(self.k, p.epsilon1, p.delta, p.xi, p.eta)
            if self.algorithm == 4 and not p.satisfies_means_condition():
                warnings.append(f"t={p.t:.4g} <= 1; the variant II k-means guarantee does not apply")
        return SampleBudget(size, budget_extra(p.eta, p.epsilon2, self.k, size)), warnings

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-friendly dictionary."""
        return {
            "variant": self.variant.value,
            "kind": self.kind.value,
            "k": self.k,
            "z": self.z,
            "mode": self.mode,
            "budget": self.budget.to_dict() if self.budget else None,
            "params": self.params.to_dict() if self.params else None,
            "solver": self.solver,
            "seed": self.seed,
        }
