"""Approximation factors and success probabilities of the sampling algorithms."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from sampleclust.core.types import ObjectiveKind
from sampleclust.errors import ConfigurationError
from sampleclust.sampler.params import SignificanceParams, Variant


@dataclass(frozen=True)
class TheoremBound:
    """Guarantee of one algorithm run.

    The objective of the returned centers is at most
    ``factor * OPT + additive * xi * L^p`` (``additive`` is 0 for k-center, p is
    ``diameter_power``: 2 for k-means, 1 for k-median) with probability at least
    ``probability``.
    """

    factor: float
    additive: float
    probability: float
    diameter_power: int = 2

    def holds(self, objective: float, reference: float, diameter: float = 0.0, xi: float = 0.0) -> bool:
        """Check a measured objective against the bound for a reference optimum."""
        return objective <= self.factor * reference + self.additive * xi * diameter ** self.diameter_power + 1e-9

    def to_dict(self) -> dict[str, float]:
        return asdict(self)


def success_probability(eta: float, kind: ObjectiveKind | str) -> float:
    """(1 - eta)^2 for k-center, (1 - eta)^3 for k-means/k-median."""
    kind = ObjectiveKind.parse(kind)
    return (1.0 - eta) ** (2 if kind is ObjectiveKind.CENTER else 3)


def boosted_success(q: float, m: int) -> float:
    """Probability that at least one of m independent runs succeeds."""
    if m < 1:
        raise ConfigurationError(f"m must be >= 1, got {m}")
    return 1.0 - (1.0 - q) ** m


def runs_for_success(q: float, target: float) -> int:
    """Smallest m with boosted_success(q, m) >= target."""
    if not 0.0 < q <= 1.0 or not 0.0 < target < 1.0:
        raise ConfigurationError(f"Need q in (0, 1] and target in (0, 1), got q={q}, target={target}")
    if q == 1.0:
        return 1
    return max(1, math.ceil(math.log(1.0 - target) / math.log(1.0 - q) - 1e-9))


def theorem_bounds(
    variant: Variant | str,
    kind: ObjectiveKind | str,
    params: SignificanceParams,
    c: float = 1.0,
) -> TheoremBound:
    """Guarantee of a variant/kind pair for a sample solver with ratio c.

    Args:
        variant: I or II.
        kind: Objective kind.
        params: Significance parameters (eta, delta, epsilons).
        c: Approximation ratio of the solver run on the sample; the greedy-disk
            k-center solver has c = 3.

    Raises:
        ConfigurationError: Variant II k-means/k-median with t <= 1.
    """
    variant = Variant.parse(variant)
    kind = ObjectiveKind.parse(kind)
    probability = success_probability(params.eta, kind)

    if kind is ObjectiveKind.CENTER:
        factor = 4.0 if variant is Variant.I else c + 2.0
        return TheoremBound(factor=factor, additive=0.0, probability=probability)

    d = params.delta
    # k-median: alpha = 1 + beta with beta = (1 + c)(1 + delta)/(1 - delta), additive term xi * L
    base, lead, power = (4.0 + 4.0 * c, 2.0, 2) if kind is ObjectiveKind.MEANS else (1.0 + c, 1.0, 1)
    beta = base * (1.0 + d) / (1.0 - d)
    if variant is Variant.II:
        t = params.t
        if t <= 1.0:
            raise ConfigurationError(f"Variant II {kind.value} bound needs t > 1, got t={t:.4g}")
        beta *= t / (t - 1.0)
    return TheoremBound(factor=lead + beta, additive=beta, probability=probability, diameter_power=power)
