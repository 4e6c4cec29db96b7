"""Uniform-sampling framework with its sample-size and budget formulas."""

from sampleclust.sampler.base import Solver, SolverOutput
from sampleclust.sampler.bounds import (
    TheoremBound,
    boosted_success,
    runs_for_success,
    success_probability,
    theorem_bounds,
)
from sampleclust.sampler.framework import FrameworkResult, run_framework, uniform_sample
from sampleclust.sampler.params import (
    FrameworkConfig,
    SampleBudget,
    SignificanceParams,
    Variant,
    budget_extra,
    direct_budget,
    parse_sample_size,
    sample_size_alg1,
    sample_size_concentration,
    sample_size_means,
)

__all__ = [
    "FrameworkConfig",
    "FrameworkResult",
    "SampleBudget",
    "SignificanceParams",
    "Solver",
    "SolverOutput",
    "TheoremBound",
    "Variant",
    "boosted_success",
    "budget_extra",
    "direct_budget",
    "parse_sample_size",
    "run_framework",
    "runs_for_success",
    "sample_size_alg1",
    "sample_size_concentration",
    "sample_size_means",
    "success_probability",
    "theorem_bounds",
    "uniform_sample",
]
