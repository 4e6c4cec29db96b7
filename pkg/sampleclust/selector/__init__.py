"""Best-of-m selection with a single pass over the full data."""

from sampleclust.selector.accumulators import ExactSum, TopCosts
from sampleclust.selector.boosting import BoostReport, boosted_run
from sampleclust.selector.onepass import CandidateSet, Selection, one_pass_select

__all__ = [
    "BoostReport",
    "CandidateSet",
    "ExactSum",
    "Selection",
    "TopCosts",
    "boosted_run",
    "one_pass_select",
]
