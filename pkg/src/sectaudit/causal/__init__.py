"""Causal effect estimation of rewrite rules on membership-inference
scores: relative scoring, backdoor-adjusted ATE, Pearson correlation,
and refutation tests."""

from .core import (
    DEFAULT_EPSILON,
    ESTIMATOR_TAG,
    R1,
    R2,
    R3,
    R4,
    AteReport,
    CausalRow,
    Refutation,
    analyze,
    build_frame,
    estimate_ate,
    estimate_ate_detailed,
    pearson,
    refute,
    relative_scores,
)

__all__ = [
    "AteReport", "CausalRow", "DEFAULT_EPSILON", "ESTIMATOR_TAG",
    "R1", "R2", "R3", "R4", "Refutation", "analyze", "build_frame",
    "estimate_ate", "estimate_ate_detailed", "pearson", "refute",
    "relative_scores",
]
