"""AUC-ROC via the exact Mann-Whitney statistic, stratified bootstrap
confidence intervals, and token-level accuracy."""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True)
class RocResult:
    auc: float
    bootstrap_mean: float
    ci_low: float
    ci_high: float
    n_boot: int
    seed: int


def _split(scores):
    members, nonmembers = [], []
    for value, is_member in scores:
        (members if is_member else nonmembers).append(float(value))
    if not members or not nonmembers:
        raise ValueError("both classes must be present")
    return members, nonmembers


def _auc(members, nonmembers):
    """(#(member < nonmember) + half the ties) / (|M| * |N|), computed
    with average ranks so large inputs stay O(n log n)."""
    combined = [(v, 0) for v in members] + [(v, 1) for v in nonmembers]
    combined.sort(key=lambda p: p[0])
    n = len(combined)
    rank_sum_nonmember = 0.0
    i = 0
    while i < n:
        j = i
        while j < n and combined[j][0] == combined[i][0]:
            j += 1
        avg_rank = (i + 1 + j) / 2  # ranks are 1-based
        for k in range(i, j):
            if combined[k][1] == 1:
                rank_sum_nonmember += avg_rank
        i = j
    n_non = len(nonmembers)
    u = rank_sum_nonmember - n_non * (n_non + 1) / 2
    return u / (len(members) * n_non)


def auc_roc(scores):
    """AUC of "lower score means member".  0.5 is chance; ties count half."""
    members, nonmembers = _split(scores)
    return _auc(members, nonmembers)


def bootstrap_auc(scores, n_boot=1000, seed=0):
    """Stratified bootstrap: members and non-members resampled with
    replacement independently at their original sizes; resample i uses
    seed + i, so replicates are order-independent."""
    members, nonmembers = _split(scores)
    point = _auc(members, nonmembers)
    aucs = []
    for i in range(n_boot):
        rng = random.Random(seed + i)
        m = [members[rng.randrange(len(members))] for _ in members]
        nm = [nonmembers[rng.randrange(len(nonmembers))] for _ in nonmembers]
        aucs.append(_auc(m, nm))
    aucs.sort()
    mean = sum(aucs) / len(aucs)
    return RocResult(
        auc=point,
        bootstrap_mean=mean,
        ci_low=_percentile(aucs, 2.5),
        ci_high=_percentile(aucs, 97.5),
        n_boot=n_boot,
        seed=seed,
    )


def _percentile(sorted_values, pct):
    """Linear interpolation between closest ranks."""
    if len(sorted_values) == 1:
        return sorted_values[0]
    pos = pct / 100 * (len(sorted_values) - 1)
    lo = int(pos)
    hi = min(lo + 1, len(sorted_values) - 1)
    frac = pos - lo
    return sorted_values[lo] * (1 - frac) + sorted_values[hi] * frac


def token_accuracy(reference, predicted):
    """Fraction of positions where the predicted token matches exactly."""
    if len(reference) != len(predicted):
        raise ValueError("sequences must have equal length")
    if not reference:
        raise ValueError("sequences must be non-empty")
    hits = sum(1 for a, b in zip(reference, predicted) if a == b)
    return hits / len(reference)
