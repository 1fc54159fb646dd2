"""Average-treatment-effect estimation for rewrite rules.

The frame has one row per scored sample: T = 0 for samples scored against
the original-trained model, T = 1 for the transformed-trained model.
Outcomes are membership scores normalized to relative scores within each
treatment arm; confounders are the static code features of the sample.
The estimator is least-squares outcome regression Y ~ 1 + T + Z under the
backdoor criterion, with zero-variance or collinear confounder columns
dropped (and reported).  Refutations R1-R4 perturb the frame and check
the estimate's stability.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

DEFAULT_EPSILON = 1e-9
ESTIMATOR_TAG = "ols-backdoor-linear"

R1, R2, R3, R4 = "R1", "R2", "R3", "R4"


@dataclass(frozen=True)
class CausalRow:
    unit_id: str
    t: int                 # 0 original, 1 transformed
    y: dict                # outcome name -> relative-scored value
    z: dict                # confounder name -> value

    def __post_init__(self):
        if self.t not in (0, 1):
            raise ValueError(f"treatment must be 0 or 1, got {self.t}")


@dataclass(frozen=True)
class Refutation:
    method: str
    new_value: float
    passed: bool


@dataclass(frozen=True)
class AteReport:
    rule_id: int
    estimator: str
    outcomes: dict = field(default_factory=dict)
    # outcomes[name] = {"pearson": r, "ate": v, "dropped": [...],
    #                   "refutations": {R1..R4: Refutation}}


def relative_scores(values, epsilon=DEFAULT_EPSILON):
    """Min-max normalization with an epsilon-padded denominator, so the
    output always lies in [0, 1) and the minimum maps to exactly 0."""
    values = [float(v) for v in values]
    if not values:
        raise ValueError("values must be non-empty")
    if epsilon <= 0:
        raise ValueError("epsilon must be > 0")
    lo = min(values)
    hi = max(values)
    den = hi - lo + epsilon
    return [(v - lo) / den for v in values]


def build_frame(rows, epsilon=DEFAULT_EPSILON):
    """Relative-score every outcome within each treatment arm (the raw
    values in ``rows`` are replaced, arm by arm)."""
    out = list(rows)
    if not out:
        return out
    outcome_names = sorted({k for r in out for k in r.y})
    for arm in (0, 1):
        idx = [i for i, r in enumerate(out) if r.t == arm]
        if not idx:
            continue
        for name in outcome_names:
            rel = relative_scores([out[i].y[name] for i in idx], epsilon)
            for pos, i in enumerate(idx):
                out[i] = CausalRow(out[i].unit_id, out[i].t,
                                   {**out[i].y, name: rel[pos]}, out[i].z)
    return out


def _columns(frame, outcome):
    t = np.array([r.t for r in frame], dtype=float)
    y = np.array([float(r.y[outcome]) for r in frame], dtype=float)
    z_names = sorted({k for r in frame for k in r.z})
    z_cols = {name: np.array([float(r.z.get(name, 0.0)) for r in frame])
              for name in z_names}
    return t, y, z_cols


def _design(t, z_cols, extra=None):
    """Design matrix [1, T, kept confounders]; a confounder column is
    dropped when it has no variance or does not increase the rank."""
    n = len(t)
    cols = [np.ones(n), t]
    kept, dropped = [], []
    for name in sorted(z_cols):
        col = z_cols[name]
        if np.ptp(col) == 0:
            dropped.append(name)
            continue
        trial = np.column_stack(cols + [col])
        if np.linalg.matrix_rank(trial) == trial.shape[1]:
            cols.append(col)
            kept.append(name)
        else:
            dropped.append(name)
    if extra is not None:
        cols.append(extra)
    return np.column_stack(cols), kept, dropped


def _fit_ate(t, y, z_cols, extra=None):
    if np.ptp(t) == 0:
        raise ValueError("both treatment arms must be present")
    design, kept, dropped = _design(t, z_cols, extra)
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return float(coef[1]), kept, dropped


def estimate_ate(frame, outcome):
    """ATE of T on the outcome: the T coefficient of Y ~ 1 + T + Z."""
    t, y, z_cols = _columns(frame, outcome)
    ate, _, _ = _fit_ate(t, y, z_cols)
    return ate


def estimate_ate_detailed(frame, outcome):
    t, y, z_cols = _columns(frame, outcome)
    ate, kept, dropped = _fit_ate(t, y, z_cols)
    return ate, kept, dropped


def pearson(frame, outcome):
    """Correlation between treatment assignment and the outcome; NaN when
    the outcome has no variance."""
    t, y, _ = _columns(frame, outcome)
    if np.ptp(t) == 0:
        raise ValueError("both treatment arms must be present")
    if np.ptp(y) == 0:
        return float("nan")
    t_c = t - t.mean()
    y_c = y - y.mean()
    return float((t_c @ y_c) / math.sqrt((t_c @ t_c) * (y_c @ y_c)))


def _standardize(v):
    s = v.std()
    return (v - v.mean()) / s if s > 0 else np.zeros_like(v)


def refute(frame, outcome, method, seed=0):
    """Stability probes for the ATE estimate.

    R1 random common cause: add an independent normal covariate; the
       estimate should barely move.
    R2 placebo treatment: permute T; the new "effect" should be near 0.
    R3 unobserved confounder: add a covariate correlated 0.2 with both T
       and Y; the shift should stay small.
    R4 data subsets: re-estimate on ten 80% subsets; the spread should
       be small.
    """
    t, y, z_cols = _columns(frame, outcome)
    base, _, _ = _fit_ate(t, y, z_cols)
    shift_tol = max(0.05, 0.10 * abs(base))
    rng = np.random.default_rng(seed)
    if method == R1:
        extra = rng.standard_normal(len(t))
        new, _, _ = _fit_ate(t, y, z_cols, extra=extra)
        return Refutation(R1, new, abs(new - base) <= shift_tol)
    if method == R2:
        perm = np.array(t)
        py_rng = random.Random(seed)
        idx = list(range(len(perm)))
        py_rng.shuffle(idx)
        perm = perm[idx]
        if np.ptp(perm) == 0:  # pathological tiny frames
            raise ValueError("placebo permutation produced one arm")
        new, _, _ = _fit_ate(perm, y, z_cols)
        return Refutation(R2, new, abs(new) <= 0.05)
    if method == R3:
        noise = rng.standard_normal(len(t))
        # target correlation 0.2 with each of T and Y
        extra = 0.2 * _standardize(t) + 0.2 * _standardize(y) + noise
        new, _, _ = _fit_ate(t, y, z_cols, extra=extra)
        return Refutation(R3, new, abs(new - base) <= shift_tol)
    if method == R4:
        n = len(t)
        size = max(2, int(round(n * 0.8)))
        estimates = []
        for i in range(10):
            sub_rng = random.Random(seed + i)
            idx = sorted(sub_rng.sample(range(n), size))
            sub = [frame[j] for j in idx]
            estimates.append(estimate_ate(sub, outcome))
        mean = sum(estimates) / len(estimates)
        var = sum((e - mean) ** 2 for e in estimates) / (len(estimates) - 1)
        std = math.sqrt(var)
        return Refutation(R4, mean, std <= 0.1)
    raise ValueError(f"unknown refutation method {method!r}")


def analyze(frame, rule_id, seed=0):
    """Full per-rule report: Pearson r, ATE, and all four refutations for
    every outcome column present in the frame."""
    outcome_names = sorted({k for r in frame for k in r.y})
    report = AteReport(rule_id=rule_id, estimator=ESTIMATOR_TAG)
    for name in outcome_names:
        ate, kept, dropped = estimate_ate_detailed(frame, name)
        refutations = {m: refute(frame, name, m, seed=seed)
                       for m in (R1, R2, R3, R4)}
        report.outcomes[name] = {
            "pearson": pearson(frame, name),
            "ate": ate,
            "kept": kept,
            "dropped": dropped,
            "refutations": refutations,
        }
    return report
