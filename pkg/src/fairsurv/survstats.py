"""Nonparametric estimators for right-censored data and the statistical
tail functions the fairness and evaluation layers build on.

Conventions (fixed here, used everywhere):

* Records with time equal to an event time are in the risk set at that
  time; censored records leave the risk set immediately after their time.
  When an event and a censoring share an instant, the event is processed
  first.
* All inputs are (time, event) pairs: ``time`` non-negative finite reals,
  ``event`` 1 for an observed event and 0 for right-censoring.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from .errors import (
    DegenerateVarianceError,
    DomainError,
    EmptyInputError,
    ShapeError,
)
from .stepfn import StepFunction

__all__ = [
    "kaplan_meier",
    "nelson_aalen",
    "survival_from_hazard",
    "logrank_statistic",
    "chi_square_sf",
    "normal_sf",
    "wilcoxon_signed_rank",
]


def _check_time_event(time, event, name: str = "input"):
    t = np.asarray(time, dtype=np.float64).ravel()
    d = np.asarray(event).ravel()
    if t.size == 0:
        raise EmptyInputError(f"{name}: no records")
    if t.shape != d.shape:
        raise ShapeError(f"{name}: time and event lengths differ")
    if not np.all(np.isfinite(t)) or np.any(t < 0):
        raise DomainError(f"{name}: times must be finite and non-negative")
    d = d.astype(np.int8)
    if not np.all((d == 0) | (d == 1)):
        raise DomainError(f"{name}: event indicators must be 0 or 1")
    return t, d


def _risk_table(t: np.ndarray, d: np.ndarray):
    """Distinct times with event counts, total counts and at-risk counts."""
    order = np.argsort(t, kind="stable")
    ts, ds = t[order], d[order]
    utimes, first = np.unique(ts, return_index=True)
    counts = np.diff(np.append(first, ts.size))
    events = np.add.reduceat(ds.astype(np.int64), first)
    at_risk = ts.size - np.concatenate(([0], np.cumsum(counts)[:-1]))
    return utimes, events, counts, at_risk


def kaplan_meier(time, event) -> StepFunction:
    """Product-limit estimate of the survival function S(t).

    Breakpoints appear only at distinct event times; censored-only times
    shrink later risk sets without adding a step. The curve starts at 1 and
    is non-increasing with values in [0, 1].
    """
    t, d = _check_time_event(time, event, "kaplan_meier")
    utimes, events, _, at_risk = _risk_table(t, d)
    keep = events > 0
    factors = 1.0 - events[keep] / at_risk[keep]
    return StepFunction(x=utimes[keep], y=np.cumprod(factors), initial=1.0)


def nelson_aalen(time, event) -> StepFunction:
    """Nelson-Aalen estimate of the cumulative hazard H(t).

    H(0) = 0 and H increases by d_j / n_j at each distinct event time.
    """
    t, d = _check_time_event(time, event, "nelson_aalen")
    utimes, events, _, at_risk = _risk_table(t, d)
    keep = events > 0
    increments = events[keep] / at_risk[keep]
    return StepFunction(x=utimes[keep], y=np.cumsum(increments), initial=0.0)


def survival_from_hazard(hazard: StepFunction, t: float) -> float:
    """Survival probability exp(-H(t)) from a cumulative-hazard function.

    No clamping is applied: very large hazards underflow to exactly 0.0.
    """
    if t < 0:
        raise DomainError("time must be non-negative")
    return math.exp(-hazard(t))


def logrank_statistic(time_a, event_a, time_b, event_b) -> float:
    """Standardized two-group logrank statistic for group A.

    Sums observed-minus-expected event counts for group A over the pooled
    distinct event times and divides by the square root of the summed
    hypergeometric variances. Positive values mean group A experienced more
    events than expected under the null; the statistic is asymptotically
    standard normal. Swapping the groups flips the sign exactly.
    """
    ta, da = _check_time_event(time_a, event_a, "logrank group A")
    tb, db = _check_time_event(time_b, event_b, "logrank group B")
    t = np.concatenate([ta, tb])
    d = np.concatenate([da, db])
    in_a = np.concatenate([np.ones(ta.size, bool), np.zeros(tb.size, bool)])

    utimes, events, _, at_risk = _risk_table(t, d)
    # group-A slices of the same table
    order_a = np.searchsorted(utimes, ta)
    n_a = np.zeros(utimes.size, dtype=np.int64)
    d_a = np.zeros(utimes.size, dtype=np.int64)
    np.add.at(d_a, order_a, da.astype(np.int64))
    counts_a = np.bincount(order_a, minlength=utimes.size)
    n_a = ta.size - np.concatenate(([0], np.cumsum(counts_a)[:-1]))

    oe_terms = []
    var_terms = []
    for j in range(utimes.size):
        dj = int(events[j])
        if dj == 0:
            continue
        nj = int(at_risk[j])
        naj = int(n_a[j])
        oe_terms.append(d_a[j] - dj * naj / nj)
        if nj > 1:
            var_terms.append(dj * (naj / nj) * (1.0 - naj / nj) * (nj - dj) / (nj - 1))
    total_var = math.fsum(var_terms)
    if total_var <= 0.0:
        raise DegenerateVarianceError("logrank variance is zero; statistic undefined")
    return math.fsum(oe_terms) / math.sqrt(total_var)


def chi_square_sf(x: float, df: int) -> float:
    """Upper-tail probability of the chi-square distribution.

    Computed through the regularized upper incomplete gamma function.
    For df = 2 this equals exp(-x/2) exactly up to rounding.
    """
    if df is None or int(df) != df or df < 1:
        raise DomainError("degrees of freedom must be a positive integer")
    if not np.isfinite(x) or x < 0:
        raise DomainError("chi-square statistic must be finite and non-negative")
    return float(special.gammaincc(df / 2.0, x / 2.0))


def normal_sf(z: float) -> float:
    """Upper-tail probability of the standard normal distribution."""
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def wilcoxon_signed_rank(a, b) -> float:
    """Two-sided p-value of the Wilcoxon signed-rank test on paired data.

    Zero differences are dropped, tied absolute differences receive average
    ranks, and the normal approximation is used with tie-corrected variance
    and a continuity correction. If every difference is zero the result is
    1.0 (no evidence of a shift).
    """
    av = np.asarray(a, dtype=np.float64).ravel()
    bv = np.asarray(b, dtype=np.float64).ravel()
    if av.shape != bv.shape:
        raise ShapeError("paired samples must have equal length")
    if av.size == 0:
        raise ShapeError("paired samples must be non-empty")
    diff = av - bv
    diff = diff[diff != 0.0]
    n = diff.size
    if n == 0:
        return 1.0
    absd = np.abs(diff)
    order = np.argsort(absd, kind="stable")
    ranks = np.empty(n, dtype=np.float64)
    sorted_abs = absd[order]
    i = 0
    rank_pos = 1
    tie_correction = 0.0
    while i < n:
        j = i
        while j < n and sorted_abs[j] == sorted_abs[i]:
            j += 1
        tie = j - i
        avg = rank_pos + (tie - 1) / 2.0
        ranks[order[i:j]] = avg
        if tie > 1:
            tie_correction += tie**3 - tie
        rank_pos += tie
        i = j
    w_plus = float(np.sum(ranks[diff > 0]))
    mean = n * (n + 1) / 4.0
    var = n * (n + 1) * (2 * n + 1) / 24.0 - tie_correction / 48.0
    if var <= 0.0:
        return 1.0
    shift = abs(w_plus - mean)
    z = max(shift - 0.5, 0.0) / math.sqrt(var)
    return min(1.0, 2.0 * normal_sf(z))
