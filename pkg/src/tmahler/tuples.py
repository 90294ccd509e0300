"""Measure tuples, their t-norms, dominance, and minimality pruning.

A measure tuple collects max(a, b) over the parts of a representation; its
natural logs are the vector whose L^t "norm" (for any t > 0, including the
max at t = infinity) is the quantity minimized by the t-metric Mahler
measure.  Tuples are stored as descending tuples of integers so equality and
dedup are exact.

Dominance x <= y means ||x||_t <= ||y||_t for every t > 0, equivalently
sum (log x_i)^t <= sum (log y_j)^t for every t > 0.  The decision procedure
uses a coordinatewise sufficient test, the analytic limits at t -> 0+ (entry
counts, then products of the log-entries) and t -> infinity (lexicographic on
descending entries), and a dense grid scan in between.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import DomainError
from .factorization import Representation

MeasureTuple = tuple[int, ...]

# Beyond the largest crossing, ordering is decided by the t -> infinity
# lexicographic comparison; 64 comfortably covers desk-scale crossings.
DOMINANCE_T_MAX = 64.0
_DOMINANCE_GRID_POINTS = 1200
_DOMINANCE_SLACK = 1e-12


def as_measure_tuple(entries: Iterable[int]) -> MeasureTuple:
    """Canonicalize and validate a multiset of integer measures >= 2."""
    t = tuple(sorted(entries, reverse=True))
    if any(e < 2 for e in t):
        raise DomainError("measure tuple entries must be integers >= 2")
    return t


def measure_tuple(rep: Representation) -> MeasureTuple:
    """The multiset {max(a, b)} over the parts, descending; empty rep -> ()."""
    return tuple(sorted((max(p.a, p.b) for p in rep), reverse=True))


def log_power_sum(x: MeasureTuple, t: float) -> float:
    """log(sum_i (log x_i)^t), max-factored for stability."""
    if not x:
        raise DomainError("log_power_sum is undefined for the empty tuple")
    if t <= 0:
        raise DomainError("t must be positive")
    loglogs = [math.log(math.log(e)) for e in x]
    m = max(loglogs)
    return t * m + math.log(sum(math.exp(t * (v - m)) for v in loglogs))


def norm_t(x: MeasureTuple, t: float) -> float:
    """(sum_i (log x_i)^t)^(1/t); log of the max entry at t = infinity.

    Multi-entry tuples diverge like N^(1/t) as t -> 0+; past float range the
    value saturates to infinity rather than raising.
    """
    if not x:
        return 0.0
    if t == math.inf:
        return math.log(max(x))
    if t <= 0:
        raise DomainError("t must be positive")
    if len(x) == 1:
        return math.log(x[0])
    try:
        return math.exp(log_power_sum(x, t) / t)
    except OverflowError:
        return math.inf


@lru_cache(maxsize=1)
def _dominance_grid(t_max: float) -> np.ndarray:
    # Log-spaced to catch small-t behavior, densified where crossings live.
    coarse = np.geomspace(1e-3, t_max, _DOMINANCE_GRID_POINTS)
    fine = np.linspace(0.25, 8.0, 800)
    return np.unique(np.concatenate([coarse, fine]))


def power_sums(x: MeasureTuple, ts: np.ndarray) -> np.ndarray:
    """sum_i (log x_i)^t over an array of t values (no overflow at desk scale)."""
    logs = np.log(np.asarray(x, dtype=float))
    return (logs[None, :] ** ts[:, None]).sum(axis=1)


def _lex_at_infinity_leq(x: MeasureTuple, y: MeasureTuple) -> bool:
    """Whether sum (log x_i)^t <= sum (log y_j)^t as t -> infinity.

    Decided by the largest differing entry of the descending multisets
    (missing entries count as measure 1, i.e. log 0-like negligible terms).
    """
    for xi, yi in zip(x, y):
        if xi != yi:
            return xi < yi
    return len(x) <= len(y)


def dominates(x: MeasureTuple, y: MeasureTuple, t_max: float = DOMINANCE_T_MAX) -> bool:
    """True iff ||x||_t <= ||y||_t for all t > 0."""
    if x == y:
        return True
    # Sufficient coordinatewise test: pad x with zero measures up to len(y).
    if len(x) <= len(y) and all(xi <= yi for xi, yi in zip(x, y)):
        return True
    # t -> 0+: power sums tend to the entry counts, then to the counts plus
    # t * sum(log log entries); x must not sit above y in either order.
    if len(x) > len(y):
        return False
    if len(x) == len(y):
        sx = sum(math.log(math.log(e)) for e in x)
        sy = sum(math.log(math.log(e)) for e in y)
        if sx > sy + _DOMINANCE_SLACK:
            return False
    # t -> infinity: decided lexicographically by descending entries.
    if not _lex_at_infinity_leq(x, y):
        return False
    # t = 1: the power sums are the logs of the entry products, so compare
    # the products exactly.  On an exact tie the derivative in t decides the
    # local order on both sides of 1, hence a strict difference there means
    # a sign change and no dominance.
    px, py = math.prod(x), math.prod(y)
    if px > py:
        return False
    if px == py:
        gx = sum(math.log(e) * math.log(math.log(e)) for e in x)
        gy = sum(math.log(e) * math.log(math.log(e)) for e in y)
        if abs(gx - gy) > _DOMINANCE_SLACK:
            return False
    # Interior: dense scan for any point where x sits strictly above y.
    ts = _dominance_grid(t_max)
    diff = power_sums(x, ts) - power_sums(y, ts)
    return bool(np.all(diff <= _DOMINANCE_SLACK))


def prune_minimal(tuples: Iterable[MeasureTuple]) -> frozenset[MeasureTuple]:
    """The subset not strictly dominated by another input tuple.

    Equal tuples are merged first; the pointwise minimum of the t-norms over
    the output equals that over the input for every t > 0.  Large pools go
    through a vectorized pre-screen that applies the same coordinatewise and
    limit filters as `dominates` in bulk before any pairwise scan.
    """
    distinct = frozenset(tuples)
    if not distinct:
        raise DomainError("prune_minimal requires a nonempty input")
    if len(distinct) <= 64:
        return frozenset(
            x
            for x in distinct
            if not any(y != x and dominates(y, x) for y in distinct)
        )

    # Stage 1: coordinatewise Pareto frontier.  Zero-padding makes the
    # coordinatewise test subsume the length condition, and a coordinatewise
    # dominator has a strictly smaller product, so with the pool sorted by
    # product ascending the first remaining element is always minimal; each
    # round promotes it and drops everything it dominates in one array op.
    pool = sorted(distinct, key=lambda x: (math.prod(x), len(x), x))
    total = len(pool)
    width = max(len(x) for x in pool)
    all_logs = np.zeros((total, width))
    flat_rows = np.repeat(np.arange(total), [len(x) for x in pool])
    flat_cols = np.concatenate([np.arange(len(x)) for x in pool])
    all_logs[flat_rows, flat_cols] = np.log(
        np.fromiter((e for x in pool for e in x), dtype=float, count=len(flat_rows))
    )

    frontier_idx: list[int] = []
    idx_r = np.arange(total)
    logs_r = all_logs
    while idx_r.size:
        frontier_idx.append(int(idx_r[0]))
        survives = ~((logs_r >= logs_r[0]).all(axis=1))
        survives[0] = False
        idx_r = idx_r[survives]
        logs_r = logs_r[survives]
    frontier = [pool[i] for i in frontier_idx]
    frontier_logs = all_logs[frontier_idx]

    # Stage 2: full dominance within the frontier, screened by the same
    # limit filters `dominates` applies (t -> 0, t = 1 and its derivative).
    n = len(frontier)
    logs = frontier_logs[:n]
    lens = np.array([len(x) for x in frontier])
    log_prods = logs.sum(axis=1)
    inner = np.where(logs > 0, np.log(np.where(logs > 0, logs, 1.0)), 0.0)
    loglog_sums = inner.sum(axis=1)
    derivs = (logs * inner).sum(axis=1)
    slack = 1e-9

    # Grid power sums for the whole frontier at once (same grid and slack as
    # `dominates`), so the expensive per-pair scan runs as array compares.
    ts = _dominance_grid(DOMINANCE_T_MAX)
    sums = np.empty((n, ts.size))
    for lo in range(0, n, 256):
        hi = min(lo + 256, n)
        block = logs[lo:hi]
        ln = np.where(block > 0, np.log(np.where(block > 0, block, 1.0)), -np.inf)
        sums[lo:hi] = np.exp(ln[:, None, :] * ts[None, :, None]).sum(axis=2)

    keep: list[MeasureTuple] = []
    for i, x in enumerate(frontier):
        cand = (lens <= lens[i]) & (log_prods <= log_prods[i] + slack)
        cand &= ~((lens == lens[i]) & (loglog_sums > loglog_sums[i] + slack))
        prod_tie = np.abs(log_prods - log_prods[i]) <= slack
        cand &= ~(prod_tie & (np.abs(derivs - derivs[i]) > slack))
        cand[i] = False
        idx = np.nonzero(cand)[0]
        if idx.size:
            on_grid = (sums[idx] <= sums[i] + _DOMINANCE_SLACK).all(axis=1)
            idx = idx[on_grid]
        if not any(dominates(frontier[j], x) for j in idx):
            keep.append(x)
    return frozenset(keep)
