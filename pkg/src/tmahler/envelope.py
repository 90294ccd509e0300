"""The envelope mu_alpha(t): evaluation, piecewise profile, exceptional points.

Assuming the rational-infimum conjecture, the t-metric Mahler measure of a
rational alpha is the pointwise minimum over finitely many tuple norm
functions t -> ||x||_t, one per minimal measure tuple.  On any (0, T] the
envelope decomposes into finitely many closed intervals on each of which a
single tuple attains the minimum; the interior breakpoints are the
exceptional points, and each one is a root of a difference of exponential
sums, isolated here by sign scan plus bisection.

Every quantity produced by this module for 1 < t < infinity is conditional
on that conjecture; results carry an explicit assumes_conjecture flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .factorization import (
    DEFAULT_REPRESENTATION_CAP,
    enumerate_measure_tuples,
    prime_factors,
)
from .rational import ReducedRational, mahler_measure, multiply
from .tuples import (
    MeasureTuple,
    log_power_sum,
    norm_t,
    power_sums,
    prune_minimal,
)


@dataclass(frozen=True)
class CrossingSearchConfig:
    """Knobs for root isolation of power-sum differences."""

    scan_step: float = 1e-3
    bisect_width: float = 1e-12
    t_min: float = 1e-3  # mu_alpha is constant near 0; nothing to find below


@dataclass(frozen=True)
class CrossingPoint:
    """A root of sum (log x_i)^t - sum (log y_j)^t between distinct tuples."""

    t: float
    left_tuple: MeasureTuple
    right_tuple: MeasureTuple
    residual: float


@dataclass(frozen=True)
class Piece:
    """One interval of (0, T] on which a single tuple attains the minimum."""

    t_lo: float
    t_hi: float
    active: MeasureTuple


@dataclass(frozen=True)
class ExceptionalPoint:
    t: float
    residual: float


@dataclass(frozen=True)
class EnvelopeProfile:
    alpha: ReducedRational
    T: float
    pieces: tuple[Piece, ...]
    exceptional_points: tuple[ExceptionalPoint, ...]
    assumes_conjecture: bool = True


@lru_cache(maxsize=4096)
def minimal_tuples(
    alpha: ReducedRational, cap: int = DEFAULT_REPRESENTATION_CAP
) -> tuple[MeasureTuple, ...]:
    """The pruned measure tuples of alpha, sorted for deterministic output.

    Candidates come from maximal matchings only (see
    enumerate_measure_tuples); pruning them yields the same set as pruning
    the tuples of all representations.
    """
    candidates = enumerate_measure_tuples(alpha, cap=cap)
    if candidates == {()}:
        return ((),)
    return tuple(sorted(prune_minimal(candidates)))


def mt_measure(
    alpha: ReducedRational, t: float, cap: int = DEFAULT_REPRESENTATION_CAP
) -> float:
    """min over minimal tuples of ||.||_t; 0 for +-1.  Never exceeds M(alpha)."""
    if alpha.is_unit:
        return 0.0
    if t != math.inf and t <= 0:
        raise DomainError("t must be positive")
    return min(norm_t(x, t) for x in minimal_tuples(alpha, cap))


def attaining_tuples(
    alpha: ReducedRational,
    t: float,
    tol: float = 1e-9,
    cap: int = DEFAULT_REPRESENTATION_CAP,
) -> frozenset[MeasureTuple]:
    """All minimal tuples whose norm at t is within tol of the minimum."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    if alpha.is_unit:
        return frozenset({()})
    tuples = minimal_tuples(alpha, cap)
    norms = {x: norm_t(x, t) for x in tuples}
    best = min(norms.values())
    return frozenset(x for x, v in norms.items() if v <= best + tol)


def _power_sum_diff_sign(x: MeasureTuple, y: MeasureTuple, t: float) -> float:
    return log_power_sum(x, t) - log_power_sum(y, t)


def _residual(x: MeasureTuple, y: MeasureTuple, t: float) -> float:
    """|sum (log x_i)^t - sum (log y_j)^t| with overflow guard."""
    try:
        sx = math.exp(log_power_sum(x, t))
        sy = math.exp(log_power_sum(y, t))
        return abs(sx - sy)
    except OverflowError:
        return math.inf


def find_crossings(
    x: MeasureTuple,
    y: MeasureTuple,
    t_lo: float,
    t_hi: float,
    config: CrossingSearchConfig = CrossingSearchConfig(),
) -> list[CrossingPoint]:
    """Roots of F(t) = sum (log x_i)^t - sum (log y_j)^t in [t_lo, t_hi].

    Sign scan at config.scan_step refined by bisection to an interval of
    width config.bisect_width.  Tangencies without a sign change across a
    grid cell are not reported.
    """
    if x == y:
        raise DomainError(
            "crossings are undefined for identical tuples (same entire function)"
        )
    if not (0 < t_lo < t_hi):
        raise DomainError("need 0 < t_lo < t_hi")

    n_steps = max(2, math.ceil((t_hi - t_lo) / config.scan_step))
    ts = np.linspace(t_lo, t_hi, n_steps + 1)
    diff = power_sums(x, ts) - power_sums(y, ts)

    roots_t = [float(ts[i]) for i in range(len(ts)) if diff[i] == 0.0]
    for i in range(len(ts) - 1):
        a, b = float(ts[i]), float(ts[i + 1])
        fa, fb = float(diff[i]), float(diff[i + 1])
        if fa * fb >= 0:  # exact grid zeros already collected above
            continue
        while b - a > config.bisect_width:
            m = 0.5 * (a + b)
            fm = _power_sum_diff_sign(x, y, m)
            if fm == 0.0:
                a = b = m
                break
            if (fm > 0) == (fa > 0):
                a, fa = m, fm
            else:
                b = m
        roots_t.append(0.5 * (a + b))
    return [
        CrossingPoint(t, x, y, _residual(x, y, t)) for t in sorted(roots_t)
    ]


def integer_closed_form(n: int, t: float) -> float:
    """mu_n(t) for an integer n >= 2: log n for t <= 1, else the L^t norm of
    the logs of its prime factors with multiplicity.  Independent oracle for
    mt_measure on integers."""
    if n < 2:
        raise DomainError("n must be an integer >= 2")
    if t != math.inf and t <= 0:
        raise DomainError("t must be positive")
    if t <= 1:
        return math.log(n)
    primes = prime_factors(n)
    if t == math.inf:
        return math.log(max(primes))
    return norm_t(tuple(sorted(primes, reverse=True)), t)


def _cluster(values: list[float], tol: float = 1e-9) -> list[float]:
    """Merge near-coincident breakpoint candidates, keeping one per cluster."""
    out: list[float] = []
    for v in sorted(values):
        if not out or v - out[-1] > tol:
            out.append(v)
    return out


def _argmin_tuple(tuples: tuple[MeasureTuple, ...], t: float) -> MeasureTuple:
    return min(tuples, key=lambda x: (norm_t(x, t), x))


def profile(
    alpha: ReducedRational,
    T: float,
    config: CrossingSearchConfig = CrossingSearchConfig(),
    cap: int = DEFAULT_REPRESENTATION_CAP,
) -> EnvelopeProfile:
    """The piecewise decomposition of the envelope on (0, T].

    Collects all pairwise crossings of minimal tuple norm functions, reads
    off the active (argmin) tuple on each candidate subinterval at its
    midpoint, merges intervals with an unchanged active tuple, and reports a
    breakpoint as exceptional only where the active tuple changes.
    """
    if T <= 0:
        raise DomainError("T must be positive")
    if alpha.is_unit:
        return EnvelopeProfile(alpha, T, (Piece(0.0, T, ()),), ())

    tuples = minimal_tuples(alpha, cap)
    crossings: list[CrossingPoint] = []
    for i in range(len(tuples)):
        for j in range(i + 1, len(tuples)):
            crossings.extend(
                find_crossings(tuples[i], tuples[j], config.t_min, T, config)
            )
    candidates = _cluster([c.t for c in crossings if config.t_min < c.t < T])

    bounds = [0.0, *candidates, T]
    pieces: list[Piece] = []
    for lo, hi in zip(bounds, bounds[1:]):
        mid = 0.5 * (lo + hi) if lo > 0 else 0.5 * hi
        active = _argmin_tuple(tuples, mid)
        if pieces and pieces[-1].active == active:
            pieces[-1] = Piece(pieces[-1].t_lo, hi, active)
        else:
            pieces.append(Piece(lo, hi, active))

    exceptional: list[ExceptionalPoint] = []
    refined_pieces: list[Piece] = [pieces[0]]
    for left, right in zip(pieces, pieces[1:]):
        t_break = left.t_hi
        # Prefer the refined crossing of the two active tuples nearest the
        # breakpoint; the clustered candidate is a fallback.
        best = None
        for c in crossings:
            if {c.left_tuple, c.right_tuple} == {left.active, right.active}:
                if best is None or abs(c.t - t_break) < abs(best.t - t_break):
                    best = c
        if best is not None and abs(best.t - t_break) < 10 * config.scan_step:
            t_break = best.t
            residual = best.residual
        else:
            residual = _residual(left.active, right.active, t_break)
        exceptional.append(ExceptionalPoint(t_break, residual))
        refined_pieces[-1] = Piece(refined_pieces[-1].t_lo, t_break, left.active)
        refined_pieces.append(Piece(t_break, right.t_hi, right.active))

    return EnvelopeProfile(alpha, T, tuple(refined_pieces), tuple(exceptional))


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    subject: str
    passed: bool
    margin: float  # slack remaining; negative means violated


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...]
    all_passed: bool
    worst_margin: float


def check_axioms(
    pairs: list[tuple[ReducedRational, ReducedRational]],
    t: float,
    tol: float = 1e-9,
    cap: int = DEFAULT_REPRESENTATION_CAP,
) -> AxiomReport:
    """Spot-check the height axioms at t on the given pairs.

    Per pair: the t-triangle inequality for the product, monotonicity of
    mt_measure in t, and mt_measure <= classical measure.  Failures become
    report entries, never exceptions.
    """
    if t != math.inf and t <= 0:
        raise DomainError("t must be positive")
    checks: list[AxiomCheck] = []

    def add(name: str, subject: str, margin: float):
        checks.append(AxiomCheck(name, subject, margin >= -tol, margin))

    for a, b in pairs:
        ab = multiply(a, b)
        subject = f"({a})*({b})"
        if t == math.inf:
            margin = max(mt_measure(a, t, cap), mt_measure(b, t, cap)) - mt_measure(
                ab, t, cap
            )
        else:
            margin = (
                mt_measure(a, t, cap) ** t
                + mt_measure(b, t, cap) ** t
                - mt_measure(ab, t, cap) ** t
            )
        add("t-triangle", subject, margin)

        for g in (a, b, ab):
            add("bounded-by-M", str(g), mahler_measure(g) - mt_measure(g, t, cap))
            if t != math.inf:
                for s in (0.25 * t, 0.5 * t, 0.75 * t):
                    add(
                        "monotone-in-t",
                        f"{g} at s={s:g}",
                        mt_measure(g, s, cap) - mt_measure(g, t, cap),
                    )

    worst = min((c.margin for c in checks), default=0.0)
    return AxiomReport(tuple(checks), all(c.passed for c in checks), worst)
