"""Feasibility of the reduced system over the nonnegative cone.

For a given order and phase angle, decides whether the row-deduplicated
system has a nontrivial nonnegative null vector.  The complex system is
embedded as real/imaginary row pairs M, then the point b = (0, ..., 0, 1)
is projected onto the cone spanned by the columns of [M; 1'] with an
active-set nonnegative least squares solve.  A near-zero projection
residual hands back a witness in the cone; a nonzero residual r is, by the
projection's optimality conditions, a separating vector: h = -r restricted
to the M rows satisfies h'M > 0 columnwise (the finite-dimensional
separation certificate).  Both outcomes are re-verified against freshly
built matrices before being returned.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .catalog import conjectured_threshold
from .nnls import IterationLimitReached, nnls, refined_residual
from .tensor import build_C

TOL_WITNESS = 1e-8
TOL_MARGIN = 1e-8
TOL_NEGATIVE = 1e-12

MAX_FEASIBILITY_ORDER = 12
MAX_THRESHOLD_ORDER = 10


class NumericalIndeterminate(RuntimeError):
    """Neither a witness nor a certificate met its verification tolerance."""

    def __init__(self, message: str, objective: float | None = None):
        super().__init__(message)
        self.objective = objective


class NonMonotonePredicate(RuntimeError):
    """Probed feasibility contradicts a single-threshold structure."""


@dataclass(frozen=True)
class RealizedSystem:
    """Real embedding of the reduced system: stacked Re and Im rows."""

    matrix: np.ndarray
    alpha: float
    order: int


@dataclass(frozen=True)
class Witness:
    y: np.ndarray
    residual: float

    def to_dict(self) -> dict:
        return {"kind": "witness", "y": self.y.tolist(), "residual": self.residual}


@dataclass(frozen=True)
class Certificate:
    h: np.ndarray
    margin: float

    def to_dict(self) -> dict:
        return {"kind": "certificate", "h": self.h.tolist(), "margin": self.margin}


FeasibilityOutcome = Witness | Certificate


def realize(alpha: float, n: int) -> RealizedSystem:
    """Stack real and imaginary parts of the reduced system into a real
    2(n+1) x p_n matrix with the same nonnegative null vectors."""
    if not 1 <= n <= MAX_FEASIBILITY_ORDER:
        raise ValueError(f"order must lie in 1..{MAX_FEASIBILITY_ORDER}")
    c = build_C(alpha, n)
    return RealizedSystem(matrix=np.vstack([c.real, c.imag]), alpha=float(alpha), order=n)


def nns_exists(alpha: float, n: int, *,
               tol_witness: float = TOL_WITNESS,
               tol_margin: float = TOL_MARGIN,
               tol_negative: float = TOL_NEGATIVE,
               system: RealizedSystem | None = None) -> FeasibilityOutcome:
    """Decide whether a nontrivial nonnegative null vector exists.

    Projects onto the cone of the normalized system { y >= 0, M y = 0,
    sum(y) = 1 }.  Returns a re-verified Witness or Certificate; raises
    NumericalIndeterminate when neither side can be certified at its
    tolerance, which near the feasibility boundary is unavoidable: the
    best achievable separation margin decays to zero at the boundary.
    """
    if not math.pi / 2 - 1e-12 <= alpha <= math.pi + 1e-12:
        raise ValueError("alpha must lie in [pi/2, pi]")
    sys_ = system if system is not None else realize(alpha, n)
    m = sys_.matrix
    rows, p = m.shape
    a = np.vstack([m, np.ones((1, p))])
    b = np.zeros(rows + 1)
    b[-1] = 1.0
    try:
        result = nnls(a, b)
    except IterationLimitReached as exc:
        raise NumericalIndeterminate(f"projection did not terminate cleanly: {exc}") from exc

    # both outcomes are judged solely by re-verification against freshly
    # built matrices; the projection just proposes candidates
    total = float(result.y.sum())
    if total > 0:
        y = result.y / total
        fresh = build_C(alpha, n)
        residual = float(np.max(np.abs(fresh @ y)))
        if residual <= tol_witness and float(np.min(y)) >= -tol_negative:
            return Witness(y=y, residual=residual)

    h = -refined_residual(a, b, result.y)[:rows]
    hmax = float(np.max(np.abs(h)))
    if hmax > 0:
        h = h / hmax
        fresh_m = sys_.matrix if system is not None else realize(alpha, n).matrix
        margin = float(np.min(h @ fresh_m))
        if margin >= tol_margin:
            return Certificate(h=h, margin=margin)

    raise NumericalIndeterminate(
        f"projection residual {result.rnorm:.3e}: no witness within {tol_witness:.1e} "
        f"and no separation margin above {tol_margin:.1e}",
        objective=result.rnorm,
    )


def verify_certificate(cert: Certificate, alpha: float, n: int) -> tuple[bool, float]:
    """Recompute h'M from a freshly built system; valid when the minimum
    column value is no less than the declared margin (within 1e-12)."""
    h = np.asarray(cert.h, dtype=float)
    m = realize(alpha, n).matrix
    if h.shape != (m.shape[0],):
        return False, 0.0
    margin = float(np.min(h @ m))
    return margin >= cert.margin - 1e-12 and margin > 0, margin


@dataclass(frozen=True)
class ThresholdEstimate:
    order: int
    alpha_star: float
    bracket_width: float
    conjectured: float

    def to_dict(self) -> dict:
        return {
            "n": self.order,
            "alpha_star": self.alpha_star,
            "bracket_width": self.bracket_width,
            "conjectured": self.conjectured,
        }


def threshold_bisect(n: int, tol_alpha: float = 1e-6, **options) -> ThresholdEstimate:
    """Bisect the phase angle over [pi/2, pi] for the feasibility boundary.

    Starts from the known-feasible right endpoint pi and a point just above
    pi/2 that is known infeasible for every order.  Probes are classified by
    whether a witness emerges; a probe whose certificate misses the strict
    margin bar but whose projection residual is clearly positive still
    counts as the infeasible side for bracketing (near the boundary the
    best achievable margin decays below any fixed bar, so certified
    infeasibility there is unattainable).  Probes must stay consistent with
    a single threshold, otherwise NonMonotonePredicate is raised.
    """
    if not 1 <= n <= MAX_THRESHOLD_ORDER:
        raise ValueError(f"order must lie in 1..{MAX_THRESHOLD_ORDER}")
    if tol_alpha < 1e-8:
        raise ValueError("tol_alpha below 1e-8 is not resolvable in float")
    lo = math.pi / 2 + 1e-4
    hi = math.pi
    tol_witness = options.get("tol_witness", TOL_WITNESS)
    probes: list[tuple[float, bool]] = []

    def feasible(alpha: float) -> bool:
        try:
            flag = isinstance(nns_exists(alpha, n, **options), Witness)
        except NumericalIndeterminate as exc:
            if exc.objective is None or exc.objective <= tol_witness:
                raise
            flag = False
        probes.append((alpha, flag))
        return flag

    if feasible(lo):
        raise NonMonotonePredicate(f"expected infeasibility near pi/2 at order {n}")
    if not feasible(hi):
        raise NonMonotonePredicate(f"expected feasibility at pi at order {n}")
    while hi - lo > tol_alpha:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    worst_infeasible = max(a for a, flag in probes if not flag)
    best_feasible = min(a for a, flag in probes if flag)
    if worst_infeasible >= best_feasible:
        raise NonMonotonePredicate("probes contradict a single feasibility threshold")
    return ThresholdEstimate(
        order=n,
        alpha_star=0.5 * (lo + hi),
        bracket_width=hi - lo,
        conjectured=conjectured_threshold(n),
    )


def necessity_grid(n: int, points: int) -> np.ndarray:
    """Evenly spaced angles strictly between pi/2 and the conjectured
    threshold for order n."""
    lo = math.pi / 2
    hi = conjectured_threshold(n)
    return lo + (hi - lo) * (np.arange(points) + 1) / (points + 1)


def necessity_point(alpha: float, n: int, **options) -> dict:
    """One grid point of the necessity scan: expects a verified certificate;
    a witness or an indeterminate outcome is flagged as an anomaly."""
    row: dict = {"alpha": float(alpha), "n": n}
    try:
        outcome = nns_exists(alpha, n, **options)
    except NumericalIndeterminate as exc:
        row.update(outcome="indeterminate", detail=str(exc), anomaly=True)
        return row
    if isinstance(outcome, Certificate):
        ok, margin = verify_certificate(outcome, alpha, n)
        row.update(outcome="certificate", margin=margin, verified=ok, anomaly=not ok)
    else:
        row.update(outcome="witness", residual=outcome.residual, anomaly=True)
    return row


def necessity_scan(n: int, points: int, workers: int | None = None, **options) -> list[dict]:
    """Probe the conjecturally infeasible region; each grid point should
    produce a verified certificate.  Grid points run concurrently; rows come
    back in grid order."""
    grid = necessity_grid(n, points)
    if len(grid) == 0:
        return []
    with ThreadPoolExecutor(max_workers=workers or min(8, len(grid))) as pool:
        return list(pool.map(lambda a: necessity_point(float(a), n, **options), grid))
