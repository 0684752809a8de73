"""Explicit nonnegative solutions of the reduced system for orders 1..10.

Each order has a half-open admissible interval of phase angles (closed on
the left); the order-1 entry is the single angle pi.  Vectors are laid out
in canonical column order, written below block by block: first the labels
with no 1-digits, then one 1-digit, and so on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .labels import p_count
from .symmetry import expand, reduce, symmetrize_permutation
from .tensor import build_C

CATALOG_MAX_ORDER = 10


class AlphaOutOfInterval(ValueError):
    """Angle outside the admissible interval for the requested order."""


def conjectured_threshold(n: int) -> float:
    """Left endpoint pi/2 + pi/(2n) of the admissible region at order n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return math.pi / 2 + math.pi / (2 * n)


def alpha_interval(n: int) -> tuple[float, float]:
    """Catalog interval for order n: [pi/2 + pi/(2n), pi/2 + pi/(2(n-1)))
    for n >= 2, and the single point pi for n = 1."""
    _check_catalog_order(n)
    if n == 1:
        return (math.pi, math.pi)
    return (conjectured_threshold(n), conjectured_threshold(n - 1))


def in_interval(n: int, alpha: float) -> bool:
    lo, hi = alpha_interval(n)
    if n == 1:
        return abs(alpha - math.pi) <= 1e-12
    return lo <= alpha < hi


def interval_samples(n: int, count: int) -> np.ndarray:
    """Deterministic angles in the catalog interval, left endpoint included."""
    lo, hi = alpha_interval(n)
    if n == 1:
        return np.full(count, math.pi)
    # keep strictly below the open right endpoint
    return lo + (hi - lo) * np.arange(count) / max(count, 1)


def _nns_1(a: float) -> np.ndarray:
    return np.ones(3)


def _nns_2(a: float) -> np.ndarray:
    c = math.cos
    return np.array([1, c(2 * a), 1,
                     -c(a), -c(a),
                     1])


def _nns_3(a: float) -> np.ndarray:
    s = math.sin
    return np.array([3 * s(a), s(3 * a), s(3 * a), 3 * s(a),
                     -s(2 * a), -s(2 * a), -s(2 * a),
                     s(a), s(a),
                     0])


def _nns_4(a: float) -> np.ndarray:
    c = math.cos
    return np.array([6, 0, -2 * c(4 * a), 0, 6,
                     -3 * c(a), c(3 * a), c(3 * a), -3 * c(a),
                     2, 0, 2,
                     -3 * c(a), -3 * c(a),
                     6])


def _nns_5(a: float) -> np.ndarray:
    s = math.sin
    return np.array([20 * s(a), 0, -2 * s(5 * a), -2 * s(5 * a), 0, 20 * s(a),
                     -4 * s(2 * a), s(4 * a), 2 * s(4 * a), s(4 * a), -4 * s(2 * a),
                     3 * s(a), -s(3 * a), -s(3 * a), 3 * s(a),
                     -s(2 * a), 0, -s(2 * a),
                     2 * s(a), 2 * s(a),
                     0])


def _nns_6(a: float) -> np.ndarray:
    c = math.cos
    return np.array([20, 0, 0, 2 * c(6 * a), 0, 0, 20,
                     -10 * c(a), 0, -c(5 * a), -c(5 * a), 0, -10 * c(a),
                     3, 0, c(4 * a), 0, 3,
                     c(3 * a), 0, 0, c(3 * a),
                     -2 * c(2 * a), 0, -2 * c(2 * a),
                     0, 0,
                     5])


def _nns_7(a: float) -> np.ndarray:
    s = math.sin
    return np.array([140 * s(a), 0, 0, 4 * s(7 * a), 4 * s(7 * a), 0, 0, 140 * s(a),
                     -30 * s(2 * a), 0, -2 * s(6 * a), -4 * s(6 * a), -2 * s(6 * a), 0, -30 * s(2 * a),
                     20 * s(a), 0, 2 * s(5 * a), 2 * s(5 * a), 0, 20 * s(a),
                     2 * s(4 * a) - 4 * s(2 * a), s(4 * a), 0, s(4 * a), 2 * s(4 * a) - 4 * s(2 * a),
                     -4 * s(3 * a) + 6 * s(a), -2 * s(3 * a), -2 * s(3 * a), -4 * s(3 * a) + 6 * s(a),
                     0, 0, 0,
                     10 * s(a), 10 * s(a),
                     0])


def _nns_8(a: float) -> np.ndarray:
    c = math.cos
    return np.array([140, 0, 0, 0, -4 * c(8 * a), 0, 0, 0, 140,
                     -70 * c(a), 0, 0, 2 * c(7 * a), 2 * c(7 * a), 0, 0, -70 * c(a),
                     20, 0, 0, -2 * c(6 * a), 0, 0, 20,
                     5 * c(3 * a), -c(5 * a), 0, 0, -c(5 * a), 5 * c(3 * a),
                     -8 * c(2 * a), 2 * c(4 * a), 0, 2 * c(4 * a), -8 * c(2 * a),
                     0, 0, 0, 0,
                     10, 0, 10,
                     -35 * c(a), -35 * c(a),
                     140])


def _nns_9(a: float) -> np.ndarray:
    s = math.sin
    return np.array([504 * s(a), 0, 0, 0, -4 * s(9 * a), -4 * s(9 * a), 0, 0, 0, 504 * s(a),
                     -112 * s(2 * a), 0, 0, 2 * s(8 * a), 4 * s(8 * a), 2 * s(8 * a), 0, 0, -112 * s(2 * a),
                     70 * s(a), 0, 0, -2 * s(7 * a), -2 * s(7 * a), 0, 0, 70 * s(a),
                     6 * s(4 * a) - 15 * s(2 * a), -s(6 * a), -s(6 * a), 0, -s(6 * a), -s(6 * a),
                     6 * s(4 * a) - 15 * s(2 * a),
                     -10 * s(3 * a) + 20 * s(a), 2 * s(5 * a), 2 * s(5 * a), 2 * s(5 * a), 2 * s(5 * a),
                     -10 * s(3 * a) + 20 * s(a),
                     4 * s(4 * a), 0, 0, 0, 4 * s(4 * a),
                     15 * s(a) - 12 * s(3 * a), -5 * s(3 * a), -5 * s(3 * a), 15 * s(a) - 12 * s(3 * a),
                     0, 0, 0,
                     56 * s(a), 56 * s(a),
                     0])


def _nns_10(a: float) -> np.ndarray:
    c = math.cos
    return np.array([504, 0, 0, 0, 0, 4 * c(10 * a), 0, 0, 0, 0, 504,
                     -252 * c(a), 0, 0, 0, -2 * c(9 * a), -2 * c(9 * a), 0, 0, 0, -252 * c(a),
                     70, 0, 0, 0, 2 * c(8 * a), 0, 0, 0, 70,
                     21 * c(3 * a), 0, c(7 * a), 0, 0, c(7 * a), 0, 21 * c(3 * a),
                     -30 * c(2 * a), 0, -2 * c(6 * a), 0, -2 * c(6 * a), 0, -30 * c(2 * a),
                     -4 * c(5 * a), 0, 0, 0, 0, -4 * c(5 * a),
                     12 * c(4 * a) + 15, 0, 5 * c(4 * a), 0, 12 * c(4 * a) + 15,
                     0, 0, 0, 0,
                     -56 * c(2 * a), 0, -56 * c(2 * a),
                     0, 0,
                     504])


_BUILDERS = {
    1: _nns_1, 2: _nns_2, 3: _nns_3, 4: _nns_4, 5: _nns_5,
    6: _nns_6, 7: _nns_7, 8: _nns_8, 9: _nns_9, 10: _nns_10,
}


def explicit_nns(n: int, alpha: float) -> np.ndarray:
    """The cataloged nonnegative solution at order n, evaluated at ``alpha``."""
    _check_catalog_order(n)
    if not in_interval(n, alpha):
        lo, hi = alpha_interval(n)
        raise AlphaOutOfInterval(f"alpha={alpha!r} outside [{lo!r}, {hi!r}) for order {n}")
    y = _BUILDERS[n](float(alpha))
    assert len(y) == p_count(n)
    return y


def quadrant_of(k: int, alpha: float, n: int) -> int:
    """Quadrant (1..4) of exp(i*k*alpha) for angles in the order-n interval:
    Q_{(k mod 4)+1} for k < n and Q_{((n+1) mod 4)+1} for k = n."""
    if n < 2:
        raise ValueError("quadrant bookkeeping requires order >= 2")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if not in_interval(n, alpha):
        lo, hi = alpha_interval(n)
        raise AlphaOutOfInterval(f"alpha={alpha!r} outside [{lo!r}, {hi!r}) for order {n}")
    if k < n:
        return (k % 4) + 1
    return ((n + 1) % 4) + 1


@dataclass(frozen=True)
class VerificationReport:
    order: int
    alpha: float
    residual_inf: float
    min_entry: float
    nonneg: bool
    nonzero: bool
    tol_residual: float
    tol_negative: float

    @property
    def passed(self) -> bool:
        return self.nonneg and self.nonzero and self.residual_inf <= self.tol_residual

    def to_dict(self) -> dict:
        return {
            "n": self.order,
            "alpha": self.alpha,
            "residual_inf": self.residual_inf,
            "min_entry": self.min_entry,
            "nonneg": self.nonneg,
            "nonzero": self.nonzero,
            "passed": self.passed,
            "tolerances": {"residual": self.tol_residual, "negative": self.tol_negative},
        }


def verify_vector(y: np.ndarray, alpha: float, n: int,
                  tol_residual: float = 1e-9, tol_negative: float = 1e-12) -> VerificationReport:
    """Residual and sign report for a candidate reduced solution."""
    y = np.asarray(y, dtype=float)
    c = build_C(alpha, n)
    scale = float(np.max(np.abs(y)))
    residual = float(np.max(np.abs(c @ y))) / scale if scale > 0 else 0.0
    min_entry = float(np.min(y))
    return VerificationReport(
        order=n,
        alpha=float(alpha),
        residual_inf=residual,
        min_entry=min_entry,
        nonneg=bool(min_entry >= -tol_negative),
        nonzero=bool(scale > 0),
        tol_residual=tol_residual,
        tol_negative=tol_negative,
    )


def verify_catalog_entry(n: int, alpha: float,
                         tol_residual: float = 1e-9,
                         tol_negative: float = 1e-12) -> VerificationReport:
    """Evaluate the cataloged solution and verify residual and nonnegativity."""
    y = explicit_nns(n, alpha)
    return verify_vector(y, alpha, n, tol_residual=tol_residual, tol_negative=tol_negative)


def pad_solution(y: np.ndarray, weights=(1.0, 0.0, 0.0)) -> np.ndarray:
    """Lift a reduced solution at order n to order n+1.

    Tensors the expanded vector with a fixed nonnegative 3-vector and
    re-symmetrizes; the result solves the order-(n+1) system whenever the
    input solves the order-n system, and stays nonnegative.
    """
    y = np.asarray(y, dtype=float)
    e = np.asarray(weights, dtype=float)
    if e.shape != (3,) or np.min(e) < 0:
        raise ValueError("padding weights must be a nonnegative 3-vector")
    full = np.kron(expand(y), e)
    return reduce(symmetrize_permutation(full))


def _check_catalog_order(n: int) -> None:
    if not 1 <= n <= CATALOG_MAX_ORDER:
        raise ValueError(f"catalog covers orders 1..{CATALOG_MAX_ORDER}, got {n}")
