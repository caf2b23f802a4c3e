"""Neron-Tate canonical heights.

Normalization: ``canonical_height(P) = lim h(x(2^n P)) / 4^n`` with
``h(m/e^2) = log max(|m|, e^2)``, i.e. twice the local-height sum of
Silverman's 1988 convention.  Checked against E_5, P = (1, 2), whose height
is 1.03571952245041 in this normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .curve import TwinCurve, bad_primes, invariants
from .errors import DomainError, HeightConvergenceError
from .points import RationalPoint, add, multiply, naive_height, order
from .reduction import reduce_at

_FLOAT_EPS = 2.0**-52
_MAX_TATE_TERMS = 60
_DOUBLING_CAP = 12
_DOUBLING_DIGIT_CAP = 400_000


@dataclass(frozen=True)
class HeightReport:
    naive: float
    canonical: float
    error_bound: float
    method: str


def _log_abs(q: Fraction) -> float:
    return math.log(abs(q.numerator)) - math.log(q.denominator)


def _shifted_b(E: TwinCurve, r: int):
    """b-invariants after x = x' + r."""
    inv = invariants(E)
    b2, b4, b6, b8 = inv.b2, inv.b4, inv.b6, inv.b8
    return (
        b2 + 12 * r,
        b4 + r * b2 + 6 * r * r,
        b6 + 2 * r * b4 + r * r * b2 + 4 * r**3,
        b8 + 3 * r * b6 + 3 * r * r * b4 + r**3 * b2 + 3 * r**4,
    )


# Real points have x in [0, 2] or [p, oo); x' = x + 1 keeps x' >= 1 there.
_SHIFT = -1


def _tate_z_bound(E: TwinCurve, b) -> float:
    """max |log z(t)| over t = 1/x' for real points.

    z is a quartic in t, so its extremes on each interval sit at endpoints
    or at real critical points.
    """
    _, b4, b6, b8 = b
    z = np.polynomial.Polynomial([1.0, 0.0, -b4, -2.0 * b6, -b8])
    crit = [c.real for c in z.deriv().roots() if abs(c.imag) < 1e-12]
    worst = 0.0
    for lo, hi in ((1.0 / 3.0, 1.0), (0.0, 1.0 / (E.p + 1))):
        ts = [lo, hi] + [c for c in crit if lo <= c <= hi]
        vals = [float(z(t)) for t in ts]
        if min(vals) <= 0:
            raise DomainError("Tate series is not applicable to this model")
        worst = max(worst, max(abs(math.log(v)) for v in vals))
    return worst


def _tate_series(E: TwinCurve, x: Fraction, tol: float):
    """Archimedean local height (Silverman normalization) and its error."""
    b = _shifted_b(E, _SHIFT)
    b2, b4, b6, b8 = (float(v) for v in b)
    xs = x - _SHIFT
    bound = _tate_z_bound(E, b)
    lam = 0.5 * _log_abs(xs)
    t = float(1 / xs)
    terms = 0
    for n in range(_MAX_TATE_TERMS):
        t2 = t * t
        z = 1.0 - b4 * t2 - 2.0 * b6 * t2 * t - b8 * t2 * t2
        w = 4.0 * t + b2 * t2 + 2.0 * b4 * t2 * t + b6 * t2 * t2
        lam += 0.125 * 4.0**-n * math.log(z)
        t = w / z
        terms = n + 1
        if bound * 4.0**-terms / 6.0 < tol:
            break
    truncation = bound * 4.0**-terms / 6.0
    roundoff = 64 * _FLOAT_EPS * (abs(lam) + bound)
    return lam, truncation + roundoff


def _component_multiplier(E: TwinCurve) -> int:
    m = 1
    for ell in bad_primes(E):
        k = reduce_at(E, ell).component_order
        m = m * k // math.gcd(m, k)
    return m


def canonical_height(P: RationalPoint, tol: float = 1e-10, method: str = "local") -> HeightReport:
    """Canonical height of P.

    ``method="local"``: Q = mP lies in the identity component at every bad
    prime once m is the lcm of the component-group orders.  Then

        h(P) = (2 / m^2) * (lambda_inf(Q) + (1/2) log den x(Q))

    with lambda_inf from Tate's series.  ``method="doubling"``: the limit
    h(x(2^n P)) / 4^n (see :func:`doubling_height`).
    """
    if P.is_infinity:
        raise DomainError("height of the point at infinity is 0 by definition")
    if tol <= 0:
        raise DomainError("tol must be positive")
    naive = naive_height(P)
    # Nagell-Lutz on the integral model: non-integral points have infinite order
    if P.x.denominator == 1 and order(P) is not None:
        return HeightReport(naive, 0.0, tol, "torsion")
    if method == "doubling":
        return doubling_height(P, tol)
    if method != "local":
        raise DomainError(f"unknown height method {method!r}")
    E = P.curve
    m = _component_multiplier(E)
    Q = multiply(P, m)
    scale = 2.0 / (m * m)
    lam_inf, err = _tate_series(E, Q.x, tol / scale / 4)
    finite = 0.5 * math.log(Q.x.denominator)
    value = scale * (lam_inf + finite)
    return HeightReport(naive, value, scale * err, "local")


def _x_double(X: int, Z: int, b) -> tuple[int, int]:
    b2, b4, b6, b8 = b
    num = X**4 - b4 * X * X * Z * Z - 2 * b6 * X * Z**3 - b8 * Z**4
    den = Z * (4 * X**3 + b2 * X * X * Z + 2 * b4 * X * Z * Z + b6 * Z**3)
    return num, den


def doubling_height(P: RationalPoint, tol: float = 1e-4, max_steps: int = _DOUBLING_CAP) -> HeightReport:
    """Iterated exact x-doubling: h(x(2^n P)) / 4^n.

    With D the largest observed |h(2Q) - 4h(Q)| along the orbit, the
    remainder after n steps is bounded by D / (3 * 4^n).  D is measured, so
    the bound is empirical.  Raises :class:`HeightConvergenceError` with the
    partial estimate when the cap on steps or digits is hit first.
    """
    E = P.curve
    inv = invariants(E)
    b = (inv.b2, inv.b4, inv.b6, inv.b8)
    bad = bad_primes(E)
    X, Z = P.x.numerator, P.x.denominator
    h_prev = math.log(max(abs(X), Z))
    estimate, D, bound = h_prev, 0.0, math.inf
    for n in range(1, max_steps + 1):
        X, Z = _x_double(X, Z, b)
        if Z == 0:
            return HeightReport(naive_height(P), 0.0, tol, "doubling")
        if Z < 0:
            X, Z = -X, -Z
        # common factors of the doubled pair only involve 2 and bad primes
        for ell in bad:
            while X % ell == 0 and Z % ell == 0:
                X //= ell
                Z //= ell
        h = math.log(max(abs(X), Z))
        D = max(D, abs(h - 4 * h_prev))
        h_prev = h
        estimate = h / 4.0**n
        bound = D / (3 * 4.0**n) + 1e-15 * estimate
        if bound <= tol:
            return HeightReport(naive_height(P), estimate, bound, "doubling")
        if max(abs(X), Z).bit_length() > _DOUBLING_DIGIT_CAP * 3.33:
            break
    raise HeightConvergenceError(estimate, bound, "doubling did not reach tol")


def height_pairing(P: RationalPoint, Q: RationalPoint, tol: float = 1e-10) -> float:
    """<P, Q> = (h(P + Q) - h(P) - h(Q)) / 2."""
    if P.curve != Q.curve:
        raise DomainError("points lie on different curves")

    def h(R):
        return 0.0 if R.is_infinity else canonical_height(R, tol).canonical

    return (h(add(P, Q)) - h(P) - h(Q)) / 2


def height_gram(points, tol: float = 1e-10) -> np.ndarray:
    n = len(points)
    G = np.empty((n, n))
    for i in range(n):
        for k in range(i, n):
            G[i, k] = G[k, i] = height_pairing(points[i], points[k], tol)
    return G


def regulator(points, tol: float = 1e-10) -> float:
    return float(np.linalg.det(height_gram(points, tol)))
