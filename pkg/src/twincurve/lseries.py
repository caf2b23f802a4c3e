"""Dirichlet coefficients of L(E_p, s) and central values with tail bounds.

With c = 2 pi / sqrt(N) and sign w, for any A > 0

    L(E, 1)  = sum a_n / n * (exp(-c A n) + w exp(-c n / A))
    L'(E, 1) = 2 sum a_n / n * E1(c n)            (w = -1)

The tail after n_max terms is bounded using |a_n| <= d(n) sqrt(n), with
d(n) counted exactly on (n_max, 2 n_max] and d(n) <= 2 sqrt(n) beyond.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import cache
from .curve import TwinCurve, bad_primes
from .errors import DomainError, ResourceCapError
from .numth import divisor_counts, is_prime, primes_up_to
from .reduction import conductor, reduce_at
from .rootnumber import global_root_number
from .special import exp1

DEFAULT_CAP = 500_000
# relative floating-point error allowed for the partial sums (and E1)
_ROUNDOFF = 64 * 2.0**-52 + 1e-13

RANK_ZERO = 0
RANK_ONE = 1
EVEN_GE2 = "even_ge2"
ODD_UNDETECTED = "odd_ge3_undetected"


class LValue(NamedTuple):
    value: float
    err: float
    n_max: int


@dataclass(frozen=True)
class AnalyticRank:
    rank: int | str
    sign: int
    value: float
    err: float
    zero_tol: float


@dataclass(frozen=True)
class LSeriesProfile:
    conductor: int
    sign: int
    n_max: int
    a: np.ndarray
    L1: float
    L1_err: float
    Lp1: float | None
    Lp1_err: float | None


def _bad_ap(E: TwinCurve) -> dict[int, int]:
    out = {}
    for ell in bad_primes(E):
        rd = reduce_at(E, ell)
        out[ell] = 0 if rd.split is None else (1 if rd.split else -1)
    return out


def _ap_good(a2: int, a4: int, ell: int, xs: np.ndarray) -> int:
    x = xs[:ell]
    f = x + (a2 % ell)
    f *= x
    f += a4 % ell
    f %= ell
    f *= x
    f %= ell
    chi = np.full(ell, -1, dtype=np.int8)
    chi[x * x % ell] = 1
    chi[0] = 0
    return -int(chi[f].sum(dtype=np.int64))


def a_p(E: TwinCurve, ell: int) -> int:
    """Trace of Frobenius at good ell; +1/-1 split/non-split; 0 additive."""
    if ell < 2 or not is_prime(ell):
        raise DomainError(f"{ell} is not prime")
    bad = _bad_ap(E)
    if ell in bad:
        return bad[ell]
    xs = np.arange(ell, dtype=np.int64)
    return _ap_good(E.a2, E.a4, ell, xs)


def ap_values(E: TwinCurve, ell_max: int) -> tuple[np.ndarray, np.ndarray]:
    """``(ells, a_ells)`` for every prime ell <= ell_max."""
    hit = cache.lookup(E.p, ell_max)
    if hit is not None:
        return hit
    ells = primes_up_to(ell_max)
    bad = _bad_ap(E)
    values = np.empty(len(ells), dtype=np.int64)
    xs = np.arange(max(ell_max, 2) + 1, dtype=np.int64)
    for i, ell in enumerate(ells.tolist()):
        values[i] = bad[ell] if ell in bad else _ap_good(E.a2, E.a4, ell, xs)
    cache.store(E.p, ell_max, ells, values)
    return ells, values


def a_n_table(E: TwinCurve, n_max: int) -> np.ndarray:
    """Array ``a`` of length n_max + 1 with ``a[n] = a_n`` (``a[0] = 0``)."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    ells, values = ap_values(E, n_max)
    bad = set(bad_primes(E))
    a = np.ones(n_max + 1, dtype=np.int64)
    a[0] = 0
    for ell, ap in zip(ells.tolist(), values.tolist()):
        # local factor a_{ell^k}, indexed by exact valuation
        powers = [1, ap]
        q = ell * ell
        while q <= n_max:
            if ell in bad:
                powers.append(ap * powers[-1])
            else:
                powers.append(ap * powers[-1] - ell * powers[-2])
            q *= ell
        factor = np.empty(n_max // ell + 1, dtype=np.int64)
        # factor[j] = a_{ell^v(j*ell)}; overwrite deeper multiples last
        q, k = ell, 1
        while q <= n_max:
            factor[q // ell :: q // ell] = powers[k]
            q *= ell
            k += 1
        a[ell::ell] *= factor[1:]
    return a


def _sign_and_conductor(E):
    return global_root_number(E).w_global, conductor(E)


def _crude_tail_L(K, c, A):
    return 2 * (math.exp(-c * A * K) / (c * A) + math.exp(-c * K / A) * A / c)


def _crude_tail_Lp(K, c):
    u = c * K
    return 4 * math.exp(-u) / (c * (u + 1))


def _choose_n_max(crude, target_err, cap):
    lo, hi = 1, 2
    while crude(hi) > target_err:
        hi *= 2
        if hi > 1 << 40:
            break
    while lo < hi:
        mid = (lo + hi) // 2
        if crude(mid) > target_err:
            lo = mid + 1
        else:
            hi = mid
    if lo > cap:
        raise ResourceCapError(lo, cap)
    return lo


def _refined_tail(K, weight, crude):
    n = np.arange(K + 1, 2 * K + 1, dtype=np.float64)
    d = divisor_counts(2 * K)[K + 1 :].astype(np.float64)
    return float(np.sum(d / np.sqrt(n) * weight(n))) + crude(2 * K)


def L_at_1(E: TwinCurve, target_err: float = 1e-6, *, balance: float | None = None,
           cap: int = DEFAULT_CAP) -> LValue:
    """L(E, 1) with a rigorous truncation bound.

    For sign -1 the symmetric split A = 1 cancels term by term, so the
    default there is A = 1.2.  The returned value is then a genuine
    numerical test that L(E, 1) vanishes.
    """
    if target_err <= 0:
        raise DomainError("target_err must be positive")
    w, N = _sign_and_conductor(E)
    A = balance if balance is not None else (1.0 if w == 1 else 1.2)
    c = 2 * math.pi / math.sqrt(N)

    def crude(K):
        return _crude_tail_L(K, c, A)

    def weight(n):
        return np.exp(-c * A * n) + np.exp(-c * n / A)

    n_max = _choose_n_max(crude, 0.5 * target_err, cap)
    return _L_sum(E, n_max, c, A, w, weight, crude)


def _L_sum(E, n_max, c, A, w, weight, crude, a=None):
    if a is None:
        a = a_n_table(E, n_max)
    n = np.arange(1, n_max + 1, dtype=np.float64)
    terms = a[1:] / n * (np.exp(-c * A * n) + w * np.exp(-c * n / A))
    value = float(np.sum(terms))
    s_abs = float(np.sum(np.abs(a[1:]) / n * weight(n)))
    err = _refined_tail(n_max, weight, crude) + _ROUNDOFF * s_abs
    return LValue(value, err, n_max)


def Lprime_at_1(E: TwinCurve, target_err: float = 1e-6, *, cap: int = DEFAULT_CAP) -> LValue:
    """L'(E, 1) for sign -1."""
    if target_err <= 0:
        raise DomainError("target_err must be positive")
    w, N = _sign_and_conductor(E)
    if w != -1:
        raise DomainError("L'(E, 1) series is only implemented for sign -1")
    c = 2 * math.pi / math.sqrt(N)

    def crude(K):
        return _crude_tail_Lp(K, c)

    def weight(n):
        return 2 * exp1(c * n)

    n_max = _choose_n_max(crude, 0.5 * target_err, cap)
    return _Lp_sum(E, n_max, c, weight, crude)


def _Lp_sum(E, n_max, c, weight, crude, a=None):
    if a is None:
        a = a_n_table(E, n_max)
    n = np.arange(1, n_max + 1, dtype=np.float64)
    g = weight(n)
    value = float(np.sum(a[1:] / n * g))
    s_abs = float(np.sum(np.abs(a[1:]) / n * g))
    err = _refined_tail(n_max, weight, crude) + _ROUNDOFF * s_abs
    return LValue(value, err, n_max)


def L_with_n_max(E: TwinCurve, n_max: int, *, derivative: bool = False,
                 balance: float | None = None) -> LValue:
    """Same sums as :func:`L_at_1` / :func:`Lprime_at_1` at a fixed length."""
    w, N = _sign_and_conductor(E)
    c = 2 * math.pi / math.sqrt(N)
    if derivative:
        if w != -1:
            raise DomainError("L'(E, 1) series is only implemented for sign -1")
        return _Lp_sum(E, n_max, c, lambda n: 2 * exp1(c * n),
                       lambda K: _crude_tail_Lp(K, c))
    A = balance if balance is not None else (1.0 if w == 1 else 1.2)
    return _L_sum(E, n_max, c, A, w,
                  lambda n: np.exp(-c * A * n) + np.exp(-c * n / A),
                  lambda K: _crude_tail_L(K, c, A))


def numerical_sign(E: TwinCurve, n_max: int, balance: float = 1.25) -> float:
    """Sign recovered from the functional equation alone.

    With F(A) = sum a_n / n exp(-c A n), the identity
    F(1) (1 + w) = F(A) + w F(1/A) gives w = (F(1) - F(A)) / (F(1/A) - F(1)).
    """
    N = conductor(E)
    c = 2 * math.pi / math.sqrt(N)
    a = a_n_table(E, n_max)
    n = np.arange(1, n_max + 1, dtype=np.float64)

    def F(A):
        return float(np.sum(a[1:] / n * np.exp(-c * A * n)))

    f1 = F(1.0)
    return (f1 - F(balance)) / (F(1.0 / balance) - f1)


def analytic_rank(E: TwinCurve, zero_tol: float | None = None, target_err: float = 1e-4,
                  *, cap: int = DEFAULT_CAP) -> AnalyticRank:
    """Classify ord_{s=1} L(E, s) as 0, 1, even >= 2, or odd >= 3 (flagged only)."""
    w = global_root_number(E).w_global
    res = L_at_1(E, target_err, cap=cap) if w == 1 else Lprime_at_1(E, target_err, cap=cap)
    tol = max(1e-3, 10 * res.err) if zero_tol is None else zero_tol
    if tol <= res.err:
        raise DomainError(f"zero_tol {tol} does not exceed the series error {res.err}")
    if w == 1:
        rank = RANK_ZERO if abs(res.value) > tol else EVEN_GE2
    else:
        rank = RANK_ONE if abs(res.value) > tol else ODD_UNDETECTED
    return AnalyticRank(rank, w, res.value, res.err, tol)


def lseries_profile(E: TwinCurve, target_err: float = 1e-6, *, cap: int = DEFAULT_CAP) -> LSeriesProfile:
    w, N = _sign_and_conductor(E)
    L1 = L_at_1(E, target_err, cap=cap)
    Lp1 = Lprime_at_1(E, target_err, cap=cap) if w == -1 else None
    n_max = max(L1.n_max, Lp1.n_max if Lp1 else 0)
    return LSeriesProfile(
        conductor=N,
        sign=w,
        n_max=n_max,
        a=a_n_table(E, n_max),
        L1=L1.value,
        L1_err=L1.err,
        Lp1=Lp1.value if Lp1 else None,
        Lp1_err=Lp1.err if Lp1 else None,
    )
