import math

import mpmath
import numpy as np
import pytest

from twincurve.curve import make_curve
from twincurve.errors import DomainError, ResourceCapError
from twincurve.fixtures import load
from twincurve.lseries import (
    EVEN_GE2, ODD_UNDETECTED, L_at_1, L_with_n_max, Lprime_at_1, a_n_table, a_p,
    analytic_rank, ap_values, lseries_profile, numerical_sign,
)
from twincurve.numth import factorize, primes_up_to
from twincurve.points import count_points_mod
from twincurve.reduction import conductor

E73, E109 = make_curve(73), make_curve(109)


@pytest.mark.parametrize("p", [7, 13, 73, 109, 4273])
def test_character_sum_vs_point_count(p):
    E = make_curve(p)
    for ell in primes_up_to(500).tolist():
        if ell in (2, p, p - 2):
            continue
        assert a_p(E, ell) == ell + 1 - count_points_mod(E, ell)


@pytest.mark.parametrize("p", [13, 109])
def test_hasse_bound(p):
    E = make_curve(p)
    ells, a = ap_values(E, 20_000)
    good = (ells != 2) & (ells != p) & (ells != p - 2)
    assert np.all(a[good].astype(float) ** 2 <= 4 * ells[good])


def test_bad_prime_coefficients():
    assert a_p(E109, 2) == 0
    assert a_p(E109, 107) == -1 and a_p(E109, 109) == -1
    assert a_p(make_curve(73), 73) == 1 and a_p(make_curve(73), 71) == 1
    with pytest.raises(DomainError):
        a_p(E109, 9)


def test_a_n_multiplicative():
    a = a_n_table(E109, 3000)
    for n in range(2, 3001):
        f = factorize(n)
        want = 1
        for ell, k in f.items():
            want *= a[ell**k]
        assert a[n] == want
    for ell in (3, 5, 7, 11):
        assert a[ell * ell] == a[ell] ** 2 - ell
    assert a[4] == 0 and a[107**1] == -1


def test_L_prime_e109():
    ref = float(load("e109_short")["Lprime_at_1"])
    r = Lprime_at_1(E109, 1e-8)
    assert r.err <= 1e-8
    assert abs(r.value - ref) <= r.err


def test_L_prime_sum_against_mpmath_weights():
    n_max = 800
    N = conductor(E109)
    c = 2 * math.pi / math.sqrt(N)
    a = a_n_table(E109, n_max)
    want = 2 * sum(int(a[n]) / n * float(mpmath.e1(c * n)) for n in range(1, n_max + 1))
    got = L_with_n_max(E109, n_max, derivative=True).value
    assert got == pytest.approx(want, rel=1e-12)


def test_L_vanishes_for_sign_minus():
    r = L_at_1(E109, 1e-8)
    assert abs(r.value) <= r.err


def test_L_balance_independent():
    r1 = L_at_1(E73, 1e-8)
    r2 = L_at_1(E73, 1e-8, balance=1.3)
    assert abs(r1.value - r2.value) <= r1.err + r2.err
    assert r1.value == pytest.approx(1.48101455, abs=1e-6)


def test_error_bound_shrinks():
    errs = [L_with_n_max(E73, n).err for n in (200, 400, 800, 1600)]
    assert all(b < a for a, b in zip(errs, errs[1:]))
    exact = L_at_1(E73, 1e-12).value
    for n in (200, 400, 800):
        r = L_with_n_max(E73, n)
        assert abs(r.value - exact) <= r.err


@pytest.mark.parametrize("E,w", [(E73, 1), (E109, -1), (make_curve(13), -1)])
def test_numerical_sign(E, w):
    assert numerical_sign(E, 3000) == pytest.approx(w, abs=1e-6)


def test_analytic_rank_small():
    r0 = analytic_rank(E73)
    assert r0.rank == 0 and r0.sign == 1 and r0.zero_tol > r0.err
    r1 = analytic_rank(E109)
    assert r1.rank == 1 and r1.sign == -1


def test_zero_tol_must_exceed_error():
    with pytest.raises(DomainError):
        analytic_rank(E73, zero_tol=1e-6, target_err=1e-3)


def test_cap():
    with pytest.raises(ResourceCapError) as exc:
        L_at_1(make_curve(47713), 1e-8)
    assert exc.value.required > exc.value.cap
    with pytest.raises(ResourceCapError):
        L_at_1(E73, 1e-8, cap=100)


def test_domain_errors():
    with pytest.raises(DomainError):
        Lprime_at_1(E73)
    with pytest.raises(DomainError):
        L_at_1(E73, 0.0)


def test_profile():
    prof = lseries_profile(E109, 1e-6)
    assert prof.conductor == 373216 and prof.sign == -1
    assert len(prof.a) == prof.n_max + 1
    assert abs(prof.L1) <= prof.L1_err
    assert prof.Lp1 == pytest.approx(7.32477520386, abs=1e-6)
