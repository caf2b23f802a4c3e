from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twincurve.errors import DomainError
from twincurve.numth import (
    TwinPair, divisor_counts, factorize, jacobi, legendre, nu, primality,
    is_prime, prime_sieve, primes_up_to, twin_pairs, valuation,
)


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def brute_legendre(a, ell):
    a %= ell
    if a == 0:
        return 0
    return 1 if any(x * x % ell == a for x in range(1, ell)) else -1


def test_is_prime_matches_trial_division():
    for n in range(0, 5000):
        assert is_prime(n) == trial_division(n), n


def test_large_primes_and_composites():
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * (2**61 - 1))
    # strong pseudoprime to bases 2..11
    assert not is_prime(3215031751)
    ok, proven = primality(2**89 - 1)
    assert ok and not proven
    assert primality(2**89 + 1) == (False, True)


def test_sieve():
    s = prime_sieve(100)
    assert [i for i in range(101) if s[i]] == primes_up_to(100).tolist()
    assert primes_up_to(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_twin_pairs_oracle():
    got = [t.p for t in twin_pairs(5, 3000)]
    want = [p for p in range(5, 3001) if trial_division(p) and trial_division(p - 2)]
    assert got == want
    assert [t.p for t in twin_pairs(7, 20)] == [7, 13, 19]
    assert twin_pairs(10, 9) == []
    with pytest.raises(DomainError):
        twin_pairs(3, 10)


def test_twin_pair_validates():
    assert TwinPair(13).q == 11
    with pytest.raises(DomainError):
        TwinPair(23)


def test_legendre_brute_force():
    for ell in primes_up_to(400).tolist()[1:]:
        for a in (-2, -1, 2, 3, 5, 7, ell - 1, ell + 2):
            assert legendre(a, ell) == brute_legendre(a, ell)


def test_legendre_rejects_composite():
    with pytest.raises(DomainError):
        legendre(2, 15)
    with pytest.raises(DomainError):
        legendre(1, 2)


@given(st.integers(-10**6, 10**6), st.integers(1, 5000).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative(a, n):
    m = 15
    assert jacobi(a, n * m) == jacobi(a, n) * jacobi(a, m)


def test_valuation():
    assert valuation(96, 2) == 5
    assert valuation(Fraction(9, 40), 2) == -3
    assert valuation(-75, 5) == 2
    with pytest.raises(DomainError):
        valuation(0, 3)


@settings(max_examples=60)
@given(st.integers(2, 10**15))
def test_factorize_roundtrip(n):
    f = factorize(n)
    prod = 1
    for q, e in f.items():
        assert is_prime(q)
        prod *= q**e
    assert prod == n
    assert nu(n) == len(f)


def test_factorize_semiprime():
    assert factorize(1000003 * 999983) == {999983: 1, 1000003: 1}


def test_divisor_counts():
    d = divisor_counts(200)
    for k in range(1, 201):
        assert d[k] == sum(1 for j in range(1, k + 1) if k % j == 0)
    # d(n) <= 2 sqrt(n), used by the L-series tail bound
    d = divisor_counts(20000)
    n = np.arange(1, 20001)
    assert np.all(d[1:] <= 2 * np.sqrt(n))
