"""Exact integer utilities: primality, twin primes, quadratic symbols, valuations."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError

# Deterministic for every n < 3.3 * 10**24, in particular for all n < 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_RANDOM_ROUNDS = 40
_TRIAL_LIMIT = 10**6


def _mr_witness(a, d, s, n):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def primality(n: int) -> tuple[bool, bool]:
    """Return ``(is_prime, proven)``.

    ``proven`` is False only for inputs above the deterministic Miller-Rabin
    range, where 40 seeded random rounds are used instead.
    """
    if n < 2:
        return False, True
    for q in _MR_BASES:
        if n == q:
            return True, True
        if n % q == 0:
            return False, True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        return not any(_mr_witness(a, d, s, n) for a in _MR_BASES), True
    rng = random.Random(n)
    for _ in range(_MR_RANDOM_ROUNDS):
        if _mr_witness(rng.randrange(2, n - 1), d, s, n):
            return False, True
    return True, False


def is_prime(n: int) -> bool:
    """True iff ``n`` is prime (unconditionally correct below 2**64)."""
    if n < 0:
        raise DomainError("is_prime expects a nonnegative integer")
    return primality(int(n))[0]


def prime_sieve(n: int) -> np.ndarray:
    """Boolean array ``s`` of length ``n + 1`` with ``s[k]`` true iff k is prime."""
    sieve = np.ones(max(n + 1, 2), dtype=bool)
    sieve[:2] = False
    for k in range(2, math.isqrt(n) + 1):
        if sieve[k]:
            sieve[k * k :: k] = False
    return sieve[: n + 1]


def primes_up_to(n: int) -> np.ndarray:
    """All primes ``<= n`` as an int64 array."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    return np.flatnonzero(prime_sieve(n)).astype(np.int64)


@lru_cache(maxsize=1)
def _small_primes():
    return [int(q) for q in primes_up_to(_TRIAL_LIMIT)]


@dataclass(frozen=True, order=True)
class TwinPair:
    """A twin prime pair (p, p - 2) indexed by its larger member."""

    p: int

    def __post_init__(self):
        if self.p < 5 or not (is_prime(self.p) and is_prime(self.p - 2)):
            raise DomainError(f"{self.p} does not lead a twin prime pair")

    @property
    def q(self) -> int:
        return self.p - 2


def twin_pairs(lo: int, hi: int) -> list[TwinPair]:
    """All twin pairs whose leader p satisfies ``lo <= p <= hi``, ascending."""
    if lo < 5:
        raise DomainError("twin_pairs requires lo >= 5")
    if hi < lo:
        return []
    sieve = prime_sieve(hi)
    leaders = np.flatnonzero(sieve[2:] & sieve[:-2]) + 2
    leaders = leaders[leaders >= lo]
    # object.__new__ skips the per-pair primality re-check; the sieve is exact
    out = []
    for p in leaders.tolist():
        pair = object.__new__(TwinPair)
        object.__setattr__(pair, "p", p)
        out.append(pair)
    return out


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, by quadratic reciprocity."""
    if n <= 0 or n % 2 == 0:
        raise DomainError("jacobi requires an odd positive modulus")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, ell: int) -> int:
    """Legendre symbol (a/ell) for an odd prime ell."""
    if ell < 3 or not is_prime(ell):
        raise DomainError(f"legendre requires an odd prime modulus, got {ell}")
    return jacobi(a, ell)


def valuation(n, ell: int) -> int:
    """The ell-adic valuation of a nonzero integer or rational."""
    if ell < 2 or not is_prime(ell):
        raise DomainError(f"valuation requires a prime, got {ell}")
    n = Fraction(n)
    if n == 0:
        raise DomainError("valuation of 0 is undefined")
    return _int_valuation(n.numerator, ell) - _int_valuation(n.denominator, ell)


def _int_valuation(m: int, ell: int) -> int:
    m = abs(m)
    v = 0
    if ell == 2:
        return (m & -m).bit_length() - 1
    # square the divisor to strip large powers quickly
    while m % ell == 0:
        power, k = ell, 1
        while m % (power * power) == 0:
            power *= power
            k *= 2
        m //= power
        v += k
    return v


def _pollard_brent(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``."""
    n = abs(int(n))
    if n == 0:
        raise DomainError("cannot factor 0")
    factors: dict[int, int] = {}
    for q in _small_primes():
        if q * q > n:
            break
        if n % q == 0:
            e = _int_valuation(n, q)
            factors[q] = e
            n //= q**e
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            d = _pollard_brent(m)
            stack.extend((d, m // d))
    return dict(sorted(factors.items()))


def nu(n: int) -> int:
    """Number of distinct prime divisors of a nonzero integer."""
    if n == 0:
        raise DomainError("nu(0) is undefined")
    return len(factorize(n))


def divisor_counts(n: int) -> np.ndarray:
    """Array ``d`` with ``d[k]`` the number of divisors of k for ``1 <= k <= n``."""
    d = np.zeros(n + 1, dtype=np.int64)
    for k in range(1, n + 1):
        d[k::k] += 1
    return d
