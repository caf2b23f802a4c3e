"""Exact rational points on E_p: group law, torsion, naive heights, search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .curve import TwinCurve, bad_primes, invariants
from .errors import DomainError
from .numth import primes_up_to


def on_curve(E: TwinCurve, x, y) -> bool:
    x, y = Fraction(x), Fraction(y)
    return y * y == E.rhs(x)


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@dataclass(frozen=True)
class RationalPoint:
    """A point of E(Q); ``x is None`` encodes the point at infinity."""

    curve: TwinCurve
    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if self.x is None:
            return
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if not on_curve(self.curve, self.x, self.y):
            raise DomainError(f"({self.x}, {self.y}) is not on {self.curve}")
        dx, dy = self.x.denominator, self.y.denominator
        e = math.isqrt(dx)
        if e * e != dx or dy != e**3:
            raise DomainError("denominators are not of the form (e^2, e^3)")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self):
        if self.is_infinity:
            return self
        return RationalPoint(self.curve, self.x, -self.y)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, -other)

    def __mul__(self, k: int):
        return multiply(self, k)

    __rmul__ = __mul__

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


def infinity(E: TwinCurve) -> RationalPoint:
    return RationalPoint(E)


def point(E: TwinCurve, x, y) -> RationalPoint:
    return RationalPoint(E, Fraction(x), Fraction(y))


def add(P: RationalPoint, Q: RationalPoint) -> RationalPoint:
    """Chord-tangent addition."""
    if P.curve != Q.curve:
        raise DomainError("points lie on different curves")
    E = P.curve
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return infinity(E)
        lam = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - E.a2 - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    # skip re-validation: the addition formulas preserve the equation
    R = object.__new__(RationalPoint)
    object.__setattr__(R, "curve", E)
    object.__setattr__(R, "x", x3)
    object.__setattr__(R, "y", y3)
    return R


def multiply(P: RationalPoint, k: int) -> RationalPoint:
    if k < 0:
        return multiply(-P, -k)
    result, addend = infinity(P.curve), P
    while k:
        if k & 1:
            result = add(result, addend)
        addend = add(addend, addend)
        k >>= 1
    return result


def two_torsion(E: TwinCurve) -> list[RationalPoint]:
    return [point(E, r, 0) for r in (0, 2, E.p)]


def naive_height(P: RationalPoint) -> float:
    """log max(|num x|, den x)."""
    if P.is_infinity:
        raise DomainError("the point at infinity has no naive height")
    return math.log(max(abs(P.x.numerator), P.x.denominator))


def order(P: RationalPoint, bound: int = 16) -> int | None:
    """Exact order of P if it is at most ``bound``, else None."""
    Q = P
    for k in range(1, bound + 1):
        if Q.is_infinity:
            return k
        Q = add(Q, P)
    return None


@dataclass(frozen=True)
class TorsionGroup:
    order: int
    structure: tuple[int, ...]
    points: tuple[RationalPoint, ...]
    count_gcd: int


def count_points_mod(E: TwinCurve, ell: int) -> int:
    """#E(F_ell) by enumerating x (odd ell of good reduction)."""
    xs = np.arange(ell, dtype=np.int64)
    f = ((xs * ((xs * ((xs + E.a2) % ell)) % ell + E.a4)) + E.a6) % ell
    sq = np.zeros(ell, dtype=np.int64)
    np.add.at(sq, xs * xs % ell, 1)
    return int(sq[f].sum()) + 1


def torsion_subgroup(E: TwinCurve, n_primes: int = 12) -> TorsionGroup:
    """Torsion of E(Q).

    The group order divides gcd #E(F_ell) over good odd ell; candidates are
    the integral points allowed by Nagell-Lutz (y = 0 or y^2 divides the
    cubic's discriminant), each tested for finite order.
    """
    bad = set(bad_primes(E))
    counts = []
    for ell in primes_up_to(2000).tolist():
        if ell in bad:
            continue
        counts.append(count_points_mod(E, ell))
        if len(counts) == n_primes:
            break
    g = reduce(math.gcd, counts)

    cubic_disc = abs(invariants(E).disc) // 16
    found = {infinity(E)}
    for yv in _divisors_whose_square_divides(cubic_disc) + [0]:
        for x in _integer_roots(E, yv * yv):
            for ys in {yv, -yv}:
                P = point(E, x, ys)
                k = order(P, g)
                if k is not None and g % k == 0:
                    found.add(P)
    pts = tuple(sorted(found, key=lambda P: (P.x is not None, P.x or 0, P.y or 0)))
    return TorsionGroup(len(pts), _structure(pts), pts, g)


def _divisors_whose_square_divides(n: int) -> list[int]:
    from .numth import factorize

    divs = [1]
    for ell, e in factorize(n).items():
        divs = [d * ell**k for d in divs for k in range(e // 2 + 1)]
    return sorted(divs)


def _integer_roots(E: TwinCurve, c: int) -> list[int]:
    """Integer roots of x^3 + a2 x^2 + a4 x + a6 - c."""
    const = E.a6 - c
    if const == 0:
        cands = {0}
        # remaining quadratic x^2 + a2 x + a4
        disc = E.a2 * E.a2 - 4 * E.a4
        if _is_square(disc):
            r = math.isqrt(disc)
            cands |= {(-E.a2 + r) // 2, (-E.a2 - r) // 2}
        return sorted(x for x in cands if E.rhs(x) == c)
    roots = np.roots([1, E.a2, E.a4, const])
    out = set()
    for r in roots:
        if abs(r.imag) < 1e-6 * max(1.0, abs(r)):
            for x in (math.floor(r.real), math.ceil(r.real)):
                if E.rhs(x) == c:
                    out.add(x)
    return sorted(out)


def _structure(pts) -> tuple[int, ...]:
    n = len(pts)
    exponent = reduce(lambda a, b: a * b // math.gcd(a, b), (order(P, n) for P in pts), 1)
    # a finite subgroup of E(Q) is Z/m x Z/n with m | n
    return (n,) if exponent == n else (n // exponent, exponent)


def search_points(E: TwinCurve, height_cap: float) -> list[RationalPoint]:
    """All affine points with naive height ``log max(|m|, e^2) <= height_cap``.

    Writes x = m / e^2 in lowest terms.  From gcd(m, e) = 1 and
    y^2 = x (x - 2)(x - p), the squarefree part of m divides 2p, and m >= 0
    because E(R) lies over x >= 0.  Results are sorted by naive height, then x.
    """
    if height_cap <= 0:
        raise DomainError("height_cap must be positive")
    bound = math.floor(math.exp(height_cap))
    p = E.p
    found: set[tuple[Fraction, Fraction]] = set()
    if 0 <= bound:
        found.add((Fraction(0), Fraction(0)))
    e_max = math.isqrt(bound)
    for e in range(1, e_max + 1):
        e2 = e * e
        for d in (1, 2, p, 2 * p):
            s_max = math.isqrt(bound // d)
            if s_max == 0:
                continue
            for m, n in _search_row(d, s_max, e, e2, p):
                x = Fraction(m, e2)
                y = Fraction(n, e2 * e)
                if x.denominator != e2:
                    continue
                found.add((x, y))
                found.add((x, -y))
    pts = [point(E, x, y) for x, y in found]
    pts.sort(key=lambda P: (naive_height(P), P.x, P.y))
    return pts


def _search_row(d, s_max, e, e2, p):
    s = np.arange(1, s_max + 1, dtype=object if _overflows(d * s_max**2, e2, p) else np.int64)
    m = d * s * s
    keep = np.gcd(m, e) == 1 if m.dtype != object else np.array([math.gcd(int(v), e) == 1 for v in m], dtype=bool)
    m = m[keep]
    if len(m) == 0:
        return []
    val = m * (m - 2 * e2) * (m - p * e2)
    out = []
    if val.dtype == object:
        for mv, v in zip(m.tolist(), val.tolist()):
            if _is_square(v):
                out.append((mv, math.isqrt(v)))
        return out
    nonneg = val >= 0
    m, val = m[nonneg], val[nonneg]
    r = np.floor(np.sqrt(val.astype(np.float64))).astype(np.int64)
    for shift in (-1, 0, 1):
        rr = r + shift
        hit = rr * rr == val
        for mv, n in zip(m[hit].tolist(), rr[hit].tolist()):
            if n >= 0:
                out.append((mv, n))
    return out


def _overflows(m_max, e2, p) -> bool:
    return m_max * (m_max + 2 * e2) * (m_max + p * e2) >= 2**62
