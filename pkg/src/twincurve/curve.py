"""The curves y^2 = x(x - 2)(x - p) and their Weierstrass invariants.

Every quantity here is exact: integers or :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import DomainError, UnsupportedModelError
from .numth import factorize, is_prime, valuation


@dataclass(frozen=True)
class TwinCurve:
    """The model y^2 = x^3 - (p+2) x^2 + 2p x for an odd prime p >= 5.

    ``twin`` records whether p - 2 is prime.  Results that are only proved
    for twin leaders p >= 7 check :attr:`theorem_range`.
    """

    p: int
    twin: bool
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    @property
    def q(self) -> int:
        return self.p - 2

    @property
    def theorem_range(self) -> bool:
        return self.twin and self.p >= 7

    @property
    def small_p_warning(self) -> bool:
        """Set for p = 5, admitted for tabulation but below p >= 7."""
        return self.p < 7

    def rhs(self, x):
        """Right-hand side x^3 + a2 x^2 + a4 x + a6 (exact for int/Fraction x)."""
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def __str__(self):
        return f"E_{self.p}: y^2 = x^3 - {self.p + 2}x^2 + {2 * self.p}x"


def make_curve(p: int) -> TwinCurve:
    """Build E_p; raises :class:`DomainError` unless p is an odd prime >= 5."""
    if isinstance(p, bool) or int(p) != p:
        raise DomainError(f"p must be an integer, got {p!r}")
    p = int(p)
    if p < 5 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"p must be an odd prime >= 5, got {p}")
    return TwinCurve(
        p=p, twin=is_prime(p - 2), a1=0, a2=-(p + 2), a3=0, a4=2 * p, a6=0
    )


@dataclass(frozen=True)
class InvariantSet:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    disc: int
    j: Fraction


@lru_cache(maxsize=4096)
def invariants(E: TwinCurve) -> InvariantSet:
    """The standard b-, c-invariants, discriminant and j-invariant.

    Computed from the general Weierstrass formulas in the a-coefficients, so
    the closed forms in the family can be checked against them.
    """
    a1, a2, a3, a4, a6 = E.a1, E.a2, E.a3, E.a4, E.a6
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return InvariantSet(b2, b4, b6, b8, c4, c6, disc, Fraction(c4**3, disc))


class ShortForm(NamedTuple):
    """Coefficients of y^2 = x^3 + A x + B; Fractions when not integral."""

    A: int | Fraction
    B: int | Fraction

    @property
    def integral(self) -> bool:
        return Fraction(self.A).denominator == 1 and Fraction(self.B).denominator == 1

    @property
    def disc(self):
        return -16 * (4 * self.A**3 + 27 * self.B**2)


def short_form(E: TwinCurve) -> ShortForm:
    """Short model from the shift x -> x + (p+2)/3.

    Integral for every twin leader p > 5; otherwise the coefficients come
    back as Fractions and :attr:`ShortForm.integral` is False.
    """
    s = Fraction(E.p + 2, 3)
    A = 3 * s * s + 2 * E.a2 * s + E.a4
    B = s**3 + E.a2 * s * s + E.a4 * s + E.a6
    if A.denominator == 1 and B.denominator == 1:
        return ShortForm(int(A), int(B))
    return ShortForm(A, B)


def short_shift(E: TwinCurve) -> Fraction:
    """x_long = x_short + shift."""
    return Fraction(E.p + 2, 3)


def bad_primes(E: TwinCurve) -> list[int]:
    """Primes dividing the discriminant, ascending."""
    primes = {2, E.p} | set(factorize(E.q))
    disc = abs(invariants(E).disc)
    rebuilt = 1
    for ell in primes:
        rebuilt *= ell ** valuation(disc, ell)
    if rebuilt != disc:
        raise UnsupportedModelError("discriminant has unexpected prime factors")
    return sorted(primes)


def is_global_minimal(E: TwinCurve) -> bool:
    """Minimality at every bad prime.

    Uses the sufficient test v(disc) < 12 or v(c4) < 4.  For this family the
    second alternative only matters when a sixth power divides p - 2, since
    c4 is congruent to 64 modulo every odd prime dividing p - 2.
    """
    inv = invariants(E)
    for ell in bad_primes(E):
        if valuation(inv.disc, ell) < 12:
            continue
        if inv.c4 != 0 and valuation(inv.c4, ell) < 4:
            continue
        return False
    return True


def j_valuations(E: TwinCurve) -> tuple[int, int, int]:
    """Valuations of j at 2, p and p - 2 (requires p - 2 prime)."""
    if not E.twin:
        raise DomainError("j_valuations requires p - 2 to be prime")
    j = invariants(E).j
    return valuation(j, 2), valuation(j, E.p), valuation(j, E.q)


def distinct_j(p: int, q: int) -> bool:
    """True iff j(E_p) != j(E_q) for twin leaders p, q >= 7."""
    curves = []
    for r in (p, q):
        E = make_curve(r)
        if not E.theorem_range:
            raise DomainError(f"{r} is not a twin leader >= 7")
        curves.append(E)
    return invariants(curves[0]).j != invariants(curves[1]).j
