"""Reduction types, split/non-split multiplicativity and the conductor."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .curve import TwinCurve, bad_primes, invariants
from .errors import DomainError, UnsupportedModelError
from .numth import is_prime, legendre, valuation


@dataclass(frozen=True)
class ReductionData:
    """Local data at one prime.

    ``kodaira`` is ``"I0"`` for good reduction, ``"I<n>"`` for
    multiplicative reduction and ``"III"`` for the additive type at 2.
    ``vals`` holds (v(disc), v(c4), v(c6)).
    """

    prime: int
    kodaira: str
    split: bool | None
    cond_exp: int
    vals: tuple[int, int, int]

    @property
    def is_good(self) -> bool:
        return self.kodaira == "I0"

    @property
    def is_multiplicative(self) -> bool:
        return self.split is not None

    @property
    def component_order(self) -> int:
        """Order of the component group of the Neron model special fibre."""
        if self.is_multiplicative:
            return self.vals[0]
        if self.kodaira == "III":
            return 2
        return 1


def _val_or_inf(n, ell):
    # c6 never vanishes for prime p, but keep the tuple total
    return valuation(n, ell) if n != 0 else 10**9


def reduce_at(E: TwinCurve, ell: int) -> ReductionData:
    if ell < 2 or not is_prime(ell):
        raise DomainError(f"{ell} is not prime")
    inv = invariants(E)
    vals = (
        _val_or_inf(inv.disc, ell),
        _val_or_inf(inv.c4, ell),
        _val_or_inf(inv.c6, ell),
    )
    if vals[0] == 0:
        return ReductionData(ell, "I0", None, 0, vals)
    if ell == 2:
        return _tate_at_two(E, vals)
    if vals[1] != 0:
        raise UnsupportedModelError(
            f"v_{ell}(c4) = {vals[1]} at an odd bad prime; the family guarantees 0"
        )
    if ell == E.p:
        split = legendre(-2, ell) == 1
    elif E.q % ell == 0:
        split = legendre(2, ell) == 1
    else:
        split = tangent_cone_split(E, ell)
    return ReductionData(ell, f"I{vals[0]}", split, 1, vals)


def _tate_at_two(E: TwinCurve, vals) -> ReductionData:
    inv = invariants(E)
    # Tate's algorithm at 2, first steps only; p odd always lands on III
    sing = [
        (x, y)
        for x in range(2)
        for y in range(2)
        if (y * y + E.a1 * x * y + E.a3 * y - E.rhs(x)) % 2 == 0
        and (E.a1 * y - (3 * x * x + 2 * E.a2 * x + E.a4)) % 2 == 0
        and (2 * y + E.a1 * x + E.a3) % 2 == 0
    ]
    if sing != [(0, 0)]:
        raise UnsupportedModelError("singular point mod 2 is not at the origin")
    if inv.b2 % 2 != 0:
        raise UnsupportedModelError("multiplicative reduction at 2 is not handled")
    if E.a3 % 2 or E.a4 % 2 or E.a6 % 2:
        raise UnsupportedModelError("mod-2 singular point not normalised")
    if E.a6 % 4 != 0:
        raise UnsupportedModelError("type II at 2 is not handled")
    if inv.b8 % 8 == 0:
        raise UnsupportedModelError("Tate's algorithm continues past type III")
    return ReductionData(2, "III", None, vals[0] - 1, vals)


def tangent_cone_split(E: TwinCurve, ell: int) -> bool:
    """Split test by direct computation over F_ell.

    Finds the node by exhaustive search, expands the cubic there and asks,
    again by enumeration, whether the quadratic part of the cone has a square
    root.  Deliberately avoids :func:`legendre`.
    """
    if ell == 2 or not is_prime(ell):
        raise DomainError("tangent_cone_split needs an odd prime")
    inv = invariants(E)
    if inv.disc % ell != 0:
        raise DomainError(f"E_{E.p} has good reduction at {ell}")
    if inv.c4 % ell == 0:
        raise DomainError(f"reduction at {ell} is not multiplicative")
    xs = np.arange(ell, dtype=np.int64)
    a2, a4 = E.a2 % ell, E.a4 % ell
    f = (xs * ((xs * ((xs + a2) % ell)) % ell + a4)) % ell
    df = (3 * xs * xs + 2 * a2 * xs + a4) % ell
    nodes = np.flatnonzero((f == 0) & (df == 0))
    if len(nodes) != 1:
        raise UnsupportedModelError(f"expected one node mod {ell}, found {len(nodes)}")
    x0 = int(nodes[0])
    # f(x0 + u) = (3 x0 + a2) u^2 + u^3; the cone is y^2 - (3 x0 + a2) u^2
    c = (3 * x0 + a2) % ell
    squares = np.unique(xs * xs % ell)
    return bool(c != 0 and np.isin(c, squares))


def local_data(E: TwinCurve) -> list[ReductionData]:
    """Reduction data at every bad prime, ascending."""
    return [reduce_at(E, ell) for ell in bad_primes(E)]


def conductor(E: TwinCurve) -> int:
    return prod(rd.prime**rd.cond_exp for rd in local_data(E))
