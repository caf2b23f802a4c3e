"""Mordell-Weil rank bounds and predictions for twin-prime curves."""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve import TwinCurve
from .errors import DomainError
from .numth import nu
from .rootnumber import global_root_number


@dataclass(frozen=True)
class RankPrediction:
    upper_bound: int
    parity: str
    beers: frozenset[int]
    sources: dict[str, str] = field(default_factory=dict)


def rank_bound(E: TwinCurve) -> int:
    """nu(A^2 - 4B) + nu(B) - 1 for y^2 = x^3 + A x^2 + B x."""
    A, B = E.a2, E.a4
    return nu(A * A - 4 * B) + nu(B) - 1


_BEERS = {
    7: frozenset({0}),
    3: frozenset({1}),
    5: frozenset({1}),
    1: frozenset({0, 2}),
}


def beers_prediction(E: TwinCurve) -> RankPrediction:
    """Corrected Beers prediction: 0, 1, 1 or {0, 2} by p mod 8 = 7, 3, 5, 1."""
    if not E.theorem_range:
        raise DomainError(f"p = {E.p} is not a twin leader >= 7")
    sign = global_root_number(E).w_global
    return RankPrediction(
        upper_bound=rank_bound(E),
        parity="odd" if sign == -1 else "even",
        beers=_BEERS[E.p % 8],
        sources={
            "upper_bound": "distinct prime divisors of A^2 - 4B and B",
            "parity": "global root number",
            "beers": "residue of p mod 8",
        },
    )
