"""Local and global root numbers of E_p.

The global sign is computed as a product of local signs and, for twin
leaders p >= 7, compared against the closed form
(-1)^((p-1)/2 + ((p-2)^2 - 1)/8).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve import TwinCurve, invariants
from .errors import DomainError, UnsupportedModelError
from .numth import valuation
from .reduction import local_data, reduce_at

# Only row of Halberstadt's 2-adic table reachable by this family:
# (v(disc), v(c4), v(c6)) = (6, 4, >= 7), type III, c4' = 3 mod 4.
_W2_PLUS_RESIDUES = frozenset({7, 11})


@dataclass(frozen=True)
class RootNumberReport:
    p: int
    w_inf: int
    w_2: int
    w_p: int
    w_q: int
    w_global: int
    t_mod16: int
    closed_form: int
    applicable_closed_form: bool
    local: dict[int, int] = field(default_factory=dict)


def w_infinity() -> int:
    return -1


def w_odd_multiplicative(E: TwinCurve, ell: int) -> int:
    """-1 for split multiplicative reduction at ell, +1 for non-split."""
    if ell == 2:
        raise DomainError("ell must be odd")
    rd = reduce_at(E, ell)
    if not rd.is_multiplicative:
        raise DomainError(f"reduction of E_{E.p} at {ell} is {rd.kodaira}")
    return -1 if rd.split else 1


def _odd_part(n: int) -> int:
    return n >> valuation(n, 2)


def t_of_p(E: TwinCurve) -> int:
    """T = c4' - 4 c6 / 2^7 reduced mod 16, where c4' is the odd part of c4."""
    inv = invariants(E)
    if inv.c6 % 32:
        raise UnsupportedModelError("c6 is not divisible by 2^5")
    return (_odd_part(inv.c4) - inv.c6 // 32) % 16


def w_two(E: TwinCurve) -> int:
    rd = reduce_at(E, 2)
    v_disc, v_c4, v_c6 = rd.vals
    if rd.kodaira != "III" or (v_disc, v_c4) != (6, 4) or v_c6 < 7:
        raise UnsupportedModelError(
            f"2-adic data {rd.kodaira} {rd.vals} is outside the tabulated case"
        )
    if _odd_part(invariants(E).c4) % 4 != 3:
        raise UnsupportedModelError("c4' is not 3 mod 4")
    return 1 if t_of_p(E) in _W2_PLUS_RESIDUES else -1


def closed_form_sign(p: int) -> int:
    exponent = (p - 1) // 2 + ((p - 2) ** 2 - 1) // 8
    return -1 if exponent % 2 else 1


def global_root_number(E: TwinCurve) -> RootNumberReport:
    """All local signs and their product.

    For non-twin p the odd part of p - 2 may hold several primes; ``w_q``
    is then the product of their local signs and ``local`` lists each one.
    """
    local = {}
    for rd in local_data(E):
        if rd.prime == 2:
            local[2] = w_two(E)
        elif rd.is_multiplicative:
            local[rd.prime] = -1 if rd.split else 1
        else:
            raise UnsupportedModelError(f"additive reduction at odd prime {rd.prime}")
    w_q = 1
    for ell, w in local.items():
        if ell not in (2, E.p):
            w_q *= w
    w_global = w_infinity()
    for w in local.values():
        w_global *= w
    return RootNumberReport(
        p=E.p,
        w_inf=w_infinity(),
        w_2=local[2],
        w_p=local[E.p],
        w_q=w_q,
        w_global=w_global,
        t_mod16=t_of_p(E),
        closed_form=closed_form_sign(E.p),
        applicable_closed_form=E.theorem_range,
        local=local,
    )


def predicted_analytic_parity(E: TwinCurve) -> str:
    """``"odd"`` when the sign is -1, else ``"even"`` (twin leaders >= 7 only)."""
    if not E.theorem_range:
        raise DomainError(f"p = {E.p} is not a twin leader >= 7")
    return "odd" if global_root_number(E).w_global == -1 else "even"
