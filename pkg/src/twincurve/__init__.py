"""Arithmetic of the curves E_p: y^2 = x(x - 2)(x - p) for twin primes (p - 2, p)."""

__version__ = "0.1.0"

from .curve import TwinCurve, bad_primes, invariants, make_curve, short_form
from .errors import DomainError, HeightConvergenceError, ResourceCapError, UnsupportedModelError
from .heights import canonical_height, height_pairing, regulator
from .lseries import L_at_1, Lprime_at_1, analytic_rank, a_p
from .mordell import beers_prediction, rank_bound
from .points import RationalPoint, point, search_points, torsion_subgroup
from .reduction import conductor, local_data, reduce_at
from .rootnumber import global_root_number

__all__ = [
    "TwinCurve", "make_curve", "invariants", "short_form", "bad_primes",
    "reduce_at", "local_data", "conductor", "global_root_number",
    "rank_bound", "beers_prediction", "RationalPoint", "point",
    "search_points", "torsion_subgroup", "canonical_height",
    "height_pairing", "regulator", "a_p", "L_at_1", "Lprime_at_1",
    "analytic_rank", "DomainError", "UnsupportedModelError",
    "ResourceCapError", "HeightConvergenceError",
]
