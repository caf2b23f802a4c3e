"""A first look at E_p: y^2 = x(x - 2)(x - p).

Run with ``python demos/01_invariants_and_reduction.py``.
"""

# %%
from twincurve.curve import bad_primes, invariants, make_curve, short_form
from twincurve.reduction import conductor, local_data, tangent_cone_split

E = make_curve(109)
print(E)
inv = invariants(E)
print("c4 =", inv.c4, " c6 =", inv.c6, " disc =", inv.disc)
print("j =", inv.j)

# %%
# The discriminant is 64 p^2 (p-2)^2, so only 2, p and p - 2 are bad.
print(bad_primes(E), inv.disc == 64 * 109**2 * 107**2)

# %%
# Type III at 2 with exponent 5, multiplicative elsewhere.
for rd in local_data(E):
    print(rd.prime, rd.kodaira, rd.split, rd.cond_exp)
print("N =", conductor(E))

# %%
# Split or not is decided by a Legendre symbol.  Brute force agrees.
for p in (13, 19, 43, 61, 73):
    F = make_curve(p)
    print(p, p % 8, tangent_cone_split(F, p), tangent_cone_split(F, p - 2))

# %%
# A short Weierstrass model is integral as soon as 3 | p + 2.
print(short_form(E))
