"""Central values of L(E_p, s)."""

# %%
import numpy as np

from twincurve.curve import make_curve
from twincurve.lseries import L_at_1, L_with_n_max, Lprime_at_1, a_n_table, analytic_rank, numerical_sign

E = make_curve(109)
a = a_n_table(E, 30)
print(a[1:])

# %%
# The functional equation alone recovers the sign.
print(numerical_sign(E, 2000), numerical_sign(make_curve(73), 2000))

# %%
print(Lprime_at_1(E, 1e-10))
print(L_at_1(E, 1e-10))          # sign -1: vanishes identically
print(L_at_1(make_curve(73), 1e-10))

# %%
# Partial sums against the rigorous remainder bound.
for n in (100, 200, 400, 800):
    print(n, L_with_n_max(make_curve(73), n))

# %%
for p in (73, 109, 4273):
    r = analytic_rank(make_curve(p))
    print(p, r.rank, r.sign, f"{r.value:.3e} +/- {r.err:.1e}")
