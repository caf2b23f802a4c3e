"""Local and global root numbers across the twin family."""

# %%
import collections

import numpy as np

from twincurve.curve import make_curve
from twincurve.numth import twin_pairs
from twincurve.rootnumber import closed_form_sign, global_root_number

rn = global_root_number(make_curve(109))
print(rn.w_inf, rn.w_2, rn.w_p, rn.w_q, "->", rn.w_global, "T mod 16 =", rn.t_mod16)

# %%
# The global sign only depends on p mod 8.
tally = collections.Counter()
for t in twin_pairs(7, 100_000):
    w = global_root_number(make_curve(t.p)).w_global
    assert w == closed_form_sign(t.p)
    tally[t.p % 8, w] += 1
for key in sorted(tally):
    print(key, tally[key])

# %%
# Drop the twin condition and the rule breaks: p = 11, 53, 59, 67, 83 all get +1.
for p in (11, 53, 59, 67, 83):
    print(p, p % 8, global_root_number(make_curve(p)).w_global, closed_form_sign(p))

# %%
ps = np.array([t.p for t in twin_pairs(7, 10**6)])
print(len(ps), "twin leaders below 10^6;", np.bincount(ps % 8)[[1, 3, 5, 7]])
