"""Rational points, the group law and canonical heights."""

# %%
from twincurve.curve import make_curve
from twincurve.heights import canonical_height, doubling_height, height_gram
from twincurve.points import point, search_points, torsion_subgroup

E = make_curve(13)
print(torsion_subgroup(E).structure)
pts = search_points(E, 6.5)
for P in pts:
    print(P)

# %%
P = point(E, 650, 16380)
print(canonical_height(P))
print(doubling_height(P, tol=1e-5))

# %%
# Heights are quadratic: h(nP) = n^2 h(P)
for n in (1, 2, 3, 5):
    print(n, canonical_height(n * P).canonical / n**2)

# %%
E4273 = make_curve(4273)
P1 = point(E4273, "7921/4225", "-8695656/274625")
P2 = point(E4273, "16743024274002657408/26415925819311200929",
           "-8257916574244505457580022586480/135768417051805457107690354033")
G = height_gram([P1, P2])
print(G)
print("Gram determinant", G[0, 0] * G[1, 1] - G[0, 1] ** 2)
