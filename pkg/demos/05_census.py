"""Tabulating the family and checking the shipped tables."""

# %%
from twincurve import fixtures, scan

rep = scan.run_scan(7, 50_000, twin=True, mod8=[1])
print(len(rep.rows), "twin leaders p = 1 mod 8 up to 50000")
print(all(r.sign == 1 for r in rep.rows))

# %%
rep = scan.run_scan(5, 200, twin=True)
print(scan.to_csv(rep, meta=False))
print(scan.to_latex(rep))

# %%
# Odd-sign leaders up to 5000 against the printed list.
printed = {r["p"] for r in fixtures.load("odd_sign_table")["curves"]}
census = set(fixtures.odd_sign_census())
print(sorted(census - printed))

# %%
for c in fixtures.verify():
    if not c.ok:
        print(c.group, c.name, c.detail)
