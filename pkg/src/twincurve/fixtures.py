"""Published fixture data and the checks run by ``twincurve verify-fixtures``.

Fixture files are JSON, ``{"schema": 1, "curves": [{"p": ..., "points":
[{"x_num", "x_den", "y_num", "y_den"}, ...]}, ...]}``, with every integer
stored as a decimal string.  Rows are kept exactly as published, including
the ones the checks reject.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .curve import make_curve, short_form
from .numth import is_prime, twin_pairs
from .rootnumber import closed_form_sign, global_root_number, t_of_p, w_two

FILES = {
    "rank_two_primes": "rank_two_primes.json",
    "rank_two_generators": "rank_two_generators.json",
    "e4273_basis": "e4273_basis.json",
    "e109_short": "e109_short.json",
    "odd_sign_table": "odd_sign_table.json",
    "root_number_residues": "root_number_residues.json",
    "t_residues": "t_residues.json",
}

GROUPS = ("rank2", "points", "rootnumber", "residues", "census")


def load(name: str, directory: Path | None = None) -> dict:
    fname = FILES[name]
    if directory is not None:
        text = (Path(directory) / fname).read_text()
    else:
        text = resources.files("twincurve").joinpath("data", fname).read_text()
    return json.loads(text)


def point_pair(rec: dict) -> tuple[Fraction, Fraction]:
    return (
        Fraction(int(rec["x_num"]), int(rec["x_den"])),
        Fraction(int(rec["y_num"]), int(rec["y_den"])),
    )


def published_points(directory: Path | None = None):
    """Yield ``(source, p, x, y)`` for every point on a long model."""
    for name in ("rank_two_generators", "e4273_basis", "odd_sign_table"):
        for row in load(name, directory)["curves"]:
            for rec in row["points"]:
                x, y = point_pair(rec)
                yield name, row["p"], x, y


def implied_p(x: Fraction, y: Fraction) -> Fraction | None:
    """The p for which (x, y) lies on y^2 = x(x-2)(x-p), if defined."""
    if x == 0 or x == 2:
        return None
    return x - y * y / (x * (x - 2))


def odd_sign_census(lo: int = 5, hi: int = 5000) -> list[int]:
    return [t.p for t in twin_pairs(lo, hi) if t.p % 8 in (3, 5)]


@dataclass(frozen=True)
class Check:
    group: str
    name: str
    ok: bool
    detail: str = ""


def _check_rank2(directory):
    data = load("rank_two_primes", directory)
    out = []
    for row in data["curves"]:
        p = row["p"]
        problems = []
        if not (is_prime(p) and is_prime(p - 2)) or row["q"] != p - 2:
            problems.append("not a twin pair")
        if p % 8 != 1:
            problems.append(f"p = {p % 8} mod 8")
        elif global_root_number(make_curve(p)).w_global != 1:
            problems.append("sign is not +1")
        out.append(Check("rank2", f"p={p}", not problems, "; ".join(problems)))
    lo, hi = data["range"]
    count = sum(1 for t in twin_pairs(lo, hi) if t.p % 8 == 1)
    out.append(Check("rank2", "class count", count == data["class_count"],
                     f"counted {count}, fixture {data['class_count']}"))
    return out


def _check_points(directory):
    out = []
    for source, p, x, y in published_points(directory):
        E = make_curve(p)
        ok = y * y == E.rhs(x)
        detail = ""
        if not ok:
            q = implied_p(x, y)
            if q is not None and q.denominator == 1:
                detail = f"not on E_{p}; the point lies on E_{q}"
            else:
                detail = f"not on E_{p}"
        out.append(Check("points", f"{source} p={p} x={x}", ok, detail))
    short = load("e109_short", directory)
    A, B = short["short_form"]
    for row in short["curves"]:
        E = make_curve(row["p"])
        for rec in row["points"]:
            x, y = point_pair(rec)
            ok = (A, B) == tuple(short_form(E)) and y * y == x**3 + A * x + B
            out.append(Check("points", f"e109_short p={row['p']} x={x}", ok,
                             "" if ok else "not on the short model"))
    return out


def _first_twins_by_class(modulus, limit=20000, per_class=25):
    by = {}
    for t in twin_pairs(7, limit):
        by.setdefault(t.p % modulus, [])
        if len(by[t.p % modulus]) < per_class:
            by[t.p % modulus].append(t.p)
    return by


def _check_rootnumber(directory):
    out = []
    by = _first_twins_by_class(8)
    for row in load("root_number_residues", directory)["rows"]:
        r, sign = row["p_mod8"], row["sign"]
        bad = [p for p in by.get(r, [])
               if not (global_root_number(make_curve(p)).w_global == sign == closed_form_sign(p))]
        ok = bool(by.get(r)) and not bad
        out.append(Check("rootnumber", f"p = {r} mod 8 -> {sign:+d}", ok,
                         f"mismatch at {bad}" if bad else ""))
    return out


def _check_residues(directory):
    out = []
    for row in load("t_residues", directory)["rows"]:
        r = row["p_mod16"]
        # any odd prime works: the 2-adic computation does not need p - 2 prime
        primes = [p for p in range(5, 5000) if p % 16 == r and is_prime(p)][:10]
        bad = []
        for p in primes:
            E = make_curve(p)
            if t_of_p(E) != row["t_mod16"] or w_two(E) != row["w2"]:
                bad.append(p)
        out.append(Check("residues", f"p = {r} mod 16", not bad,
                         f"mismatch at {bad}" if bad else ""))
    return out


def _check_census(directory):
    printed = [row["p"] for row in load("odd_sign_table", directory)["curves"]]
    census = odd_sign_census()
    missing = sorted(set(census) - set(printed))
    extra = sorted(set(printed) - set(census))
    detail = ""
    if missing or extra:
        detail = f"table lacks {missing}; table has non-members {extra}"
    return [Check("census", "odd-sign primes 5..5000", not missing and not extra, detail)]


_RUNNERS = {
    "rank2": _check_rank2,
    "points": _check_points,
    "rootnumber": _check_rootnumber,
    "residues": _check_residues,
    "census": _check_census,
}


def verify(only=None, directory: Path | None = None) -> list[Check]:
    groups = GROUPS if not only else tuple(only)
    out = []
    for g in groups:
        out.extend(_RUNNERS[g](directory))
    return out
