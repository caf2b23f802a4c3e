"""Range scans over the family and their CSV / JSON / LaTeX renderings."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .curve import make_curve
from .errors import ResourceCapError
from .lseries import DEFAULT_CAP, analytic_rank
from .mordell import beers_prediction, rank_bound
from .numth import is_prime, primes_up_to, twin_pairs
from .reduction import conductor
from .rootnumber import global_root_number

SCHEMA = 1

# CSV column order; elapsed_ms is dropped under --no-meta
COLUMNS = (
    "p", "twin", "p_mod8", "conductor", "sign", "t_mod16", "beers_set",
    "rank_bound", "analytic_rank", "L_value", "L_err", "error",
    "elapsed_ms",
)


@dataclass
class ScanRow:
    p: int
    twin: bool
    p_mod8: int
    conductor: int
    sign: int
    t_mod16: int
    beers_set: list[int] | None
    rank_bound: int
    analytic_rank: int | str | None = None
    L_values: dict | None = None
    error: str | None = None
    elapsed_ms: float = 0.0


@dataclass
class ScanReport:
    lo: int
    hi: int
    filters: dict
    rows: list[ScanRow] = field(default_factory=list)

    @property
    def primes(self) -> list[int]:
        return [r.p for r in self.rows]


def candidates(lo: int, hi: int, twin: bool = False, mod8=None) -> list[int]:
    if twin:
        ps = [t.p for t in twin_pairs(lo, hi)]
    else:
        ps = [p for p in primes_up_to(hi).tolist() if p >= max(lo, 5)]
    if mod8:
        keep = set(mod8)
        ps = [p for p in ps if p % 8 in keep]
    return ps


def scan_row(p: int, analytic: bool = False, tol: float = 1e-4, cap: int = DEFAULT_CAP) -> ScanRow:
    t0 = time.perf_counter()
    E = make_curve(p)
    rn = global_root_number(E)
    beers = sorted(beers_prediction(E).beers) if E.theorem_range else None
    row = ScanRow(
        p=p,
        twin=E.twin,
        p_mod8=p % 8,
        conductor=conductor(E),
        sign=rn.w_global,
        t_mod16=rn.t_mod16,
        beers_set=beers,
        rank_bound=rank_bound(E),
    )
    if analytic:
        try:
            ar = analytic_rank(E, target_err=tol, cap=cap)
        except ResourceCapError as exc:
            row.analytic_rank = "cap"
            row.error = str(exc)
        else:
            row.analytic_rank = ar.rank
            which = "L1" if ar.sign == 1 else "Lp1"
            row.L_values = {"which": which, "value": ar.value, "err": ar.err,
                            "zero_tol": ar.zero_tol}
    row.elapsed_ms = (time.perf_counter() - t0) * 1000
    return row


def _row_star(args):
    return scan_row(*args)


def run_scan(lo: int, hi: int, *, twin: bool = False, mod8=None, analytic: bool = False,
             tol: float = 1e-4, cap: int = DEFAULT_CAP, jobs: int = 1) -> ScanReport:
    ps = candidates(lo, hi, twin, mod8)
    work = [(p, analytic, tol, cap) for p in ps]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_star, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        rows = [_row_star(w) for w in work]
    rows.sort(key=lambda r: r.p)
    filters = {"twin": twin, "mod8": sorted(mod8) if mod8 else None,
               "analytic": analytic, "tol": tol, "cap": cap}
    return ScanReport(lo, hi, filters, rows)


def _flat(row: ScanRow, meta: bool) -> dict:
    lv = row.L_values or {}
    out = {
        "p": row.p,
        "twin": int(row.twin),
        "p_mod8": row.p_mod8,
        "conductor": row.conductor,
        "sign": row.sign,
        "t_mod16": row.t_mod16,
        "beers_set": "" if row.beers_set is None else "|".join(map(str, row.beers_set)),
        "rank_bound": row.rank_bound,
        "analytic_rank": "" if row.analytic_rank is None else row.analytic_rank,
        "L_value": repr(lv["value"]) if lv else "",
        "L_err": repr(lv["err"]) if lv else "",
        "error": row.error or "",
    }
    if meta:
        out["elapsed_ms"] = f"{row.elapsed_ms:.1f}"
    return out


def to_csv(report: ScanReport, meta: bool = True) -> str:
    cols = [c for c in COLUMNS if meta or c != "elapsed_ms"]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for row in report.rows:
        w.writerow(_flat(row, meta))
    return buf.getvalue()


def to_json(report: ScanReport, meta: bool = True, argv=None) -> str:
    rows = []
    for row in report.rows:
        d = asdict(row)
        if not meta:
            d.pop("elapsed_ms")
        rows.append(d)
    doc = {"schema": SCHEMA, "lo": report.lo, "hi": report.hi,
           "filters": report.filters, "count": len(rows), "rows": rows}
    if meta:
        from . import __version__

        doc["meta"] = {
            "generated": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
            "version": __version__,
            "argv": list(argv) if argv is not None else None,
            "elapsed_ms": round(sum(r.elapsed_ms for r in report.rows), 1),
        }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def to_latex(report: ScanReport) -> str:
    """A tabular with one line per curve: p, q, p mod 8, sign, predicted and analytic rank."""
    lines = [
        r"\begin{tabular}{rrrrrr}",
        r"\hline",
        r"$p$ & $q$ & $p \bmod 8$ & $w$ & predicted & analytic \\",
        r"\hline",
    ]
    for r in report.rows:
        beers = "--" if r.beers_set is None else r"\{" + ", ".join(map(str, r.beers_set)) + r"\}"
        ar = "--" if r.analytic_rank is None else str(r.analytic_rank).replace("_", r"\_")
        sign = "+1" if r.sign == 1 else "-1"
        q = r.p - 2 if is_prime(r.p - 2) else "--"
        lines.append(f"{r.p} & {q} & {r.p_mod8} & ${sign}$ & ${beers}$ & {ar} \\\\")
    lines += [r"\hline", r"\end{tabular}", ""]
    return "\n".join(lines)
