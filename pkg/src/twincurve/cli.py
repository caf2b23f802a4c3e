"""``twincurve`` command-line front end.

Exit codes: 0 ok, 1 fixture failure, 2 bad input, 3 I/O error, 4 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import fixtures, scan
from .curve import bad_primes, invariants, is_global_minimal, make_curve, short_form
from .errors import DomainError, ResourceCapError, UnsupportedModelError
from .lseries import DEFAULT_CAP, L_at_1, Lprime_at_1, analytic_rank
from .mordell import beers_prediction, rank_bound
from .points import naive_height, search_points, torsion_subgroup
from .reduction import conductor, local_data
from .rootnumber import global_root_number

EXIT_OK, EXIT_FIXTURE, EXIT_INPUT, EXIT_IO, EXIT_CAP = 0, 1, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _curve(p):
    try:
        return make_curve(p)
    except DomainError as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from None


def _mod8_list(text):
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad residue list {text!r}") from None
    if not vals or any(v not in (1, 3, 5, 7) for v in vals):
        raise argparse.ArgumentTypeError("residues must be among 1,3,5,7")
    return vals


def report_dict(p: int) -> dict:
    E = _curve(p)
    inv = invariants(E)
    A, B = short_form(E)
    rn = global_root_number(E)
    tors = torsion_subgroup(E)
    doc = {
        "schema": 1,
        "p": p,
        "q": E.q,
        "twin": E.twin,
        "model": [E.a1, E.a2, E.a3, E.a4, E.a6],
        "invariants": {
            "b2": inv.b2, "b4": inv.b4, "b6": inv.b6, "b8": inv.b8,
            "c4": inv.c4, "c6": inv.c6, "disc": inv.disc,
            "j": str(inv.j),
        },
        "short_form": [str(A), str(B)],
        "global_minimal": is_global_minimal(E),
        "bad_primes": bad_primes(E),
        "conductor": conductor(E),
        "reduction": [
            {"prime": rd.prime, "kodaira": rd.kodaira, "split": rd.split,
             "cond_exp": rd.cond_exp, "vals": list(rd.vals)}
            for rd in local_data(E)
        ],
        "root_number": {
            "w_inf": rn.w_inf, "w_2": rn.w_2, "w_p": rn.w_p, "w_q": rn.w_q,
            "global": rn.w_global, "t_mod16": rn.t_mod16,
            "closed_form": rn.closed_form if rn.applicable_closed_form else None,
            "local": {str(k): v for k, v in sorted(rn.local.items())},
        },
        "torsion": {"order": tors.order, "structure": list(tors.structure)},
        "rank_bound": rank_bound(E),
        "prediction": None,
        "warnings": [],
    }
    if E.theorem_range:
        pr = beers_prediction(E)
        doc["prediction"] = {"parity": pr.parity, "beers": sorted(pr.beers)}
    if E.small_p_warning:
        doc["warnings"].append("p < 7: the family-wide statements start at p = 7")
    if not E.twin:
        doc["warnings"].append(f"p - 2 = {E.q} is not prime")
    return doc


def _print_report(doc):
    inv = doc["invariants"]
    print(f"E_{doc['p']}: y^2 = x^3 + ({doc['model'][1]})x^2 + {doc['model'][3]}x"
          f"   (q = {doc['q']}, twin: {'yes' if doc['twin'] else 'no'})")
    for w in doc["warnings"]:
        print(f"warning: {w}")
    print(f"  b2 b4 b6 b8 = {inv['b2']} {inv['b4']} {inv['b6']} {inv['b8']}")
    print(f"  c4 = {inv['c4']}  c6 = {inv['c6']}  disc = {inv['disc']}")
    print(f"  j = {inv['j']}")
    A, B = doc["short_form"]
    print(f"  short form y^2 = x^3 + ({A})x + ({B})")
    print(f"  global minimal: {doc['global_minimal']}")
    print(f"  conductor = {doc['conductor']}")
    print("  reduction:")
    for rd in doc["reduction"]:
        kind = "additive" if rd["split"] is None else ("split" if rd["split"] else "non-split")
        print(f"    {rd['prime']:>8}  {rd['kodaira']:<5} {kind:<10} f = {rd['cond_exp']}  "
              f"v(disc, c4, c6) = {tuple(rd['vals'])}")
    rn = doc["root_number"]
    local = "  ".join(f"w_{k} = {v:+d}" for k, v in rn["local"].items())
    print(f"  root number: w_inf = {rn['w_inf']:+d}  {local}  ->  w = {rn['global']:+d}"
          f"  (T mod 16 = {rn['t_mod16']})")
    if rn["closed_form"] is not None:
        print(f"  closed form sign: {rn['closed_form']:+d}")
    t = doc["torsion"]
    print(f"  torsion: order {t['order']}, structure {tuple(t['structure'])}")
    print(f"  rank <= {doc['rank_bound']}")
    if doc["prediction"]:
        pr = doc["prediction"]
        print(f"  predicted parity {pr['parity']}, predicted rank in {set(pr['beers'])}")


def cmd_report(args):
    doc = report_dict(args.p)
    if args.json:
        print(json.dumps(doc, indent=1))
    else:
        _print_report(doc)
    return EXIT_OK


def _write(path, text):
    try:
        if path == "-":
            sys.stdout.write(text)
        else:
            Path(path).write_text(text)
    except OSError as exc:
        raise _Exit(EXIT_IO, f"cannot write {path}: {exc}") from None


def cmd_scan(args):
    if args.lo < 5 or args.hi < args.lo:
        raise _Exit(EXIT_INPUT, "need 5 <= LO <= HI")
    for path in (args.csv, args.latex, args.json):
        if path and path != "-":
            parent = Path(path).resolve().parent
            if not parent.is_dir():
                raise _Exit(EXIT_IO, f"cannot write {path}: no such directory")
    report = scan.run_scan(args.lo, args.hi, twin=args.twin, mod8=args.mod8,
                           analytic=args.analytic, tol=args.tol, cap=args.cap,
                           jobs=args.jobs)
    meta = not args.no_meta
    if args.csv:
        _write(args.csv, scan.to_csv(report, meta))
    if args.json:
        _write(args.json, scan.to_json(report, meta, argv=args.argv))
    if args.latex:
        _write(args.latex, scan.to_latex(report))
    if args.count:
        print(len(report.rows))
    elif not (args.csv or args.json or args.latex):
        _write("-", scan.to_csv(report, meta))
    return EXIT_OK


def cmd_verify(args):
    only = None
    if args.only:
        only = [g for item in args.only for g in item.split(",") if g]
        bad = [g for g in only if g not in fixtures.GROUPS]
        if bad:
            raise _Exit(EXIT_INPUT, f"unknown fixture group(s) {bad}; choose from {fixtures.GROUPS}")
    try:
        checks = fixtures.verify(only, args.fixture_dir)
    except (OSError, ValueError, KeyError) as exc:
        raise _Exit(EXIT_IO, f"cannot read fixtures: {exc}") from None
    totals = {}
    for c in checks:
        n_ok, n = totals.get(c.group, (0, 0))
        totals[c.group] = (n_ok + c.ok, n + 1)
        if not c.ok or args.verbose:
            line = f"{'PASS' if c.ok else 'FAIL'}  [{c.group}] {c.name}"
            print(line + (f": {c.detail}" if c.detail else ""))
    for g, (n_ok, n) in totals.items():
        print(f"{g}: {n_ok}/{n} passed")
    failed = sum(not c.ok for c in checks)
    print("all fixtures pass" if not failed else f"{failed} fixture check(s) failed")
    return EXIT_OK if not failed else EXIT_FIXTURE


def cmd_lvalue(args):
    E = _curve(args.p)
    if not args.target_err > 0:
        raise _Exit(EXIT_INPUT, "TARGET_ERR must be positive")
    try:
        if args.which == "L":
            r = L_at_1(E, args.target_err, cap=args.cap)
            print(f"L(E_{args.p}, 1) = {r.value:.12g} +/- {r.err:.3g}  (n_max = {r.n_max})")
        elif args.which == "Lprime":
            r = Lprime_at_1(E, args.target_err, cap=args.cap)
            print(f"L'(E_{args.p}, 1) = {r.value:.12g} +/- {r.err:.3g}  (n_max = {r.n_max})")
        else:
            ar = analytic_rank(E, target_err=args.target_err, cap=args.cap)
            what = "L" if ar.sign == 1 else "L'"
            print(f"analytic rank of E_{args.p}: {ar.rank}  (sign {ar.sign:+d}, "
                  f"{what}(1) = {ar.value:.12g} +/- {ar.err:.3g}, zero_tol = {ar.zero_tol:.3g})")
    except ResourceCapError as exc:
        raise _Exit(EXIT_CAP, f"{exc}; rerun with --cap {exc.required} or a looser TARGET_ERR") from None
    return EXIT_OK


def cmd_search(args):
    E = _curve(args.p)
    pts = search_points(E, args.height)
    for P in pts:
        print(f"({P.x}, {P.y})  h = {naive_height(P):.6f}")
    print(f"{len(pts)} point(s) with naive height <= {args.height}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twincurve", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("report", help="invariants, reduction and root numbers of one curve")
    r.add_argument("p", type=int)
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_report)

    s = sub.add_parser("scan", help="tabulate a range of curves")
    s.add_argument("lo", type=int)
    s.add_argument("hi", type=int)
    s.add_argument("--twin", action="store_true", help="twin leaders only")
    s.add_argument("--mod8", type=_mod8_list, help="comma-separated residues of p mod 8")
    s.add_argument("--count", action="store_true", help="print the number of rows only")
    s.add_argument("--analytic", action="store_true", help="also classify the analytic rank")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--tol", type=float, default=1e-4, help="target error of each L-value")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max series length")
    s.add_argument("--csv", metavar="PATH")
    s.add_argument("--json", metavar="PATH", nargs="?", const="-")
    s.add_argument("--latex", metavar="PATH")
    s.add_argument("--no-meta", action="store_true", help="omit timestamps and timings")
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify-fixtures", help="check the shipped data tables")
    v.add_argument("--only", action="append", metavar="GROUP",
                   help=f"subset of {', '.join(fixtures.GROUPS)} (repeatable or comma-separated)")
    v.add_argument("--fixture-dir", type=Path, help="read fixture JSON from this directory")
    v.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    v.set_defaults(func=cmd_verify)

    lv = sub.add_parser("lvalue", help="L(E, 1), L'(E, 1) or the analytic rank")
    lv.add_argument("p", type=int)
    lv.add_argument("which", choices=("L", "Lprime", "rank"))
    lv.add_argument("target_err", type=float)
    lv.add_argument("--cap", type=int, default=DEFAULT_CAP)
    lv.set_defaults(func=cmd_lvalue)

    sp = sub.add_parser("search-points", help="rational points of small naive height")
    sp.add_argument("p", type=int)
    sp.add_argument("--height", type=float, required=True)
    sp.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = sys.argv[1:] if argv is None else list(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"twincurve: {exc}", file=sys.stderr)
        return exc.code
    except (DomainError, UnsupportedModelError) as exc:
        print(f"twincurve: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
