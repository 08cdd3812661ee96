"""Command line reports.

    bngp monomial --r 1 --s 2 --partition 1,1 --theta 0
    bngp gp --r 1 --s 3 --mode both
    bngp slope --name GP_7_5
    bngp pullback --s 2 --gen lambda
    bngp pencil --surface F1 --system 3,5
    bngp table --which smallgenus --format csv
    bngp registry

Exit codes: 0 ok, 1 an internal cross-check failed, 2 bad input.
"""

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import bn_numbers, gp_pipeline, mg_divisors, mod_maps, pencils
from .ambient_ring import BNParams
from .exact_core import Partition
from .mg_divisors import Exact, LowerBound


class CheckFailed(Exception):
    pass


def fmt(x):
    if isinstance(x, Exact):
        x = x.value
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    if isinstance(x, LowerBound):
        return ">=" + fmt(x.value)
    return str(x)


def jsonable(x):
    if isinstance(x, Exact):
        x = x.value
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return {"num": x.numerator, "den": x.denominator}
    if isinstance(x, LowerBound):
        return {"lower_bound": jsonable(x.value)}
    if isinstance(x, mg_divisors.Unknown):
        return {"unknown": True}
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


def emit(rows, columns, form, out):
    """Write a list of dicts as text, csv or json."""
    if form == "json":
        out.write(json.dumps([{c: jsonable(r[c]) for c in columns} for r in rows],
                             sort_keys=False) + "\n")
    elif form == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([fmt(r[c]) for c in columns])
        out.write(buf.getvalue())
    else:
        for r in rows:
            out.write(" ".join("%s=%s" % (c, fmt(r[c])) for c in columns) + "\n")


def _params(r, s):
    try:
        return BNParams(r, s)
    except ValueError as e:
        raise SystemExit2(str(e))


class SystemExit2(Exception):
    pass


def _partition(text):
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(sorted((int(x) for x in text.split(",")), reverse=True))
    except ValueError as e:
        raise SystemExit2("bad partition %r: %s" % (text, e))


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise SystemExit2("expected comma separated integers, got %r" % text)


# -- subcommands -------------------------------------------------------------

def cmd_monomial(args, out):
    p = _params(args.r, args.s)
    lam = _partition(args.partition)
    try:
        if args.form == "det":
            val = bn_numbers.eval_schur_det(p, lam, args.theta)
        elif args.form == "product":
            val = bn_numbers.eval_schur_product(p, lam, args.theta)
        else:
            a = bn_numbers.eval_schur_det(p, lam, args.theta)
            b = bn_numbers.eval_schur_product(p, lam, args.theta)
            if a != b:
                raise CheckFailed("determinant %s != product %s" % (fmt(a), fmt(b)))
            val = a
    except ValueError as e:
        raise SystemExit2(str(e))
    if args.format == "text":
        out.write(fmt(val) + "\n")
    else:
        emit([dict(r=p.r, s=p.s, partition=",".join(map(str, lam)), theta=args.theta, value=val)],
             ["r", "s", "partition", "theta", "value"], args.format, out)


def _gp_row(r, s, mode):
    p = BNParams(r, s)
    cf = gp_pipeline.gp_closed_form(p)
    row = dict(r=r, s=s, g=p.gGP, a=cf.a, b0=cf.b0, b1=cf.b1,
               slope=mg_divisors.slope(cf.cls), relation=cf.a - 12 * cf.b0 + cf.b1)
    ok = row["slope"] == gp_pipeline.gp_slope(p) and row["relation"] == 0
    if mode in ("symbolic", "both"):
        sb1, sb0 = gp_pipeline.symbolic_b1(p), gp_pipeline.symbolic_b0(p)
        if mode == "symbolic":
            row.update(b0=sb0, b1=sb1, slope=cf.a / sb0, relation=cf.a - 12 * sb0 + sb1)
        ok = ok and sb1 == cf.b1 and sb0 == cf.b0
    row["check"] = "ok" if ok else "FAIL"
    return row


GP_COLUMNS = ["r", "s", "g", "a", "b0", "b1", "slope", "relation", "check"]


def cmd_gp(args, out):
    _params(args.r, args.s)
    if args.mode != "closed" and (args.r > 3 or args.s > 4) and not args.force:
        raise SystemExit2("symbolic mode is bounded to r <= 3, s <= 4; pass --force")
    row = _gp_row(args.r, args.s, args.mode)
    emit([row], GP_COLUMNS, args.format, out)
    if row["check"] != "ok":
        raise CheckFailed("gp cross-check failed at r=%d s=%d" % (args.r, args.s))


def _parse_class(text):
    # "g:a,b0,b1,..." with "?" for unknown and ">=x" for a lower bound
    try:
        g, rest = text.split(":")
        vals = [v.strip() for v in rest.split(",")]
        coefs = []
        for v in vals[1:]:
            if v == "?":
                coefs.append(mg_divisors.UNKNOWN)
            elif v.startswith(">="):
                coefs.append(LowerBound(Fraction(v[2:])))
            else:
                coefs.append(Fraction(v))
        return mg_divisors.MgDivisorClass(int(g), Fraction(vals[0]), coefs)
    except (ValueError, ZeroDivisionError) as e:
        raise SystemExit2("bad class %r: %s" % (text, e))


def cmd_slope(args, out):
    if (args.name is None) == (args.cls is None):
        raise SystemExit2("give exactly one of --name or --class")
    try:
        D = mg_divisors.registry(args.name) if args.name else _parse_class(args.cls)
        val = mg_divisors.slope(D, assume_delta0_minimal=args.assume_delta0_minimal)
    except (KeyError, ValueError) as e:
        raise SystemExit2(str(e).strip("'\""))
    emit([dict(g=D.g, slope=val)], ["g", "slope"], args.format, out)


def _coef_text(x):
    return fmt(x) if isinstance(x, (Exact, int, Fraction)) else "?"


def cmd_pullback(args, out):
    if args.s < 2:
        raise SystemExit2("need s >= 2")
    D = mod_maps.phi_pullback(args.s, args.gen)
    if args.format == "text":
        out.write(", ".join([fmt(D.lam)] + [_coef_text(x) for x in D.delta]) + "\n")
    else:
        row = dict(g=D.g, a=D.lam)
        cols = ["g", "a"]
        for j, x in enumerate(D.delta):
            row["b%d" % j] = x
            cols.append("b%d" % j)
        emit([row], cols, args.format, out)


def _surface(name, system):
    name = name.upper()
    vals = _ints(system)
    if name.startswith("F") and name[1:].isdigit():
        if len(vals) != 2:
            raise SystemExit2("Hirzebruch systems are a,b for a C_0 + b f")
        return pencils.hirzebruch(int(name[1:])), pencils.hirzebruch_system(*vals)
    if name == "P2":
        if not vals:
            raise SystemExit2("plane systems are n,m_1,m_2,...")
        return pencils.plane(len(vals) - 1), pencils.plane_system(vals[0], vals[1:])
    if name == "K3":
        if len(vals) != 1:
            raise SystemExit2("K3 systems are given by the genus")
        return pencils.k3(), pencils.k3_system(vals[0])
    raise SystemExit2("unknown surface %r (use F<e>, P2 or K3)" % name)


def cmd_pencil(args, out):
    try:
        if args.segre:
            g, k = _ints(args.segre)
            f = pencils.segre_family(g, k)
            row = dict(g=f.g, n=f.n, nodes=f.nodes, base_points=f.base_points,
                       F_lambda=f.dot_lambda, F_delta=f.dot_delta, ratio=f.ratio)
            cols = ["g", "n", "nodes", "base_points", "F_lambda", "F_delta", "ratio"]
        else:
            if not args.surface or args.system is None:
                raise SystemExit2("give --surface and --system, or --segre g,k")
            S, L = _surface(args.surface, args.system)
            f = pencils.family_numbers(S, L)
            row = dict(g=f.g, F_lambda=f.dot_lambda, F_delta=f.dot_delta)
            cols = ["g", "F_lambda", "F_delta"]
    except ValueError as e:
        raise SystemExit2(str(e))
    if args.format == "text":
        names = {"F_lambda": "F.lambda", "F_delta": "F.delta"}
        out.write(" ".join("%s=%s" % (names.get(c, c), fmt(row[c])) for c in cols) + "\n")
    else:
        emit([row], cols, args.format, out)


def _table_smallgenus(args, out):
    rows, bad = [], []
    for r in pencils.slope_table():
        ok = (r.s, r.lo, r.hi) == pencils.PRINTED_TABLE[r.g]
        if not ok:
            bad.append(r.g)
        rows.append(dict(g=r.g, s=r.s, s_prime_lo=r.lo, s_prime_hi=r.hi,
                         lo_open=str(r.lo_open).lower(), check="ok" if ok else "FAIL"))
    emit(rows, ["g", "s", "s_prime_lo", "s_prime_hi", "lo_open", "check"], args.format, out)
    return bad


def _table_monomial(args, out):
    rows, bad = [], []
    for r in range(1, args.rmax + 1):
        for s in range(2, args.smax + 1):
            for row in bn_numbers.monomial_table(BNParams(r, s)):
                if row["status"] == "mismatch":
                    bad.append((r, s, row["name"]))
                rows.append(dict(r=r, s=s, row=row["name"], direct=row["direct"],
                                 closed=row["closed"], printed=row["printed"], status=row["status"]))
    emit(rows, ["r", "s", "row", "direct", "closed", "printed", "status"], args.format, out)
    return bad


def _gp_scan_row(rs):
    return _gp_row(rs[0], rs[1], "closed")


def _table_gpscan(args, out):
    grid = [(r, s) for r in range(1, args.rmax + 1) for s in range(2, args.smax + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            rows = list(ex.map(_gp_scan_row, grid))
    else:
        rows = [_gp_scan_row(x) for x in grid]
    emit(rows, GP_COLUMNS, args.format, out)
    return [(r["r"], r["s"]) for r in rows if r["check"] != "ok"]


def cmd_table(args, out):
    which = {"smallgenus": _table_smallgenus, "monomial": _table_monomial,
             "gpscan": _table_gpscan}[args.which]
    bad = which(args, out)
    if bad:
        raise CheckFailed("%s table cross-check failed: %s" % (args.which, bad))


def cmd_registry(args, out):
    names = [args.name] if args.name else mg_divisors.registry_names()
    rows = []
    for n in names:
        try:
            D = mg_divisors.registry(n)
        except KeyError as e:
            raise SystemExit2(str(e).strip("'\""))
        rows.append(dict(name=n, g=D.g, a=D.lam,
                         b=" ".join(_coef_text(x) for x in D.delta), note=D.note))
    emit(rows, ["name", "g", "a", "b", "note"], args.format, out)


def build_parser():
    ap = argparse.ArgumentParser(prog="bngp", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
        return sp

    sp = add("monomial", "integral of a Schur class times a theta power over W^r_d")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--partition", default="", help="comma separated parts, e.g. 2,1")
    sp.add_argument("--theta", type=int, default=0)
    sp.add_argument("--form", choices=["det", "product", "both"], default="both")

    sp = add("gp", "coefficients and slope of the Gieseker-Petri divisor")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--mode", choices=["closed", "symbolic", "both"], default="closed")
    sp.add_argument("--force", action="store_true", help="allow symbolic mode past r=3, s=4")

    sp = add("slope", "slope of a named or given class")
    sp.add_argument("--name", help="registry name: " + ", ".join(mg_divisors.registry_names()))
    sp.add_argument("--class", dest="cls", help='"g:a,b0,b1,..." with ? or >=x allowed')
    sp.add_argument("--assume-delta0-minimal", action="store_true")

    sp = add("pullback", "pullback of a generator under W^1_{s+2}")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--gen", choices=list(mod_maps.GENERATORS), required=True)

    sp = add("pencil", "lambda and delta degrees of a Lefschetz pencil family")
    sp.add_argument("--surface", help="F<e>, P2 or K3")
    sp.add_argument("--system", help="F<e>: a,b   P2: n,m1,m2,...   K3: genus")
    sp.add_argument("--segre", help="g,k for the Segre model family")

    sp = add("table", "reproduce a table")
    sp.add_argument("--which", choices=["smallgenus", "monomial", "gpscan"], required=True)
    sp.add_argument("--rmax", type=int, default=5)
    sp.add_argument("--smax", type=int, default=6)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("registry", "list the named divisor classes")
    sp.add_argument("--name")
    return ap


COMMANDS = {
    "monomial": cmd_monomial, "gp": cmd_gp, "slope": cmd_slope, "pullback": cmd_pullback,
    "pencil": cmd_pencil, "table": cmd_table, "registry": cmd_registry,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        COMMANDS[args.cmd](args, out)
    except SystemExit2 as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except CheckFailed as e:
        sys.stderr.write("cross-check failed: %s\n" % e)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
