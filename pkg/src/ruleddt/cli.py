"""Command-line front end.

Subcommands:

* ``table``    -- compute Betti/DT rows for one class family
* ``verify``   -- recompute every embedded golden table row and diff
* ``identity`` -- run the exact identity suite

Exit codes: 0 success, 1 verification or property failure, 2 usage or
configuration error.  Output is deterministic for a fixed invocation
regardless of the parallelism degree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .geometry import Polarization, RuledSurface
from .identity import identity_suite
from .omega import BettiAlarmError
from .tables import TABLE_LABELS, load_golden, omega_table, verify_rows


def parse_polarization(spec):
    spec = spec.strip().lower()
    if spec in ("boundary", "suitable", "anticanonical"):
        return Polarization(spec)
    if "," in spec:
        m_str, n_str = spec.split(",", 1)
        return Polarization.mixed(Fraction(m_str), Fraction(n_str))
    raise ValueError(f"unrecognized polarization {spec!r}")


def polarization_name(pol):
    if pol.kind == "mixed":
        return f"{pol.m},{pol.n}"
    return pol.kind


def report_rows(S, r, gamma1, pol, results, full=False):
    rows = []
    for c2 in sorted(results):
        res = results[c2]
        if full:
            betti = res.betti
            bprime = res.betti_prime
        else:
            betti = res.listed_betti()
            bprime = res.listed_betti_prime() if res.betti_prime is not None else None
        rows.append({
            "g": S.g, "d": S.d, "r": r,
            "beta": gamma1[0], "alpha": gamma1[1],
            "c2": str(c2) if Fraction(c2).denominator != 1 else int(c2),
            "polarization": polarization_name(pol),
            "dim": res.dim,
            "betti": betti,
            "betti_prime": bprime,
            "omega": res.omega,
            "status": "ok",
        })
    return rows


FIELDS = ["g", "d", "r", "beta", "alpha", "c2", "polarization", "dim",
          "betti", "betti_prime", "omega", "status"]


def emit_rows(rows, fmt, out):
    if fmt == "json":
        out.write(json.dumps({"rows": rows}, indent=2, sort_keys=True))
        out.write("\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for row in rows:
            writer.writerow([_cell(row[f]) for f in FIELDS])
        out.write(buf.getvalue())
        return
    if fmt == "markdown":
        out.write("| " + " | ".join(FIELDS) + " |\n")
        out.write("|" + "|".join("---" for _ in FIELDS) + "|\n")
        for row in rows:
            out.write("| " + " | ".join(str(_cell(row[f])) for f in FIELDS) + " |\n")
        return
    raise ValueError(f"unknown format {fmt!r}")


def _cell(value):
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    if value is None:
        return ""
    return value


def cmd_table(args, out=sys.stdout, err=sys.stderr):
    try:
        pol = parse_polarization(args.pol)
        S = RuledSurface(args.g, args.d)
        pol.validate_for(S)
        if pol.kind == "boundary":
            raise ValueError(
                "the boundary class carries no DT invariants; use 'suitable'")
        if args.r not in (1, 2, 3):
            raise ValueError("rank must be 1, 2 or 3")
        if args.tmax < 0:
            raise ValueError("tmax must be >= 0")
        results = omega_table(S, args.r, (args.beta, args.alpha), pol, args.tmax)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except ArithmeticError as exc:
        # alarms: non-polynomial invariant, broken duality, and kin
        print(f"alarm: {exc}", file=err)
        return 1
    rows = report_rows(S, args.r, (args.beta, args.alpha), pol, results,
                       full=args.full)
    emit_rows(rows, args.format, out)
    return 0


def cmd_verify(args, out=sys.stdout, err=sys.stderr):
    try:
        rows = load_golden(args.data)
    except FileNotFoundError:
        print(f"error: golden data file not found: {args.data}", file=err)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 2
    mismatches = verify_rows(rows, jobs=args.jobs)
    tables = sorted({row.table for row in rows})
    bad_tables = {mm.table for mm in mismatches}
    for t in tables:
        label = TABLE_LABELS.get(t, "?")
        nrows = sum(1 for row in rows if row.table == t)
        status = "FAIL" if t in bad_tables else "ok"
        out.write(f"table {t:2d} ({label}): {nrows} rows {status}\n")
    if mismatches:
        out.write(f"{len(mismatches)} mismatched cells:\n")
        for mm in mismatches:
            out.write(f"  {mm}\n")
        return 1
    out.write(f"all {len(rows)} golden rows reproduced exactly\n")
    return 0


def cmd_identity(args, out=sys.stdout, err=sys.stderr):
    results = identity_suite(K=args.tmax)
    failed = [(name, msg) for name, msg in results if msg is not None]
    for name, msg in results:
        out.write(f"{name}: {'ok' if msg is None else 'FAIL'}\n")
    if failed:
        name, msg = failed[0]
        err.write(f"first failing property: {name}: {msg}\n")
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ruleddt",
        description="Intersection-cohomology Betti numbers and DT invariants "
                    "of sheaf moduli on ruled surfaces (exact arithmetic).")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="compute rows for one class family")
    t.add_argument("--g", type=int, required=True, help="genus of the base curve")
    t.add_argument("--d", type=int, required=True, help="degree of the twisting bundle")
    t.add_argument("--r", type=int, required=True, help="rank (1, 2 or 3)")
    t.add_argument("--beta", type=int, default=0, help="section coefficient of c1")
    t.add_argument("--alpha", type=int, default=0, help="minus the fiber coefficient of c1")
    t.add_argument("--pol", required=True,
                   help="'suitable', 'anticanonical', or 'm,n'")
    t.add_argument("--tmax", type=int, required=True, help="truncation order K")
    t.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
    t.add_argument("--full", action="store_true",
                   help="emit duality-completed Betti lists instead of prefixes")
    t.add_argument("--jobs", type=int, default=1, help="parallelism degree")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="recompute the embedded golden tables")
    v.add_argument("--data", default=None, help="path overriding the embedded data")
    v.add_argument("--jobs", type=int, default=1, help="parallelism degree")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("identity", help="run the exact identity suite")
    i.add_argument("--tmax", type=int, default=5, help="truncation order K")
    i.set_defaults(func=cmd_identity)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
