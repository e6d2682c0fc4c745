"""Command-line front end: ``geompoly compute|verify|congruence|series``.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or domain
error, 3 internal error or term cap reached.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional, Sequence

from . import congruences, identities, series
from .bernoulli import bernoulli, pbernoulli_explicit
from .errors import GeomPolyError, TolNotReached
from .exactnum import as_rational, is_prime, primes_between, stirling1r, stirling2r
from .geomfamily import exp_poly, geom_poly, geom_two_var, rbell_poly
from .polyalg import UniPoly
from .report import CheckReport, serialize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

FAMILIES = (
    "stirling1r",
    "stirling2r",
    "geom",
    "geom-higher",
    "geom-two-var",
    "exp",
    "rbell",
    "bernoulli",
    "pbernoulli",
)
SERIES_OPS = ("dobinski", "power-binomial", "exp", "rbell")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _rational_list(text: str) -> list:
    return [_rational(t) for t in text.split(",") if t.strip()]


def parse_primes(text: str) -> list:
    """``a..b`` (all primes in the closed range) or a comma list of primes."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
            if lo == hi and not is_prime(lo):
                raise UsageError(f"{lo} is not prime")
            ps = primes_between(lo, hi)
            if not ps:
                raise UsageError(f"no primes in {text}")
            return ps
        ps = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad prime range {text!r}") from exc
    bad = [p for p in ps if not is_prime(p)]
    if bad or not ps:
        raise UsageError(f"not prime: {bad or text}")
    return ps


def manifest(argv: Sequence[str], grid: Optional[dict] = None, totals=None, status=None) -> dict:
    return {
        "command": list(argv),
        "catalog_version": identities.CATALOG_VERSION,
        "grid": {k: serialize(list(v)) for k, v in (grid or {}).items()},
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "totals": totals,
        "exit_status": status,
    }


def write_output(text: str, out: Optional[str]) -> None:
    if not out:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".geompoly-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def report_document(report: CheckReport, argv, grid=None) -> tuple:
    status = EXIT_OK if report.ok else EXIT_FAIL
    totals = report.totals
    doc = {
        "manifest": manifest(argv, grid, totals, status),
        "cases": [c.to_dict() for c in report.cases],
        "totals": totals,
    }
    return doc, status


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# --- compute -------------------------------------------------------------------


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for {args.family}")


def _poly_value(p: UniPoly, y):
    return p if y is None else p(y)


def _compute_one(args):
    fam = args.family
    if fam in ("stirling1r", "stirling2r"):
        _need(args, "n", "k")
        fn = stirling1r if fam == "stirling1r" else stirling2r
        return {"n": args.n, "k": args.k, "r": args.r or 0}, fn(args.n, args.k, args.r or 0)
    if fam in ("geom", "geom-higher"):
        _need(args, "n", *(("r",) if fam == "geom-higher" else ()))
        r = 1 if args.r is None else args.r
        return {"n": args.n, "r": r, "y": args.y}, _poly_value(geom_poly(args.n, r), args.y)
    if fam == "geom-two-var":
        _need(args, "n")
        r = 1 if args.r is None else args.r
        p = geom_two_var(args.n, r)
        if args.x is not None and args.y is not None:
            value = p(args.x, args.y)
        elif args.x is not None:
            value = p.at_x(args.x)
        else:
            value = p
        return {"n": args.n, "r": r, "x": args.x, "y": args.y}, value
    if fam == "exp":
        _need(args, "n")
        return {"n": args.n, "y": args.y}, _poly_value(exp_poly(args.n), args.y)
    if fam == "rbell":
        _need(args, "n")
        r = args.r or 0
        return {"n": args.n, "r": r, "y": args.y}, _poly_value(rbell_poly(args.n, r), args.y)
    if fam == "bernoulli":
        _need(args, "n")
        return {"n": args.n}, bernoulli(args.n)
    if fam == "pbernoulli":
        _need(args, "n", "p")
        return {"n": args.n, "p": args.p}, pbernoulli_explicit(args.n, args.p)
    raise UsageError(f"unknown family {fam}")


def _compute_table(args) -> str:
    fam = args.family
    _need(args, "n")
    N = args.n
    if fam in ("stirling1r", "stirling2r"):
        r = args.r or 0
        fn = stirling1r if fam == "stirling1r" else stirling2r
        header = ["n"] + [f"k={k}" for k in range(r, max(N, r) + 1)]
        rows = [[n] + [fn(n, k, r) for k in range(r, max(N, r) + 1)] for n in range(r, N + 1)]
        return _csv(header, rows)
    if fam in ("geom", "geom-higher", "exp", "rbell"):
        r = args.r if args.r is not None else (0 if fam == "rbell" else 1)
        make = {
            "geom": lambda n: geom_poly(n, r),
            "geom-higher": lambda n: geom_poly(n, r),
            "exp": exp_poly,
            "rbell": lambda n: rbell_poly(n, r),
        }[fam]
        if args.y is not None:
            return _csv(["n", "value"], [[n, make(n)(args.y)] for n in range(N + 1)])
        header = ["n"] + [f"y^{k}" for k in range(N + 1)]
        rows = [[n] + [make(n)[k] for k in range(N + 1)] for n in range(N + 1)]
        return _csv(header, rows)
    if fam == "bernoulli":
        return _csv(["n", "B_n"], [[n, bernoulli(n)] for n in range(N + 1)])
    if fam == "pbernoulli":
        _need(args, "p")
        header = ["n"] + [f"p={p}" for p in range(args.p + 1)]
        rows = [[n] + [pbernoulli_explicit(n, p) for p in range(args.p + 1)] for n in range(N + 1)]
        return _csv(header, rows)
    raise UsageError(f"--table is not available for {fam}")


def cmd_compute(args, argv) -> int:
    if args.table:
        write_output(_compute_table(args), args.out)
        return EXIT_OK
    params, value = _compute_one(args)
    params = {k: v for k, v in params.items() if v is not None}
    if args.json:
        case = {
            "id": args.family,
            "params": {k: serialize(v) for k, v in params.items()},
            "lhs": serialize(value),
            "rhs": None,
            "verdict": None,
            "note": None,
        }
        totals = {"total": 1}
        doc = {"manifest": manifest(argv, None, totals, EXIT_OK), "cases": [case], "totals": totals}
        write_output(_dump(doc), args.out)
    else:
        write_output(f"{value}\n", args.out)
    return EXIT_OK


# --- verify --------------------------------------------------------------------


def _identity_ids(args) -> list:
    if args.all:
        return identities.all_ids()
    ids = []
    for item in args.identity or []:
        ids.extend(t.strip() for t in item.split(",") if t.strip())
    if not ids:
        raise UsageError("give --identity ID (repeatable) or --all")
    unknown = [i for i in ids if i not in identities.CATALOG]
    if unknown:
        raise UsageError(f"unknown identity: {', '.join(unknown)}")
    return sorted(set(ids))


def _verify_grid(args) -> dict:
    grid = dict(identities.DEFAULT_GRID)
    if args.n_max is not None:
        grid["n"] = tuple(range(0, args.n_max + 1))
    if args.m_max is not None:
        grid["m"] = tuple(range(0, args.m_max + 1))
    if args.r_max is not None:
        grid["r"] = grid["r1"] = grid["r2"] = tuple(range(1, args.r_max + 1))
    if args.p_max is not None:
        grid["p"] = tuple(range(0, args.p_max + 1))
    if args.y is not None:
        grid["y"] = tuple(args.y)
    if args.x is not None:
        grid["x"] = tuple(args.x)
    return grid


def cmd_verify(args, argv) -> int:
    ids = _identity_ids(args)
    grid = _verify_grid(args)
    report = identities.run_suite(ids, grid)
    doc, status = report_document(report, argv, grid)
    write_output(_dump(doc), args.out)
    return status


# --- congruence ----------------------------------------------------------------


def cmd_congruence(args, argv) -> int:
    if args.check not in congruences.CHECKS:
        raise UsageError(f"unknown check {args.check}")
    primes = parse_primes(args.primes)
    report = congruences.sweep(
        args.check, primes, y_sample=args.y_sample, n_max=args.n_max, m_max=args.m_max
    )
    grid = {"primes": primes}
    doc, status = report_document(report, argv, grid)
    doc["denominator_divisible"] = [
        c.to_dict() for c in report.cases if c.verdict == "denominator_divisible"
    ]
    write_output(_dump(doc), args.out)
    return status


# --- series --------------------------------------------------------------------


def cmd_series(args, argv) -> int:
    op, tol = args.op, args.tol
    if tol <= 0:
        raise UsageError("--tol must be positive")
    out = {"op": op, "n": args.n, "r": args.r, "y": args.y, "tol": tol}
    if op == "rbell":
        r = 0 if args.r is None else args.r
        out["r"] = r
        chk = series.check_rbell_dobinski(args.n, r, args.y, tol)
        out.update(
            partial_sum=chk.series.partial_sum,
            tail_radius=chk.series.tail_radius,
            terms_used=chk.series.terms_used,
            closed_form_lower=chk.lhs_lower,
            closed_form_upper=chk.lhs_upper,
            containment="pass" if chk.passed else "fail",
        )
        passed = chk.passed
    else:
        r = 1 if args.r is None else args.r
        out["r"] = r
        if op == "dobinski":
            cv = series.sum_dobinski_geometric(args.n, r, args.y, tol)
            closed = series.dobinski_closed_form(args.n, r, args.y)
        elif op == "power-binomial":
            cv = series.sum_power_binomial(args.n, r, args.y, tol)
            closed = series.power_binomial_closed_form(args.n, r, args.y)
        else:
            cv = series.exp_certified(args.y, tol)
            closed = None
        passed = True if closed is None else cv.contains(closed)
        out.update(
            partial_sum=cv.partial_sum,
            tail_radius=cv.tail_radius,
            terms_used=cv.terms_used,
            closed_form=closed,
            containment="n/a" if closed is None else ("pass" if passed else "fail"),
        )
    if args.json:
        text = _dump({k: (v if isinstance(v, str) else serialize(v)) for k, v in out.items()})
    else:
        text = "".join(f"{k}: {'' if v is None else v}\n" for k, v in out.items())
    write_output(text, args.out)
    return EXIT_OK if passed else EXIT_FAIL


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geompoly",
        description="Exact geometric-polynomial computations and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print exact values of a family")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--x", type=_rational)
    c.add_argument("--y", type=_rational)
    c.add_argument("--table", action="store_true", help="CSV table for indices 0..n")
    c.add_argument("--json", action="store_true")
    c.add_argument("--out")

    v = sub.add_parser("verify", help="run the identity catalog")
    v.add_argument("--identity", action="append", help="catalog id (repeatable, comma list ok)")
    v.add_argument("--all", action="store_true")
    v.add_argument("--default-grid", action="store_true", help="use the built-in grid (default)")
    v.add_argument("--n-max", type=int)
    v.add_argument("--m-max", type=int)
    v.add_argument("--r-max", type=int)
    v.add_argument("--p-max", type=int)
    v.add_argument("--y", type=_rational_list, help="comma list of rationals")
    v.add_argument("--x", type=_rational_list, help="comma list of rationals")
    v.add_argument("--out")

    g = sub.add_parser("congruence", help="sweep a congruence over primes")
    g.add_argument("--check", required=True)
    g.add_argument("--primes", required=True, help="a..b or comma list")
    g.add_argument("--y-sample", type=int)
    g.add_argument("--n-max", type=int)
    g.add_argument("--m-max", type=int)
    g.add_argument("--out")

    s = sub.add_parser("series", help="certified series evaluation")
    s.add_argument("--op", required=True, choices=SERIES_OPS)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--r", type=int)
    s.add_argument("--y", type=_rational, required=True)
    s.add_argument("--tol", type=_rational, default=Fraction(1, 10**30))
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "congruence": cmd_congruence,
    "series": cmd_series,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, argv)
    except UsageError as exc:
        print(f"geompoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TolNotReached as exc:
        print(f"geompoly: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (GeomPolyError, ValueError) as exc:
        print(f"geompoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"geompoly: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
