"""Command-line front end.

    parity-descents table --family R --n 8 [--closed-form] [--format text|json|csv]
    parity-descents verify --suite all [--max-n 9] [--format text|json] [--verbose]
    parity-descents genocchi --count 6 [--check]
    parity-descents bijection --name alpha --n 4 [--apply "1 4 3 2"]
    parity-descents pattern --perm "2 5 3 1 4" --pattern "1o2e" [--classical]

Exit status: 0 on success, 1 when a verification record fails, 2 on usage
errors (including malformed permutations and patterns).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijections as bij
from .closed_form import closed_form_poly
from .genocchi import genocchi_sequence
from .patterns import avoids_classical, count_consecutive_matches, format_pattern, parse_pattern
from .perms import InvalidInput, ResourceLimit, all_perms, format_perm, max_n, parse_perm
from .poly import BivariatePolynomial, family_poly
from .stats import Family
from .verify import SUITES, VerificationReport, run_all, run_identity_suite

BIJECTIONS = ("r-symmetry", "r-split", "p-complement", "alpha", "beta")


class UsageError(Exception):
    pass


# -- rendering ---------------------------------------------------------------------

def render_poly(family: Family, n: int, poly: BivariatePolynomial, fmt: str) -> str:
    if fmt == "text":
        return str(poly) + "\n"
    if fmt == "json":
        doc = {"family": family.name, "n": n,
               "coefficients": [{"z": z, "x": x, "value": str(v)} for (z, x), v in poly.items()]}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["z", "x", "value"])
    for (z, x), v in poly.items():
        w.writerow([z, x, v])
    return buf.getvalue()


def render_reports(reports: list[VerificationReport], fmt: str, verbose: bool) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    lines = []
    for r in reports:
        dev = len(r.deviations)
        extra = f", {dev} expected deviation{'s' if dev != 1 else ''}" if dev else ""
        lines.append(f"{r.suite}: {r.status.upper()} ({len(r.records)} checks{extra})")
        for rec in r.records:
            if verbose or rec.status != "pass":
                n = "" if rec.n is None else f" [n={rec.n}]"
                note = f"  # {rec.note}" if rec.note else ""
                lines.append(f"  {rec.status:18s} {rec.identity}{n}: {rec.left} vs {rec.right}{note}")
    overall = "FAIL" if any(r.status == "fail" for r in reports) else "PASS"
    lines.append(f"overall: {overall}")
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------------

def cmd_table(args, out) -> int:
    family = Family(args.family)
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    poly = closed_form_poly(family, args.n) if args.closed_form else family_poly(family, args.n)
    out.write(render_poly(family, args.n, poly, args.format))
    return 0


def cmd_verify(args, out) -> int:
    if args.suite == "all":
        reports = run_all(args.max_n)
    else:
        if args.suite not in SUITES:
            raise UsageError(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}")
        ns = range(1, args.max_n + 1) if args.max_n is not None else None
        reports = [run_identity_suite(args.suite, ns)]
    out.write(render_reports(reports, args.format, args.verbose))
    return 1 if any(r.status == "fail" for r in reports) else 0


def cmd_genocchi(args, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    out.write(" ".join(map(str, genocchi_sequence(args.count))) + "\n")
    if args.check:
        report = run_identity_suite("genocchi")
        out.write(render_reports([report], "text", False))
        return 1 if report.status == "fail" else 0
    return 0


def _bijection_fn(name: str):
    """(forward, line formatter) for one named bijection."""
    if name == "r-symmetry":
        return bij.bij_r_symmetry, lambda p, q: f"{format_perm(p)} -> {format_perm(q)}"
    if name == "r-split":
        return bij.bij_r_split, lambda p, q: f"{format_perm(p)} -> {q[0]} {format_perm(q[1])}"
    if name == "p-complement":
        return bij.bij_p_complement, lambda p, q: f"{format_perm(p)} -> {format_perm(q)}"
    table_of = bij.alpha if name == "alpha" else bij.beta
    return (lambda p: table_of(len(p))(p)), lambda p, q: f"{format_perm(p)} -> {format_perm(q)}"


def _bijection_domain(name: str, n: int):
    perms = all_perms(n)
    if name in ("r-symmetry", "r-split", "p-complement") and n % 2:
        raise UsageError(f"{name} is defined on permutations of even length")
    if name in ("alpha", "p-complement"):
        return [p for p in perms if p[0] & 1]
    if name == "beta":
        return [p for p in perms if not p[0] & 1]
    return list(perms)


def cmd_bijection(args, out) -> int:
    fwd, fmt = _bijection_fn(args.name)
    if args.apply is not None:
        p = parse_perm(args.apply)
        if args.n is not None and args.n != len(p):
            raise UsageError(f"--n {args.n} does not match the length of {args.apply!r}")
        out.write(fmt(p, fwd(p)) + "\n")
        return 0
    if args.n is None:
        raise UsageError("bijection needs --n or --apply")
    for p in _bijection_domain(args.name, args.n):
        out.write(fmt(p, fwd(p)) + "\n")
    return 0


def cmd_pattern(args, out) -> int:
    p = parse_perm(args.perm)
    pat = parse_pattern(args.pattern)
    out.write(f"consecutive matches of {format_pattern(pat)}: {count_consecutive_matches(p, pat)}\n")
    if args.classical:
        out.write(f"classically avoids {format_pattern(pat)}: {str(avoids_classical(p, pat)).lower()}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parity-descents",
        description="Distributions of parity-restricted descents over symmetric groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="coefficient table of R_n, P_n, Q_n or M_n")
    t.add_argument("--family", required=True, choices=[f.name for f in Family])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--closed-form", action="store_true", help="evaluate closed formulas instead of the recursion")
    t.add_argument("--format", choices=("text", "json", "csv"), default="text")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run identity suites")
    v.add_argument("--suite", required=True, help="suite id or 'all'")
    v.add_argument("--max-n", type=int, default=None,
                   help=f"largest n to check (exhaustive cap {max_n()}, see PARITY_DESCENTS_MAX_N)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--verbose", action="store_true", help="list passing records too")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("genocchi", help="Genocchi numbers from 2t/(e^t+1)")
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--check", action="store_true", help="also run the genocchi suite")
    g.set_defaults(func=cmd_genocchi)

    b = sub.add_parser("bijection", help="print or apply one of the bijections")
    b.add_argument("--name", required=True, choices=BIJECTIONS)
    b.add_argument("--n", type=int)
    b.add_argument("--apply", metavar="PERM")
    b.set_defaults(func=cmd_bijection)

    p = sub.add_parser("pattern", help="count consecutive parity-pattern matches")
    p.add_argument("--perm", required=True)
    p.add_argument("--pattern", required=True, help="e.g. '2e1*' or '2%%2:3 1%%1:3'")
    p.add_argument("--classical", action="store_true", help="also test classical avoidance")
    p.set_defaults(func=cmd_pattern)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (UsageError, InvalidInput, ResourceLimit) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
