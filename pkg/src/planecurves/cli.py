"""Command line entry point: ``planecurves <subcommand> ...``.

Exit codes: 0 success, 1 input or validation error, 2 resource limit,
3 internal consistency violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import EXIT_CONSISTENCY, EXIT_INPUT, PlaneCurveError
from .local import CharPairs, local_alexander, milnor_number, newton_to_linking
from .alexander import expand


def _parse_pairs(text):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            p, q = (int(v) for v in chunk.split(","))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad pair {chunk!r}; expected 'p,q'") from exc
        pairs.append((p, q))
    if not pairs:
        raise argparse.ArgumentTypeError("no pairs given")
    return pairs


def _load(args):
    from .invariants import CurveEquation
    from .report import load_curve_file

    cf, eq = load_curve_file(args.file)
    if args.budget is not None:
        eq = CurveEquation(eq.f, eq.irreducible, eq.components, budget=args.budget)
    return cf, eq


def cmd_analyze(args):
    from .report import analyze

    cf, eq = _load(args)
    rep = analyze(cf, eq, restrict_to_divisors=not args.no_divisor_restriction)
    print(rep.to_text())
    if args.json:
        text = rep.to_json() + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text)
    return 0


def cmd_freeness(args):
    from .invariants import (
        classify_freeness,
        minimal_syzygy_degree,
        nf_dims,
        total_tjurina,
    )

    _, eq = _load(args)
    tau = total_tjurina(eq)
    cls = classify_freeness(eq.d, tau, mdr=minimal_syzygy_degree(eq))
    print(f"degree {eq.d}  tau {tau}  {cls}")
    print(f"N(f) dims {nf_dims(eq)}")
    return 0


def cmd_local(args):
    cp = CharPairs.normalized(args.pairs)
    delta = local_alexander(cp)
    print(f"pairs        {list(cp.pairs)}")
    print(f"linking      {newton_to_linking(cp)}")
    print(f"mu           {milnor_number(cp)}")
    print(f"Alexander    {delta}")
    print(f"expanded     {expand(delta)}")
    return 0


def cmd_bound(args):
    from .report import analyze

    cf, eq = _load(args)
    ab = analyze(cf, eq).alexander_bound
    print(json.dumps(ab, indent=2, sort_keys=True))
    return 0


def cmd_verify(args):
    from .verify import verify_paper

    return verify_paper(only=args.only, fixtures=args.fixtures)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="planecurves",
        description="Jacobian-ideal and Alexander-polynomial invariants of plane curves.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def budget(p):
        p.add_argument(
            "--budget",
            type=int,
            metavar="STEPS",
            help="reduction-step limit for each Groebner computation (exit 2 when exceeded)",
        )

    p = sub.add_parser("analyze", help="full invariant report for a curve file")
    p.add_argument("file")
    p.add_argument("--json", metavar="OUT", help="also write the JSON report ('-' for stdout)")
    p.add_argument(
        "--no-divisor-restriction",
        action="store_true",
        help="keep cyclotomic indices that do not divide the degree in the bound",
    )
    budget(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("freeness", help="Tjurina number and free / nearly free class")
    p.add_argument("file")
    budget(p)
    p.set_defaults(func=cmd_freeness)

    p = sub.add_parser("local", help="invariants of a unibranch singularity from Newton pairs")
    p.add_argument("--pairs", required=True, type=_parse_pairs, help='e.g. "2,3;2,3"')
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("bound", help="divisibility bound for the Alexander polynomial")
    p.add_argument("file")
    budget(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify-paper", help="run the regression table of reference claims")
    p.add_argument("--only", metavar="SECTION", help="run one section only")
    p.add_argument("--fixtures", metavar="DIR", help="directory with curve fixtures")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except PlaneCurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, ArithmeticError) as exc:
        # plain ValueError from argument-level checks (bad pairs etc.)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT if isinstance(exc, ValueError) else EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
