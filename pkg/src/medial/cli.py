"""Command-line front end: ``medial <subcommand> ...``."""

from __future__ import annotations

import argparse
import os
import sys

from . import brauer, equations, groups
from .decision import arrows_equal
from .errors import BudgetExceeded, MedialError
from .semantics import eval_perm
from .syntax import format_formula, parse_arrow

EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def default_budget():
    raw = os.environ.get("MEDIAL_BUDGET")
    return int(raw) if raw else groups.DEFAULT_BUDGET


def _type(args):
    f = parse_arrow(args.arrow)
    print(f"{format_formula(f.source)} -> {format_formula(f.target)}")
    return 0


def _perm(args):
    print(eval_perm(parse_arrow(args.arrow)).to_json())
    return 0


def _eq(args):
    same = arrows_equal(parse_arrow(args.lhs), parse_arrow(args.rhs))
    print("equal" if same else "not-equal")
    return 0 if same else EXIT_FALSE


def verify_label(label, letters=None):
    inst = equations.instantiate(label, equations.fresh_bindings(label, letters))
    return inst.well_typed() and arrows_equal(inst.lhs, inst.rhs)


def _verify(args):
    if args.label == "all":
        labels = equations.LABELS
    elif args.label in equations.CATALOG:
        labels = [args.label]
    else:
        print(f"unknown label {args.label!r}; known: {' '.join(equations.LABELS)}", file=sys.stderr)
        return EXIT_INPUT
    letters = args.letters.split(",") if args.letters else None
    ok = True
    for label in labels:
        passed = verify_label(label, letters)
        ok = ok and passed
        print(f"{label}: {'pass' if passed else 'FAIL'}")
    return 0 if ok else EXIT_FALSE


def _group(args):
    budget = args.budget if args.budget is not None else default_budget()
    report = groups.verify_direct_product(args.n, budget)
    print(groups.report_json(report))
    return 0 if groups.report_passed(report) else EXIT_FALSE


def _nseq(args):
    print(groups.format_nseq(args.n))
    return 0


def _brauer_yb(args):
    ok = True
    for name, passed in brauer.yang_baxter_suite():
        ok = ok and passed
        print(f"{name}: {'pass' if passed else 'FAIL'}")
    return 0 if ok else EXIT_FALSE


def build_parser():
    p = argparse.ArgumentParser(prog="medial", description="Arrow terms of the free medial category.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("type", help="print SOURCE -> TARGET of an arrow term")
    s.add_argument("arrow")
    s.set_defaults(run=_type)

    s = sub.add_parser("perm", help="print the permutation of an arrow term as JSON")
    s.add_argument("arrow")
    s.set_defaults(run=_perm)

    s = sub.add_parser("eq", help="decide equality of two arrow terms")
    s.add_argument("lhs")
    s.add_argument("rhs")
    s.set_defaults(run=_eq)

    s = sub.add_parser("verify", help="check catalog equations")
    s.add_argument("label", help="an equation label, or 'all'")
    s.add_argument("--letters", help="comma-separated letters for the metavariables")
    s.set_defaults(run=_verify)

    s = sub.add_parser("group", help="verify the direct-product structure at level n")
    s.add_argument("n", type=int)
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(run=_group)

    s = sub.add_parser("nseq", help="print the position labels of p^n")
    s.add_argument("n", type=int)
    s.set_defaults(run=_nseq)

    s = sub.add_parser("brauer-yb", help="check the lifted Yang-Baxter graphs")
    s.set_defaults(run=_brauer_yb)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (MedialError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
