"""Command-line front end: batch checks, constructions, bounded searches,
and the random-element oracle.

Exit codes: 0 = pass/success, 1 = check failed, 2 = input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import PreconditionError, from_associative, \
    induce_pre_from_form, ALGEBRA_KINDS, PREALGEBRA_KINDS
from .bimodule import AfBimodule, PreBimodule, semidirect_pre
from .coboundary import RPair, SPECIAL_CASES, coboundary_bialgebra, \
    special_case_bialgebra
from .harness import FormatError, LinearMap, RElement, SearchSpec, \
    CHECK_COMMANDS, SEARCH_TARGETS, grid_search, load_file, \
    random_element_oracle, run_check, save_file, _emit
from .linalg import SingularMatrixError
from .matched import AfMatchedPair, PreMatchedPair, build_af_double, \
    build_pre_double
from .operators import OOperator, canonical_solution, induced_pre_from_map, \
    solution_from_o_operator

CONSTRUCT_WHATS = ("semidirect", "double", "coboundary", "canonical-r",
                   "from-o-operator", "from-form", "from-associative",
                   "from-rb")


def _matrix_input(obj):
    if isinstance(obj, RElement):
        return obj.r
    if isinstance(obj, LinearMap):
        return obj.matrix
    raise FormatError("expected an r-element or linear-map file")


def _cmd_check(args):
    inputs = [load_file(p) for p in args.files]
    report = run_check(args.command, inputs, kind=args.kind,
                       all_failures=args.all_witnesses)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        line = "%s: %s" % (report["command"], report["verdict"])
        if report["witness"] is not None:
            line += "  [%s at %s]" % (report["witness"]["identity"],
                                      tuple(report["witness"]["indices"]))
        print(line)
    return 0 if report["verdict"] == "pass" else 1


def _construct(args):
    what = args.what
    inputs = [load_file(p) for p in args.files]
    if what == "semidirect":
        (bm,) = inputs
        if not isinstance(bm, PreBimodule):
            raise FormatError("semidirect expects a bimodule file with "
                              "variant 'pre'")
        return semidirect_pre(bm), None
    if what == "double":
        (mp,) = inputs
        if isinstance(mp, AfMatchedPair):
            return build_af_double(mp), None
        if isinstance(mp, PreMatchedPair):
            return build_pre_double(mp), None
        raise FormatError("double expects a matched-pair file")
    if what == "coboundary":
        palg, relt = inputs
        if isinstance(relt, RPair):
            return coboundary_bialgebra(palg, relt), None
        if args.case is None:
            raise FormatError("a single-matrix r-element needs --case "
                              "(one of %s)" % (SPECIAL_CASES,))
        return special_case_bialgebra(palg, _matrix_input(relt),
                                      args.case), None
    if what == "canonical-r":
        (palg,) = inputs
        double, r = canonical_solution(palg)
        return RElement(double.dimension, r), double
    if what == "from-o-operator":
        bm, tmap = inputs
        if not isinstance(bm, AfBimodule):
            raise FormatError("from-o-operator expects a bimodule file with "
                              "variant 'anti-flexible'")
        double, r = solution_from_o_operator(OOperator(bm,
                                                       _matrix_input(tmap)))
        return RElement(double.dimension, r), double
    if what == "from-form":
        alg, omega = inputs
        return induce_pre_from_form(alg, _matrix_input(omega)), None
    if what == "from-associative":
        (alg,) = inputs
        return from_associative(alg, args.variant), None
    if what == "from-rb":
        alg, alpha = inputs
        return induced_pre_from_map(alg, _matrix_input(alpha)), None
    raise FormatError("unknown construction %r" % (what,))


def _cmd_construct(args):
    primary, secondary = _construct(args)
    save_file(args.output, primary)
    print("wrote %s" % args.output)
    if args.secondary:
        if secondary is None:
            raise FormatError("construction %r has no secondary output"
                              % (args.what,))
        save_file(args.secondary, secondary)
        print("wrote %s" % args.secondary)
    elif secondary is not None:
        print("(secondary object available; pass --secondary to save it)")
    return 0


def _cmd_search(args):
    subject = load_file(args.subject)
    from fractions import Fraction
    coeffs = tuple(Fraction(c) for c in args.coeffs.split(","))
    spec = SearchSpec(args.target, coeffs, args.bound, args.seed)
    found, report = grid_search(spec, subject)
    if args.output:
        dim = len(found[0]) if found else 0
        if args.target == "pafybe-symmetric":
            results = [_emit(RElement(dim, m)) for m in found]
        else:
            results = [_emit(LinearMap(len(m), len(m[0]), m)) for m in found]
        doc = {"report": report, "results": results}
        with open(args.output, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    print(json.dumps(report, indent=2))
    return 0


def _cmd_oracle(args):
    subject = load_file(args.subject)
    report = random_element_oracle(args.kind, subject, args.trials, args.seed)
    print(json.dumps(report, indent=2))
    return 0 if report["verdict"] == "pass" else 1


def build_parser():
    top = argparse.ArgumentParser(
        prog="antiflex",
        description="Exact checks and constructions for anti-flexible and "
                    "pre-anti-flexible algebras over the rationals.")
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="run an identity checker")
    p.add_argument("command", choices=CHECK_COMMANDS)
    p.add_argument("files", nargs="+")
    p.add_argument("--kind", default=None,
                   choices=ALGEBRA_KINDS + PREALGEBRA_KINDS,
                   help="identity family for algebra/pre-algebra checks")
    p.add_argument("--all-witnesses", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="build a derived object")
    p.add_argument("what", choices=CONSTRUCT_WHATS)
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--secondary", default=None,
                   help="where to save the companion object (e.g. the "
                        "double carrying a constructed r)")
    p.add_argument("--variant", default="succ-left",
                   help="half-product placement for from-associative")
    p.add_argument("--case", default=None, choices=SPECIAL_CASES,
                   help="special-case comultiplications for a single-matrix "
                        "r-element")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("search", help="bounded exhaustive grid search")
    p.add_argument("target", choices=SEARCH_TARGETS)
    p.add_argument("subject")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--coeffs", default="-1,0,1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("oracle", help="random-element agreement oracle")
    p.add_argument("kind", choices=ALGEBRA_KINDS + PREALGEBRA_KINDS)
    p.add_argument("subject")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_oracle)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, PreconditionError, SingularMatrixError,
            OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
