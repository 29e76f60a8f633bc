"""Command-line front end.

Exit codes: 0 holds / pass, 1 fails, 2 usage or parse error, 3 undetermined.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import families, fforacle, habiro, verify
from .exactpoly import (
    LaurentPoly,
    PolyParseError,
    Q,
    RootOfUnity,
    eval_int,
    format_poly,
    format_terms,
    parse_poly,
    parse_terms,
    q_binomial,
    q_int,
)
from .families import FamilyKind
from .grothendieck import (
    GrothClass,
    Verdict,
    check_cell_certificate,
    check_counting_f1,
    check_dual_torification,
    check_eval_fzeta,
    check_interp_positivity,
    check_motivic_f1,
    check_partial_eval,
    dual_class,
    to_torus_basis,
)
from .tateroot import NoF1StructureError, is_integral, orbit_reduce, rescale, tate_root

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDETERMINED = 0, 1, 2, 3
VERDICT_EXIT = {Verdict.HOLDS: EXIT_OK, Verdict.FAILS: EXIT_FAIL,
                Verdict.UNDETERMINED: EXIT_UNDETERMINED}

CONDITIONS = ("motivic-f1", "counting-f1", "eval-fzeta", "partial-eval",
              "interp-positivity", "dual-torification", "cell-decomposition")


class UsageError(Exception):
    pass


def _emit(args, record, human=None):
    if args.json or human is None:
        print(json.dumps(record, indent=2, sort_keys=False))
    else:
        print(human)


def _poly(text):
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise UsageError(str(exc)) from None


def _class(text):
    """Polynomial text, allowing negative exponents for Laurent classes."""
    try:
        return GrothClass(LaurentPoly.from_terms(parse_terms(text)))
    except PolyParseError as exc:
        raise UsageError(str(exc)) from None


def _need(args, name):
    val = getattr(args, name, None)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required here")
    return val


# check

def cmd_check(args):
    poly = _poly(args.poly)
    cond = args.cond
    if cond == "motivic-f1":
        rep = check_motivic_f1(poly)
    elif cond == "counting-f1":
        rep = check_counting_f1(poly)
    elif cond == "eval-fzeta":
        rep = check_eval_fzeta(poly, _need(args, "n"))
    elif cond == "partial-eval":
        split = None
        if args.split:
            if "|" not in args.split:
                raise UsageError("--split takes 'b-part|P'")
            b, p = args.split.split("|", 1)
            split = (_poly(b), _poly(p))
        try:
            rep = check_partial_eval(poly, _need(args, "n"), split)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif cond == "interp-positivity":
        rep = check_interp_positivity(poly, args.n)
    elif cond == "dual-torification":
        rep = check_dual_torification(poly)
    else:
        cells = [int(x) for x in _need(args, "cells").split(",") if x.strip()]
        try:
            rep = check_cell_certificate(poly, cells, args.n or 1)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    out = rep.to_json()
    human = f"{rep.condition}: {rep.verdict.value}"
    if rep.witness:
        human += f" (witness {json.dumps(out['witness'])})"
    _emit(args, out, human)
    return VERDICT_EXIT[rep.verdict]


# habiro

def _root(args):
    try:
        return RootOfUnity(_need(args, "order"), args.numer)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_habiro(args):
    level = _need(args, "level")
    if level < 1:
        raise UsageError("--level must be >= 1")
    sub = args.op
    if sub == "invert-L":
        inv = habiro.make(level, habiro.lefschetz_inverse_sum(level))
        ok = (habiro.make(level, Q) * inv - 1).is_zero()
        _emit(args, {"op": sub, "element": inv.to_json(), "identity_verified": ok,
                     "cutoff": level - 1})
        return EXIT_OK if ok else EXIT_FAIL
    a = habiro.make(level, _poly(args.poly))
    try:
        if sub == "normal-form":
            nf = habiro.normal_form(a)
            record = {"element": a.to_json(), "normal_form": nf.to_json(args.convention_nf)}
        elif sub == "eval-n":
            record = {"element": a.to_json(), "n": _need(args, "n"),
                      "value": format_poly(habiro.ev_n(a, args.n))}
        elif sub == "eval-zeta":
            z = _root(args)
            record = {"element": a.to_json(), "order": z.order, "numer": z.numer,
                      "value": format_poly(habiro.ev_zeta(a, z).residue)}
        elif sub == "taylor":
            z = _root(args)
            coeffs = habiro.taylor_zeta(a, z, _need(args, "K"))
            record = {"element": a.to_json(), "order": z.order, "numer": z.numer,
                      "coefficients": [format_poly(c.residue) for c in coeffs],
                      "matches_eval_zeta": (not coeffs) or coeffs[0] == habiro.ev_zeta(a, z)}
        elif sub == "frobenius":
            record = {"element": a.to_json(), "n": _need(args, "n"),
                      "value": habiro.frobenius(a, args.n).to_json()}
        else:
            b_level = args.level2 or level
            b = habiro.make(b_level, _poly(_need(args, "poly2")))
            fn = habiro.habiro_add if sub == "add" else habiro.habiro_mul
            record = {"value": fn(a, b, project=args.project).to_json()}
    except (habiro.InsufficientLevel, habiro.LevelMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, {"op": sub, **record})
    return EXIT_OK


# class and tate

def cmd_class(args):
    c = _class(args.poly)
    record = {"class": format_terms(c.terms()), "human": str(c)}
    if c.value.is_polynomial():
        coeffs = to_torus_basis(c)
        record["torus_basis"] = {str(k): str(v) for k, v in coeffs.items()}
        record["euler_characteristic"] = str(coeffs.get(0, 0))
        record["dual"] = format_poly(dual_class(c).poly)
    if args.at is not None:
        record["count"] = str(c.count(args.at))
    _emit(args, record, f"{c}")
    return EXIT_OK


def cmd_tate(args):
    try:
        m = tate_root(_poly(args.poly), args.n)
    except NoF1StructureError as exc:
        _emit(args, {"error": str(exc), "witness": {k: str(v) for k, v in exc.witness.items()}})
        return EXIT_FAIL
    if args.rescale:
        try:
            m = rescale(m, Fraction(args.rescale))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(str(exc)) from None
    integral, witness = is_integral(m)
    record = {"value": m.to_json(), "human": str(m), "integral": integral}
    if witness is not None:
        record["witness_exponent"] = witness
    if args.orbit:
        record["orbit"] = orbit_reduce(m, args.orbit).to_json()
    _emit(args, record, str(m))
    return EXIT_OK


# family

def cmd_family(args):
    kind = FamilyKind(args.kind)
    if args.partial_sum is not None:
        p = families.partial_sum(kind, args.partial_sum)
        _emit(args, {"family": kind.value, "cutoff": args.partial_sum, "poly": format_poly(p)},
              str(p))
        return EXIT_OK
    rows = families.sign_table(kind, range(args.nmin, args.nmax + 1), args.convention,
                               args.cutoff_rule, args.threads)
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(families.SIGN_TABLE_CSV_HEADER)
        for r in rows:
            w.writerow(r.csv_fields())
    else:
        human = "\n".join(f"n={r.n:3d} value({r.eval_point})={r.sign} claimed={r.claimed} "
                          f"match={r.match}" for r in rows)
        _emit(args, [r.to_json() for r in rows], human)
    return EXIT_OK if all(r.match for r in rows) else EXIT_FAIL


# oracle

def cmd_oracle(args):
    try:
        if args.which == "gl":
            count = fforacle.count_gl(args.m, args.p)
            formula = families.gl_class(args.m).count(args.p)
            extra = {"m": args.m}
        elif args.which == "mateq":
            A = fforacle.parse_matrix(args.A)
            count = fforacle.count_matrix_equation(A, args.p)
            formula = (families.carlitz_class(len(A) // 2).count(args.p)
                       if len(A) % 2 == 0 and A == fforacle.symplectic_form(len(A) // 2) else None)
            extra = {"A": args.A}
        elif args.which == "grass":
            count = fforacle.count_grassmannian(args.n, args.j, args.p)
            formula = eval_int(q_binomial(args.n, args.j), args.p)
            extra = {"n": args.n, "j": args.j}
        else:
            count = fforacle.count_projective(args.n, args.p)
            formula = eval_int(q_int(args.n + 1), args.p)
            extra = {"n": args.n}
    except fforacle.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    record = {"oracle": args.which, "p": args.p, **extra, "count": str(count),
              "formula": None if formula is None else str(formula),
              "agrees": None if formula is None else count == formula}
    print(count)
    if args.json:
        print(json.dumps(record, sort_keys=False))
    return EXIT_OK if formula is None or count == formula else EXIT_FAIL


# verify

VERIFY_CHOICES = list(verify.TARGETS) + ["all"]


def cmd_verify(args):
    names = list(verify.TARGETS) if args.target == "all" else [args.target]
    manifest = verify.run_targets(names, args, sys.argv if args.argv is None else args.argv)
    out = manifest.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(out, fh, indent=2)
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        for r in manifest.results:
            tag = "PASS" if r.passed else ("INFO" if r.informational else "FAIL")
            print(f"{tag:4s} {r.name}")
        print(f"verdict: {out['verdict']}")
    return EXIT_OK if manifest.passed else EXIT_FAIL


def _global_flags(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--csv", action="store_true", default=d(False), help="CSV (sign tables only)")
    p.add_argument("--eval-point-convention", dest="convention", default=d("one-minus-n"),
                   choices=["one-minus-n", "minus-n"], help="evaluation point for sign tests")
    p.add_argument("--threads", type=int, default=d(1), help="worker threads for sweeps")


def build_parser():
    parser = argparse.ArgumentParser(prog="fzeta", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="structure-condition check")
    p.add_argument("--cond", required=True, choices=CONDITIONS)
    p.add_argument("--poly", required=True, help='e.g. "0:1;1:1;2:1" or "1,1,1"')
    p.add_argument("--n", type=int)
    p.add_argument("--split", help="explicit 'b-part|P' split for partial-eval")
    p.add_argument("--cells", help="comma-separated cell dimensions")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("habiro", parents=[common], help="truncated Habiro ring operations")
    p.add_argument("op", choices=["normal-form", "eval-n", "eval-zeta", "taylor", "frobenius",
                                  "invert-L", "add", "mul"])
    p.add_argument("--level", type=int)
    p.add_argument("--poly", default="1:1")
    p.add_argument("--poly2")
    p.add_argument("--level2", type=int)
    p.add_argument("--project", action="store_true", help="project mixed levels to the lower one")
    p.add_argument("--n", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--numer", type=int, default=1)
    p.add_argument("--K", type=int)
    p.add_argument("--nf-convention", dest="convention_nf", default="minus-one",
                   choices=["minus-one", "one-minus"])
    p.set_defaults(func=cmd_habiro)

    p = sub.add_parser("class", parents=[common], help="inspect a Grothendieck class")
    p.add_argument("--poly", required=True)
    p.add_argument("--at", type=int, help="also evaluate the count at this q")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("tate", parents=[common], help="Tate-root class of a positive class")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--orbit", type=int, help="reduce mod t^period - 1")
    p.add_argument("--rescale", help="positive rational r for L -> L^r")
    p.set_defaults(func=cmd_tate)

    p = sub.add_parser("family", parents=[common], help="sign tables of the example families")
    p.add_argument("kind", choices=[k.value for k in FamilyKind])
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--nmax", type=int, default=40)
    p.add_argument("--cutoff-rule", default="proof", choices=families.CUTOFF_RULES)
    p.add_argument("--partial-sum", type=int, help="print the partial sum up to this term")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("oracle", parents=[common], help="brute-force finite-field counts")
    osub = p.add_subparsers(dest="which", required=True)
    o = osub.add_parser("gl", parents=[common])
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--p", type=int, required=True)
    o = osub.add_parser("mateq", parents=[common])
    o.add_argument("--A", required=True, help='matrix "a,b;c,d"')
    o.add_argument("--p", type=int, required=True)
    o = osub.add_parser("grass", parents=[common])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--j", type=int, required=True)
    o.add_argument("--p", type=int, required=True)
    o = osub.add_parser("proj", parents=[common])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("target", choices=VERIFY_CHOICES)
    p.add_argument("--nmax", type=int, default=40)
    p.add_argument("--kmax", type=int, default=25)
    p.add_argument("--lmax", type=int, default=4)
    p.add_argument("--level-max", type=int, default=10)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--cutoff-rule", default="proof", choices=families.CUTOFF_RULES)
    p.add_argument("--output", help="also write the manifest to this file")
    p.set_defaults(func=cmd_verify, argv=None)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command == "verify" and args.argv is None:
        args.argv = ["fzeta", *(sys.argv[1:] if argv is None else argv)]
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
