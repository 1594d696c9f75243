"""Command line entry point.

Exit codes: 0 success, 1 a checked property fails, 2 bad input, 3 resource cap hit.
Errors go to stderr as one line ``error[<kind>]: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import textio
from .groebner import (
    GinUnstableError,
    IdealGens,
    ResourceLimitError,
    buchberger,
    gin,
    initial_ideal,
)
from .monoideal import (
    MonomialIdeal,
    associated_primes,
    check_theorem,
    is_borel_fixed,
    primary_decomposition,
    saturated_chain_property,
)
from .poly import MonomialOrder, field_from_name

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

COMMANDS = ("gb", "initial", "borel", "decomp", "ass", "chains", "gin",
            "check-theorem", "verify-paper")


class InputError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", help="lex, grlex or grevlex (overrides the file header)")
    common.add_argument("--field", help="Q or Fp:<p> (overrides the file header)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-pairs", type=int, default=None,
                        help="cap on S-pairs reduced by Buchberger")
    common.add_argument("--max-degree", type=int, default=None,
                        help="cap on S-pair lcm degree")

    parser = argparse.ArgumentParser(
        prog="initideal",
        description="Initial ideals, associated primes and saturated chains.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help, path=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if path:
            p.add_argument("path", help="ideal file, or '-' for stdin")
        return p

    add("gb", "reduced Groebner basis")
    add("initial", "initial ideal (minimal monomial generators)")
    add("borel", "Borel-fixedness via elementary moves")
    p = add("decomp", "irreducible components grouped by radical")
    p.add_argument("--merge-primary", action="store_true",
                   help="intersect components with equal radical")
    add("ass", "associated primes")
    add("chains", "saturated chain property of the associated primes")
    for name, help in (("gin", "generic initial ideal"),
                       ("check-theorem", "hypotheses and conclusion of the dim-2 Borel theorem")):
        p = add(name, help)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=2)
    p.add_argument("--via-gin", action="store_true",
                   help="compute the generic initial ideal of a polynomial ideal first")
    add("verify-paper", "replay the grevlex counterexample checks", path=False)
    return parser


def _read(path: str) -> textio.IdealFile:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return textio.parse_ideal_file(text)
    except (textio.ParseError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _load(args):
    f = _read(args.path)
    try:
        order = MonomialOrder.from_name(args.order) if args.order else f.order
        fld = field_from_name(args.field) if args.field else f.field
        polys = f.polynomials(order, fld)
    except (textio.ParseError, ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None
    polys = [p for p in polys if p]
    if not polys:
        raise InputError("all generators are zero")
    return f, order, IdealGens(polys[0].ring, tuple(polys))


def _caps(args):
    return {"max_pairs": args.max_pairs, "max_degree": args.max_degree}


def _monomial_ideal(args, ideal: IdealGens, order) -> MonomialIdeal:
    """Monomial generators are taken as they are; otherwise the initial ideal."""
    if all(g.is_monomial() for g in ideal.gens):
        return MonomialIdeal(ideal.context, [g.lm for g in ideal.gens])
    return initial_ideal(buchberger(ideal, order, **_caps(args)))


def _proper(I: MonomialIdeal):
    if I.is_unit():
        raise InputError("the ideal is the unit ideal")


def _emit(args, text: str, obj=None):
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def run(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return _dispatch(args)
    except InputError as exc:
        print(f"error[input]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error[resource]: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except GinUnstableError as exc:
        print(f"error[unstable]: {exc}", file=sys.stderr)
        return EXIT_FAIL


def _dispatch(args) -> int:
    if args.command == "verify-paper":
        return _verify_paper(args)

    _, order, ideal = _load(args)
    cmd = args.command

    if cmd == "gb":
        G = buchberger(ideal, order, **_caps(args))
        _emit(args, textio.print_canonical(G), textio.groebner_to_json(G))
        return EXIT_OK

    if cmd == "gin":
        if args.trials < 2:
            raise InputError("--trials must be at least 2")
        I = gin(ideal, order, seed=args.seed, trials=args.trials, **_caps(args))
        _emit(args, str(I), textio.monomial_ideal_to_json(I))
        return EXIT_OK

    if cmd == "check-theorem" and args.via_gin:
        if args.trials < 2:
            raise InputError("--trials must be at least 2")
        I = gin(ideal, order, seed=args.seed, trials=args.trials, **_caps(args))
    else:
        I = _monomial_ideal(args, ideal, order)

    if cmd == "initial":
        _emit(args, str(I), textio.monomial_ideal_to_json(I))
        return EXIT_OK

    if cmd == "borel":
        res = is_borel_fixed(I)
        _emit(args, textio.format_borel(res, I.context), textio.borel_to_json(res, I.context))
        return EXIT_OK if res.borel_fixed else EXIT_FAIL

    _proper(I)
    if I.is_zero():
        raise InputError("the zero ideal has no associated primes")

    if cmd == "decomp":
        groups = primary_decomposition(I)
        if args.merge_primary:
            merged = primary_decomposition(I, merge=True)
            text = "\n".join(f"{P}: {Q}" for P, Q in merged)
            obj = textio.envelope("primary-decomposition", components=[
                {"radical": P.names(), "ideal": str(Q)} for P, Q in merged])
        else:
            text = "\n".join(f"{P}: " + " ∩ ".join(str(c) for c in cs)
                             for P, cs in groups)
            obj = textio.decomposition_to_json(groups, I.context)
        _emit(args, text, obj)
        return EXIT_OK

    if cmd == "ass":
        ass = associated_primes(I)
        _emit(args, textio.format_ass_report(ass), textio.ass_report_to_json(ass))
        return EXIT_OK

    if cmd == "chains":
        rep = saturated_chain_property(associated_primes(I))
        _emit(args, textio.format_chain_report(rep), textio.chain_report_to_json(rep))
        return EXIT_OK if rep.holds else EXIT_FAIL

    if cmd == "check-theorem":
        rep = check_theorem(I, order)
        _emit(args, textio.format_theorem_report(rep), textio.theorem_report_to_json(rep))
        return EXIT_OK if rep.status == "holds" else EXIT_FAIL

    raise InputError(f"unknown command {cmd!r}")


def _verify_paper(args) -> int:
    from .verify import verify_paper

    checks = verify_paper()
    passed = sum(c.passed for c in checks)
    if args.json:
        obj = textio.envelope(
            "verify-paper",
            passed=passed,
            total=len(checks),
            checks=[{"key": c.key, "name": c.name, "passed": c.passed, "detail": c.detail}
                    for c in checks])
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for c in checks:
            line = f"({c.key}) {'PASS' if c.passed else 'FAIL'}  {c.name}"
            if c.detail:
                line += f"  [{c.detail}]"
            print(line)
        print(f"{passed}/{len(checks)} PASS")
    return EXIT_OK if passed == len(checks) else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
