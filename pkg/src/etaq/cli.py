"""Command-line entry point ``etaq``.

Exit codes: 0 when every check passes, 1 when violations are found, 2 for
usage or configuration errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify as V
from .hurwitz import hurwitz
from .qseries import EtaQuotientSpec, eta_coefficients

LEMMAS = {
    "b2": lambda b: V.verify_lemma_b2(b or V.DEFAULT_THEOREM_BOUND),
    "weight3-signs": lambda b: V.verify_eisenstein_sign_section5(b or 2000),
    "claim-cases": lambda b: V.verify_claim_cases(b or 1000),
    "level16": lambda b: V.verify_level16_lemma(b or V.DEFAULT_IDENTITY_BOUND),
    "r-counts": lambda b: V.verify_lemma_r_counts(b or V.DEFAULT_RCOUNT_BOUND),
    "classnum": lambda b: V.verify_classnum(b or V.DEFAULT_THEOREM_BOUND),
}


class UsageError(Exception):
    pass


def fmt(x) -> str:
    """Exact ``p/q`` or integer notation."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_weight(text: str) -> int:
    try:
        w = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad weight {text!r}") from None
    if (2 * w).denominator != 1 or w <= 0:
        raise UsageError("weight must be a positive integer or half-integer")
    return int(2 * w)


def _emit_reports(reports, as_json: bool) -> int:
    if as_json:
        out = [r.to_dict() for r in reports]
        print(json.dumps(out[0] if len(out) == 1 else out, indent=2))
    else:
        for r in reports:
            print(r.summary())
            for note in r.notes:
                print(f"    {note}")
    return 0 if all(r.passed for r in reports) else 1


def cmd_expand(args) -> int:
    try:
        spec = EtaQuotientSpec.parse(args.eta)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    coeffs = eta_coefficients(spec, args.terms - 1)
    if args.json:
        print(json.dumps({"eta": spec.label, "exponent24": spec.exponent24, "coefficients": list(coeffs)}))
    else:
        print(f"# {spec.label}: q^({spec.exponent24}/24) * sum C(n) q^n")
        for n, c in enumerate(coeffs):
            print(n, c)
    return 0


def cmd_verify(args) -> int:
    if bool(args.theorem) == bool(args.lemma):
        raise UsageError("give exactly one of --theorem or --lemma")
    if args.theorem:
        if args.theorem not in V.SIGN_THEOREMS:
            raise UsageError(f"unknown theorem {args.theorem!r}; choose from {', '.join(V.THEOREM_IDS)}")
        report = V.verify_theorem(args.theorem, args.bound or V.DEFAULT_THEOREM_BOUND)
    else:
        report = LEMMAS[args.lemma](args.bound)
    return _emit_reports([report], args.json)


def cmd_identity(args) -> int:
    if args.list or not args.name:
        for name, ident in V.IDENTITIES.items():
            print(f"{name:<22} {ident.description}")
        return 0
    if args.name not in V.IDENTITIES:
        raise UsageError(f"unknown identity {args.name!r}")
    return _emit_reports([V.verify_named_identity(args.name, args.bound)], args.json)


def cmd_hurwitz(args) -> int:
    values = {D: hurwitz(D) for D in args.D}
    if args.json:
        print(json.dumps({str(D): fmt(h) for D, h in values.items()}))
    else:
        for D, h in values.items():
            print(f"H({D}) = {fmt(h)}")
    return 0


def cmd_sturm(args) -> int:
    if args.level < 1:
        raise UsageError("level must be positive")
    b = V.sturm_bound(_parse_weight(args.weight), args.level)
    print(json.dumps({"weight": args.weight, "level": args.level, "sturm_bound": b}) if args.json else b)
    return 0


def cmd_scan(args) -> int:
    from .arithmetic import is_prime

    if not is_prime(args.p) or args.p < 3:
        raise UsageError("p must be an odd prime")
    try:
        report = V.scan_qp_threshold(args.p, args.which, args.bound or 2000)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return _emit_reports([report], args.json)


def cmd_all(args) -> int:
    reports = V.run_all(
        theorem_bound=args.bound or V.DEFAULT_THEOREM_BOUND,
        jobs=args.jobs,
    )
    return _emit_reports(reports, args.json)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (only used by 'all')")

    p = argparse.ArgumentParser(prog="etaq", description="Eta-quotient expansions and sign-pattern checks")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("expand", parents=[common], help="product coefficients of an eta-quotient")
    s.add_argument("--eta", required=True, help='e.g. "1^4 2^2 4^-2"')
    s.add_argument("--terms", "-t", type=int, default=20)
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("verify", parents=[common], help="check a sign theorem or a lemma")
    s.add_argument("--theorem")
    s.add_argument("--lemma", choices=sorted(LEMMAS))
    s.add_argument("--bound", "-b", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("identity", parents=[common], help="check a named q-series identity")
    s.add_argument("name", nargs="?")
    s.add_argument("--list", action="store_true")
    s.add_argument("--bound", "-b", type=int)
    s.set_defaults(func=cmd_identity)

    s = sub.add_parser("hurwitz", parents=[common], help="Hurwitz class numbers")
    s.add_argument("D", type=int, nargs="+")
    s.set_defaults(func=cmd_hurwitz)

    s = sub.add_parser("sturm", parents=[common], help="Sturm bound for weight and level")
    s.add_argument("--weight", "-k", required=True, help="integer or half-integer, e.g. 2 or 3/2")
    s.add_argument("--level", "-N", type=int, required=True)
    s.set_defaults(func=cmd_sturm)

    s = sub.add_parser("scan-qp", parents=[common], help="empirical threshold for the Q_p / P_p sign law")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--which", choices=["Q", "P"], required=True)
    s.add_argument("--bound", "-b", type=int)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("all", parents=[common], help="run the full verification suite")
    s.add_argument("--bound", "-b", type=int, help="bound for the sign theorems")
    s.set_defaults(func=cmd_all)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    if getattr(args, "bound", None) is not None and args.bound < 1:
        print("etaq: error: --bound must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as e:
        print(f"etaq: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
