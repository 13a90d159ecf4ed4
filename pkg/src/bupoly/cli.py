"""Command-line front end.

Exit status: 0 on success (or a passing verdict), 1 when a search or
verification verdict fails, 2 on usage errors including unparsable
polynomials.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import divisor_sums as ds
from .factor import factorize, is_irreducible, is_odd_poly
from .gf2poly import Poly, PolySyntaxError, format_poly, parse_poly
from .mersenne import catalog_polys, enumerate_mersenne, is_mersenne_prime, named_constants
from .search import (
    BLIND_DEGREE_CEILING,
    SearchReport,
    blind_search,
    is_ibup,
    make_record,
    search_omega3,
    search_omega4_mersenne,
    search_omega4_nonmersenne,
    verify_theorems,
)


class UsageError(Exception):
    pass


def _poly_arg(text: str) -> Poly:
    return parse_poly(text, catalog_polys())


def _degree(p: Poly):
    return p.degree if p else None


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------- verbs


def cmd_factor(args) -> int:
    p = _poly_arg(args.poly)
    if not p:
        raise UsageError("cannot factor the zero polynomial")
    f = factorize(p)
    factored = format_poly(p, "factored", f)
    payload = {
        "verb": "factor",
        "input": args.poly,
        "poly_hex": hex(p.mask),
        "degree": _degree(p),
        "omega": f.omega,
        "factors": [
            {"prime": format_poly(q), "prime_hex": hex(q.mask), "exponent": e} for q, e in f
        ],
        "factored": factored,
    }
    _emit(args, payload, factored)
    return 0


_SIGMA_KINDS = {"sigma": ds.sigma, "star": ds.sigma_star, "bistar": ds.sigma_bistar}


def cmd_sigma(args) -> int:
    p = _poly_arg(args.poly)
    if not p:
        raise UsageError("divisor sums of the zero polynomial are undefined")
    r = _SIGMA_KINDS[args.kind](p)
    factored = format_poly(r, "factored")
    payload = {
        "verb": "sigma",
        "kind": args.kind,
        "input_hex": hex(p.mask),
        "result_hex": hex(r.mask),
        "result": format_poly(r),
        "factored": factored,
    }
    _emit(args, payload, factored)
    return 0


def _check_ibup(p: Poly) -> bool:
    return ds.is_bup(p) and is_ibup(make_record(p))


_PREDICATES = {
    "bup": ds.is_bup,
    "ibup": _check_ibup,
    "perfect": ds.is_perfect,
    "unitary_perfect": ds.is_unitary_perfect,
    "irreducible": is_irreducible,
    "mersenne": lambda p: is_mersenne_prime(p) is not None,
    "odd": is_odd_poly,
}


def cmd_check(args) -> int:
    p = _poly_arg(args.poly)
    if not p:
        raise UsageError("predicates are undefined for the zero polynomial")
    if args.predicate == "irreducible" and p.is_constant():
        raise UsageError("irreducibility is undefined for constants")
    result = bool(_PREDICATES[args.predicate](p))
    payload = {
        "verb": "check",
        "predicate": args.predicate,
        "input_hex": hex(p.mask),
        "result": result,
    }
    _emit(args, payload, "true" if result else "false")
    return 0


def cmd_mersenne(args) -> int:
    if args.max_degree < 2:
        raise UsageError("--max-degree must be at least 2")
    primes = enumerate_mersenne(args.max_degree)
    payload = {
        "verb": "mersenne",
        "max_degree": args.max_degree,
        "primes": [
            {"poly": format_poly(m.poly), "poly_hex": hex(m.poly.mask), "degree": m.poly.degree,
             "a": m.a, "b": m.b}
            for m in primes
        ],
    }
    lines = [f"{format_poly(m.poly)}  = 1+x^{m.a}*(x+1)^{m.b}" for m in primes]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_catalog(args) -> int:
    table = named_constants()
    names = args.names or list(table)
    unknown = [n for n in names if n not in table]
    if unknown:
        raise UsageError(f"unknown catalog name(s): {', '.join(unknown)}")
    entries = []
    lines = []
    for name in names:
        e = table[name]
        entries.append({
            "name": name,
            "expression": e.expression,
            "poly_hex": hex(e.poly.mask),
            "factored": e.factored,
            "degree": e.poly.degree,
            "omega": factorize(e.poly).omega,
        })
        lines.append(f"{name:<4} {e.expression:<28} {format_poly(e.poly)}")
    _emit(args, {"verb": "catalog", "entries": entries}, "\n".join(lines))
    return 0


def _report_text(report: SearchReport, indent: str = "") -> list[str]:
    verdict = "pass" if report.verdict else "FAIL"
    lines = [
        f"{indent}{report.case_id}: {verdict}  candidates={report.candidate_count}"
        f"  hits={len(report.hits)}  elapsed={report.elapsed:.2f}s"
    ]
    if not report.subreports:
        for r in report.hits:
            tag = r.label or (f"conj({r.conjugate_label})" if r.conjugate_label else "")
            lines.append(f"{indent}  {format_poly(r.poly, 'factored', r.factorization)}  {tag}".rstrip())
    for note in report.notes:
        lines.append(f"{indent}  ! {note}")
    for sub in report.subreports:
        lines.extend(_report_text(sub, indent + "  "))
    return lines


def _emit_report(args, verb: str, report: SearchReport) -> int:
    payload = {"verb": verb, **report.to_dict()}
    _emit(args, payload, "\n".join(_report_text(report)))
    return 0 if report.verdict else 1


def cmd_search(args) -> int:
    case = "blind" if args.blind else args.case
    if case is None:
        raise UsageError("search needs --case or --blind")
    if case != "blind" and (args.max_degree is not None or args.max_omega is not None):
        raise UsageError("--max-degree and --max-omega apply only to the blind search")
    cap = args.divisor_cap
    if case == "omega3":
        report = search_omega3(args.workers, cap)
    elif case == "omega4-mersenne":
        report = search_omega4_mersenne(args.workers, cap)
    elif case == "omega4-nonmersenne":
        report = search_omega4_nonmersenne(args.workers, cap)
    else:
        max_degree = BLIND_DEGREE_CEILING if args.max_degree is None else args.max_degree
        max_omega = 4 if args.max_omega is None else args.max_omega
        if max_degree > BLIND_DEGREE_CEILING or max_degree < 2:
            raise UsageError(f"--max-degree must be between 2 and {BLIND_DEGREE_CEILING}")
        if not 2 <= max_omega <= 4:
            raise UsageError("--max-omega must be between 2 and 4")
        report = blind_search(max_degree, max_omega, args.workers, divisor_cap=cap)
    return _emit_report(args, "search", report)


def cmd_verify(args) -> int:
    report = verify_theorems(args.workers, divisor_cap=args.divisor_cap)
    return _emit_report(args, "verify", report)


# ---------- parser


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="bupoly",
        description="Divisor sums and bi-unitary perfect polynomials over F2[x].",
        epilog="Polynomials: sum form 'x^4+x+1', product form 'x^3*(x+1)^4*(x^2+x+1)', "
        "hex mask '0x13', or a catalog reference such as '@C6'.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor a polynomial")
    p.add_argument("poly")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("sigma", parents=[common], help="sigma, sigma* or sigma**")
    p.add_argument("--kind", choices=tuple(_SIGMA_KINDS), default="sigma")
    p.add_argument("poly")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("check", parents=[common], help="evaluate a predicate")
    group = p.add_mutually_exclusive_group(required=True)
    for name in _PREDICATES:
        group.add_argument(f"--{name.replace('_', '-')}", dest="predicate", action="store_const", const=name)
    p.add_argument("poly")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mersenne", parents=[common], help="list Mersenne primes")
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(func=cmd_mersenne)

    p = sub.add_parser("catalog", parents=[common], help="show named polynomials")
    p.add_argument("names", nargs="*")
    p.set_defaults(func=cmd_catalog)

    search_opts = argparse.ArgumentParser(add_help=False)
    search_opts.add_argument("--divisor-cap", type=_positive_int, default=ds.DEFAULT_DIVISOR_CAP)
    search_opts.add_argument("--workers", type=_positive_int, default=None,
                             help="worker processes (default: $BUPOLY_WORKERS or CPU count)")

    p = sub.add_parser("search", parents=[common, search_opts], help="run one search")
    p.add_argument("--case", choices=("omega3", "omega4-mersenne", "omega4-nonmersenne", "blind"))
    p.add_argument("--blind", action="store_true", help="same as --case blind")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--max-omega", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common, search_opts], help="verify the full classification")
    p.add_argument("--all", action="store_true", help="run every check (the default)")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PolySyntaxError as exc:
        print(f"bupoly: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"bupoly: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
