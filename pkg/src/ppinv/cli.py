"""Command-line front end: ``ppinv {invert,verify,classify,catalog,congruence}``.

Exit codes: 0 success, 1 verification failure, 2 not a permutation,
3 method inapplicable, 4 size exceeded, 64 malformed input.
"""

from __future__ import annotations

import argparse
import sys

from .binom import congruence_suite, theorem_predicate_equivalences
from .catalog import get_row, match_catalog, table1_catalog
from .errors import (
    FieldTooSmall,
    MethodInapplicable,
    NonzeroConstantTerm,
    NotAPermutation,
    ParseError,
    PPError,
    SizeExceeded,
)
from .field import FieldSpec, parse_element, parse_field
from .inverse import InverseResult, invert_coeff_formula, invert_lagrange, is_permutation, verify_inverse
from .inverse import classify_normalized_pps
from .poly import Poly, compose_mod, format_poly, normalize, parse_poly, reduce_mod_xq_minus_x

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_NOT_PP = 2
EXIT_INAPPLICABLE = 3
EXIT_SIZE = 4
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _translate(g: Poly, shift) -> Poly:
    """g(y - shift), reduced."""
    return compose_mod(g, Poly(g.spec, [-shift, 1]))


def _invert_closed_form(f: Poly, row_id: str | None) -> InverseResult | None:
    """Normalize f, look it up in the catalog and pull the inverse back."""
    if f.degree < 1:
        return None
    g, norm = normalize(f)
    if row_id is None:
        hit = match_catalog(g)
    else:
        row = get_row(row_id)
        params = row.match(g)
        hit = None if params is None else (row, params)
    if hit is None:
        return None
    row, params = hit
    _, g_inv = row.instantiate(g.spec, params)
    inv = reduce_mod_xq_minus_x(norm.pull_back_inverse(g_inv))
    return InverseResult(inv, f"closed-form:{row.id}", verify_inverse(f, inv))


def invert(f: Poly, method: str = "auto") -> InverseResult:
    """Dispatch to the requested inversion method; raises on inapplicable methods."""
    spec = f.spec
    f = reduce_mod_xq_minus_x(f)
    if not is_permutation(f):
        raise NotAPermutation(f"{f} does not permute GF({spec.q})")
    if method == "lagrange":
        return invert_lagrange(f)
    if method == "coeff-formula":
        return invert_coeff_formula(f)
    if method.startswith("closed-form:"):
        row_id = method.split(":", 1)[1]
        try:
            res = _invert_closed_form(f, row_id)
        except KeyError as exc:
            raise MethodInapplicable(str(exc)) from exc
        if res is None:
            raise MethodInapplicable(f"{f} does not match catalog row {row_id}")
        return res
    if method != "auto":
        raise MethodInapplicable(f"unknown method {method!r}")
    res = _invert_closed_form(f, None)
    if res is not None:
        return res
    if spec.q < 3:
        return invert_lagrange(f)
    # the coefficient formula needs f(0) = 0: invert f - f(0), then shift back
    f0 = f.coeff(0)
    res = invert_coeff_formula(f - f0)
    inv = _translate(res.inverse, f0)
    return InverseResult(inv, res.method, verify_inverse(f, inv))


def _field(args) -> FieldSpec:
    return parse_field(args.field)


def cmd_invert(args) -> int:
    spec = _field(args)
    f = parse_poly(spec, args.poly)
    res = invert(f, args.method)
    print(format_poly(res.inverse))
    status = "verified" if res.verified else "VERIFICATION FAILED"
    print(f"{status} method={res.method}", file=sys.stderr)
    return EXIT_OK if res.verified else EXIT_VERIFY_FAILED


def cmd_verify(args) -> int:
    spec = _field(args)
    ok = verify_inverse(parse_poly(spec, args.f), parse_poly(spec, args.g))
    print("verified" if ok else "not an inverse")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_classify(args) -> int:
    spec = _field(args)
    pps = classify_normalized_pps(spec, args.max_degree)
    for f in pps:
        print(format_poly(f))
    print(f"count={len(pps)}")
    return EXIT_OK


def _param_value(spec: FieldSpec, name: str, text: str):
    if name == "s":
        s = int(text)
        if s not in (1, -1):
            raise ParseError("sign parameter s must be 1 or -1")
        return s
    return parse_element(spec, text)


def cmd_catalog(args) -> int:
    if args.instantiate is None:
        for row in table1_catalog():
            print(f"{row.id}\t{row.pp_text}\t{row.inverse_text}\t{row.fields_text}")
        return EXIT_OK
    if args.field is None:
        raise ParseError("--instantiate needs --field")
    spec = _field(args)
    try:
        row = get_row(args.instantiate)
    except KeyError as exc:
        raise MethodInapplicable(str(exc)) from exc
    params = {}
    for item in args.param:
        name, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"--param expects name=value, got {item!r}")
        params[name.strip()] = _param_value(spec, name.strip(), value)
    try:
        f, g = row.instantiate(spec, params)
    except ValueError as exc:
        if isinstance(exc, PPError):
            raise
        raise ParseError(str(exc)) from exc
    print(format_poly(f))
    print(format_poly(g))
    return EXIT_OK


def cmd_congruence(args) -> int:
    suite = congruence_suite(args.n)
    equiv = theorem_predicate_equivalences(args.n)
    for line in suite.lines() + equiv.lines():
        print(line)
    failures = suite.failures + equiv.failures
    print(f"failures={failures}")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ppinv", description="Compositional inverses of permutation polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invert", help="print the inverse of a permutation polynomial")
    p.add_argument("--field", required=True, help='field as "p^n"')
    p.add_argument("--poly", required=True, help='dense list "c0,c1,..." or "x^5 - 2*x^3 + x"')
    p.add_argument("--method", default="auto",
                   help="auto | lagrange | coeff-formula | closed-form:<row id>")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("verify", help="check that g(f(c)) = c on the whole field")
    p.add_argument("--field", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="list all normalized PPs up to a degree")
    p.add_argument("--field", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="list catalog rows or instantiate one")
    p.add_argument("--instantiate", metavar="ROW_ID")
    p.add_argument("--field")
    p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("congruence", help="run the mod-5 binomial congruence checks")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_congruence)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAPermutation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PP
    except (MethodInapplicable, FieldTooSmall, NonzeroConstantTerm) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except SizeExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
