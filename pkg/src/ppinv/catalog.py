"""Catalog of normalized permutation polynomials of degree <= 5 and their inverses.

Each row knows which fields it applies to, which parameter values are
admissible, and how to build both the PP and its closed-form inverse.  A few
degree 6 and 7 families over GF(2^n) are included as ``deg6.*``/``deg7.*`` rows.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .closed_forms import (
    DicksonParams,
    dickson_poly,
    invert_dickson,
    invert_linearized_binomial,
    invert_linearized_trinomial,
    invert_monomial,
    invert_quintic_main,
    s_sequence,
)
from .errors import NotAPermutation
from .field import FieldElement, FieldSpec, is_dth_power
from .poly import Poly, reduce_mod_xq_minus_x

__all__ = ["CatalogRow", "table1_catalog", "get_row", "match_catalog"]

Params = dict


@dataclass(frozen=True)
class CatalogRow:
    id: str
    pp_text: str
    inverse_text: str
    fields_text: str
    params: tuple[str, ...]  # "a", "b" range over the field; "s" over {1, -1}
    field_ok: Callable[[FieldSpec], bool]
    admissible: Callable[[FieldSpec, Params], bool]
    build_pp: Callable[[FieldSpec, Params], Poly]
    build_inverse: Callable[[FieldSpec, Params], Poly]
    extract: Callable[[Poly], list[Params]]

    def parameter_space(self, spec: FieldSpec) -> Iterator[Params]:
        """All admissible parameter assignments over spec."""
        if not self.field_ok(spec):
            return
        ranges = [(-1, 1) if name == "s" else spec.elements() for name in self.params]
        for combo in itertools.product(*ranges):
            params = dict(zip(self.params, combo))
            if self.admissible(spec, params):
                yield params

    def instantiate(self, spec: FieldSpec, params: Params) -> tuple[Poly, Poly]:
        """(PP, reduced inverse); NotAPermutation if params are inadmissible."""
        params = {k: (v if k == "s" else spec(v)) for k, v in params.items()}
        missing = set(self.params) - set(params)
        if missing:
            raise ValueError(f"row {self.id} needs parameters {sorted(missing)}")
        if not self.field_ok(spec):
            raise NotAPermutation(f"row {self.id} does not apply to {spec}")
        if not self.admissible(spec, params):
            raise NotAPermutation(f"parameters {params} are not admissible for {self.id}")
        return self.build_pp(spec, params), reduce_mod_xq_minus_x(self.build_inverse(spec, params))

    def match(self, g: Poly) -> Params | None:
        """Parameters under which this row's PP equals g exactly, if any."""
        spec = g.spec
        if not self.field_ok(spec):
            return None
        for params in self.extract(g):
            if self.admissible(spec, params) and self.build_pp(spec, params) == g:
                return params
        return None


def _poly(spec: FieldSpec, terms: dict) -> Poly:
    return Poly.from_terms(spec, {e: spec(c) for e, c in terms.items()})


def _nonsquare(a: FieldElement) -> bool:
    return bool(a) and not is_dth_power(a, 2)


def _always(spec, params):
    return True


def _no_params(g):
    return [{}]


def _signs(g):
    return [{"s": 1}, {"s": -1}]


def _monomial_row(m: int, row_id: str, inverse_text: str, fields_text: str, field_ok) -> CatalogRow:
    return CatalogRow(
        row_id, f"x^{m}", inverse_text, fields_text, (), field_ok, _always,
        lambda spec, _: Poly.monomial(spec, m),
        lambda spec, _: invert_monomial(m, spec),
        _no_params,
    )


def _q_is(q):
    return lambda spec: spec.q == q


def _x4_bx2_ax_ok(spec, prm):
    a, b = prm["a"], prm["b"]
    return bool(a) and bool(b) and s_sequence(a, b).z == 1


def _dickson_quintic_alpha(spec, a):
    return -a / 5


def _build_rows() -> list[CatalogRow]:
    rows = [
        CatalogRow(
            "table1.x", "x", "x", "any q", (), lambda spec: True, _always,
            lambda spec, _: Poly.x(spec), lambda spec, _: Poly.x(spec), _no_params,
        ),
        CatalogRow(
            "table1.x2", "x^2", "x^(q/2)", "q = 2^n", (), lambda spec: spec.p == 2, _always,
            lambda spec, _: Poly.monomial(spec, 2),
            lambda spec, _: Poly.monomial(spec, spec.q // 2), _no_params,
        ),
        _monomial_row(3, "table1.x3", "x^((kq-k+1)/3), k = 1-q mod 3", "q != 1 mod 3",
                      lambda spec: spec.q % 3 != 1),
        CatalogRow(
            "table1.x3-ax", "x^3 - a x (a not a square)",
            "sum_{i<n} a^(-(3^(i+1)-1)/2) x^(3^i)", "q = 3^n", ("a",),
            lambda spec: spec.p == 3, lambda spec, prm: _nonsquare(prm["a"]),
            lambda spec, prm: _poly(spec, {3: 1, 1: -prm["a"]}),
            lambda spec, prm: invert_linearized_binomial(1, prm["a"]),
            lambda g: [{"a": -g.coeff(1)}],
        ),
        CatalogRow(
            "table1.x4", "x^4", "x^(q/4)", "q = 2^n, n >= 2", (),
            lambda spec: spec.p == 2 and spec.n >= 2, _always,
            lambda spec, _: Poly.monomial(spec, 4),
            lambda spec, _: Poly.monomial(spec, spec.q // 4), _no_params,
        ),
        CatalogRow(
            "table1.x4+-3x", "x^4 + 3s x (s = +-1)", "-s (x^4 - 3x)", "q = 7", ("s",),
            _q_is(7), _always,
            lambda spec, prm: _poly(spec, {4: 1, 1: 3 * prm["s"]}),
            lambda spec, prm: _poly(spec, {4: -prm["s"], 1: 3 * prm["s"]}),
            _signs,
        ),
        CatalogRow(
            "table1.x4+ax", "x^4 + a x (a not a cube)",
            "a^((q-1)/3) (1 + a^((q-1)/3))^-1 sum_{i<n} a^(-(4^(i+1)-1)/3) x^(4^i)",
            "q = 2^(2n)", ("a",),
            lambda spec: spec.p == 2 and spec.n % 2 == 0,
            lambda spec, prm: bool(prm["a"]) and not is_dth_power(prm["a"], 3),
            lambda spec, prm: _poly(spec, {4: 1, 1: prm["a"]}),
            # x^4 + a x = x^4 - a x in characteristic 2, over the GF(4) tower
            lambda spec, prm: invert_linearized_binomial(1, prm["a"], base_exponent=2),
            lambda g: [{"a": g.coeff(1)}],
        ),
        CatalogRow(
            "table1.x4+bx2+ax", "x^4 + b x^2 + a x (ab != 0, S_n + a S_(n-2)^2 = 1)",
            "sum_{i<n} (S_(n-2-i)^(2^(i+1)) + a^(1-2^(i+1)) S_i) x^(2^i)", "q = 2^n", ("a", "b"),
            lambda spec: spec.p == 2, _x4_bx2_ax_ok,
            lambda spec, prm: _poly(spec, {4: 1, 2: prm["b"], 1: prm["a"]}),
            lambda spec, prm: invert_linearized_trinomial(prm["a"], prm["b"]),
            lambda g: [{"a": g.coeff(1), "b": g.coeff(2)}],
        ),
        _monomial_row(5, "table1.x5", "x^((kq-k+1)/5), k = (1-q)^3 mod 5", "q != 1 mod 5",
                      lambda spec: spec.q % 5 != 1),
        CatalogRow(
            "table1.x5+ax", "x^5 + a x (a^2 = 2)", "x^5 + a x", "q = 9", ("a",),
            _q_is(9), lambda spec, prm: prm["a"] * prm["a"] == 2,
            lambda spec, prm: _poly(spec, {5: 1, 1: prm["a"]}),
            lambda spec, prm: _poly(spec, {5: 1, 1: prm["a"]}),
            lambda g: [{"a": g.coeff(1)}],
        ),
        CatalogRow(
            "table1.x5-ax", "x^5 - a x (a not a fourth power)",
            "a^((q-1)/4) (1 - a^((q-1)/4))^-1 sum_{i<n} a^(-(5^(i+1)-1)/4) x^(5^i)",
            "q = 5^n", ("a",),
            lambda spec: spec.p == 5,
            lambda spec, prm: bool(prm["a"]) and not is_dth_power(prm["a"], 4),
            lambda spec, prm: _poly(spec, {5: 1, 1: -prm["a"]}),
            lambda spec, prm: invert_linearized_binomial(1, prm["a"]),
            lambda g: [{"a": -g.coeff(1)}],
        ),
        CatalogRow(
            "table1.x5+-2x2", "x^5 + 2s x^2 (s = +-1)", "x^5 - 2s x^2", "q = 7", ("s",),
            _q_is(7), _always,
            lambda spec, prm: _poly(spec, {5: 1, 2: 2 * prm["s"]}),
            lambda spec, prm: _poly(spec, {5: 1, 2: -2 * prm["s"]}),
            _signs,
        ),
        CatalogRow(
            "table1.x5+ax3+3a2x", "x^5 + a x^3 + 3a^2 x (a not a square)",
            "-a^2 x^9 - a x^7 + 4x^5 + 4a^5 x^3 - 5a^4 x", "q = 13", ("a",),
            _q_is(13), lambda spec, prm: _nonsquare(prm["a"]),
            lambda spec, prm: _poly(spec, {5: 1, 3: prm["a"], 1: 3 * prm["a"] ** 2}),
            lambda spec, prm: _poly(spec, {
                9: -prm["a"] ** 2, 7: -prm["a"], 5: 4,
                3: 4 * prm["a"] ** 5, 1: -5 * prm["a"] ** 4,
            }),
            lambda g: [{"a": g.coeff(3)}],
        ),
        CatalogRow(
            "table1.x5+ax3+a2x/5", "x^5 + a x^3 + 5^-1 a^2 x (a != 0)",
            "D_m(x, -(a/5)^5), m = (3q^2 - 2)/5", "q = +-2 mod 5", ("a",),
            lambda spec: spec.q % 5 in (2, 3), lambda spec, prm: bool(prm["a"]),
            lambda spec, prm: _poly(spec, {5: 1, 3: prm["a"], 1: prm["a"] ** 2 / 5}),
            lambda spec, prm: invert_dickson(DicksonParams(5, _dickson_quintic_alpha(spec, prm["a"]))),
            lambda g: [{"a": g.coeff(3)}],
        ),
        CatalogRow(
            "table1.x5-2ax3-a2x", "x^5 - 2a x^3 + a^2 x (a not a square)",
            "sum_{i<=j<n} b_ij a^(-(5^n+5^(i+1)+5^(j+1)-3)/4) x^((5^n+5^i+5^j-1)/2)",
            "q = 5^n", ("a",),
            lambda spec: spec.p == 5, lambda spec, prm: _nonsquare(prm["a"]),
            lambda spec, prm: _poly(spec, {5: 1, 3: -2 * prm["a"], 1: prm["a"] ** 2}),
            lambda spec, prm: invert_quintic_main(prm["a"]),
            lambda g: [{"a": -g.coeff(3) / 2}],
        ),
        CatalogRow(
            "table1.x5+ax3+-x2+3a2x", "x^5 + a x^3 + s x^2 + 3a^2 x (a not a square, s = +-1)",
            "x^5 + s(2a x^4 - 2x^2) + a^2 x^3 + a x", "q = 7", ("a", "s"),
            _q_is(7), lambda spec, prm: _nonsquare(prm["a"]),
            lambda spec, prm: _poly(spec, {5: 1, 3: prm["a"], 2: prm["s"], 1: 3 * prm["a"] ** 2}),
            lambda spec, prm: _poly(spec, {
                5: 1, 4: 2 * prm["s"] * prm["a"], 3: prm["a"] ** 2,
                2: -2 * prm["s"], 1: prm["a"],
            }),
            lambda g: [{"a": g.coeff(3), "s": 1}, {"a": g.coeff(3), "s": -1}],
        ),
        _monomial_row(6, "deg6.x6", "x^(6^-1 mod q-1)", "q = 2^n, n odd",
                      lambda spec: spec.p == 2 and spec.n % 2 == 1),
        _monomial_row(7, "deg7.x7", "x^(7^-1 mod q-1)", "q = 2^n, 3 does not divide n",
                      lambda spec: spec.p == 2 and spec.n % 3 != 0),
        CatalogRow(
            "deg7.x7+x5+x", "x^7 + x^5 + x = D_7(x, 1)", "D_m(x, 1), 7m = 1 mod q^2 - 1",
            "q = 2^n, 3 does not divide n", (),
            lambda spec: spec.p == 2 and spec.n % 3 != 0, _always,
            lambda spec, _: dickson_poly(DicksonParams(7, spec.one)),
            lambda spec, _: invert_dickson(DicksonParams(7, spec.one)),
            _no_params,
        ),
    ]
    return rows


_ROWS: list[CatalogRow] | None = None


def table1_catalog() -> list[CatalogRow]:
    global _ROWS
    if _ROWS is None:
        _ROWS = _build_rows()
    return list(_ROWS)


def get_row(row_id: str) -> CatalogRow:
    for row in table1_catalog():
        if row.id == row_id:
            return row
    raise KeyError(f"unknown catalog row {row_id!r}")


def match_catalog(g: Poly) -> tuple[CatalogRow, Params] | None:
    """First row whose PP equals the (normalized) polynomial g."""
    for row in table1_catalog():
        params = row.match(g)
        if params is not None:
            return row, params
    return None
