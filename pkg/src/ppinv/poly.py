"""Dense polynomials over a finite field, and arithmetic modulo x^q - x.

Coefficients are stored as a tuple of field encodings, low-to-high, with no
trailing zeros.  ``Poly.coeffs`` exposes them as FieldElements.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence

from .errors import DuplicatePoint, IncompleteDomain, ParseError, SpecMismatch
from .field import FieldElement, FieldSpec, format_element, parse_element

__all__ = [
    "Poly",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_scale",
    "reduce_exponent",
    "reduce_mod_xq_minus_x",
    "mulmod",
    "powmod",
    "evaluate",
    "value_table",
    "compose",
    "compose_mod",
    "lagrange_interpolate",
    "interpolate_explicit",
    "normalize",
    "Normalization",
    "format_poly",
    "parse_poly",
]


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """A polynomial over ``spec``.

    ``coeffs`` may hold FieldElements or ints; an int is read as an element of
    the prime subfield (reduced mod p), so negative values are fine.
    """

    __slots__ = ("spec", "_c")

    def __init__(self, spec: FieldSpec, coeffs: Iterable = ()):
        enc = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.spec is not spec:
                    raise SpecMismatch(f"coefficient from {c.spec} in polynomial over {spec}")
                enc.append(c.value)
            else:
                enc.append(int(c) % spec.p)
        self.spec = spec
        self._c = _trim(enc)

    @classmethod
    def from_encodings(cls, spec: FieldSpec, enc: Sequence[int]) -> Poly:
        f = cls.__new__(cls)
        f.spec = spec
        f._c = _trim(list(enc))
        return f

    @classmethod
    def from_terms(cls, spec: FieldSpec, terms: dict[int, FieldElement | int]) -> Poly:
        """Build from {exponent: coefficient}; repeated exponents are not merged."""
        if not terms:
            return cls(spec)
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] = spec(v).value
        return cls.from_encodings(spec, c)

    @classmethod
    def monomial(cls, spec: FieldSpec, e: int, coef: FieldElement | int = 1) -> Poly:
        return cls.from_terms(spec, {e: coef})

    @classmethod
    def x(cls, spec: FieldSpec) -> Poly:
        return cls.from_encodings(spec, (0, 1))

    @classmethod
    def constant(cls, spec: FieldSpec, c) -> Poly:
        return cls.from_encodings(spec, (spec(c).value,))

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(self.spec.element(v) for v in self._c)

    @property
    def encodings(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._c) - 1

    def coeff(self, e: int) -> FieldElement:
        return self.spec.element(self._c[e] if 0 <= e < len(self._c) else 0)

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero (exponent, encoding) pairs."""
        return [(e, v) for e, v in enumerate(self._c) if v]

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec is other.spec and self._c == other._c

    def __hash__(self):
        return hash((self.spec.p, self.spec.n, self._c))

    def __add__(self, other):
        return poly_add(self, _as_poly(self.spec, other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _as_poly(self.spec, other))

    def __rsub__(self, other):
        return poly_sub(_as_poly(self.spec, other), self)

    def __neg__(self):
        neg = self.spec.neg
        return Poly.from_encodings(self.spec, [neg(v) for v in self._c])

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, c):
        return evaluate(self, c)

    def __repr__(self):
        return f"Poly({self.spec!r}, {format_poly(self) or '0'})"

    def __str__(self):
        return _pretty(self)


def _as_poly(spec, other) -> Poly:
    if isinstance(other, Poly):
        return other
    return Poly.constant(spec, other)


def _check(f: Poly, g: Poly):
    if f.spec is not g.spec:
        raise SpecMismatch(f"{f.spec} vs {g.spec}")


def _pretty(f: Poly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for e in range(f.degree, -1, -1):
        v = f._c[e]
        if not v:
            continue
        c = format_element(f.spec.element(v))
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        if not mono:
            parts.append(c)
        elif c == "1":
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


# -- ring operations ----------------------------------------------------------

def poly_add(f: Poly, g: Poly) -> Poly:
    _check(f, g)
    add = f.spec.add
    a, b = f._c, g._c
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = add(out[i], v)
    return Poly.from_encodings(f.spec, out)


def poly_sub(f: Poly, g: Poly) -> Poly:
    _check(f, g)
    return poly_add(f, -g)


def poly_scale(f: Poly, c: FieldElement | int) -> Poly:
    spec = f.spec
    cv = spec(c).value
    mul = spec.mul
    return Poly.from_encodings(spec, [mul(v, cv) for v in f._c])


def _mul_raw(spec: FieldSpec, a: Sequence[int], b: Sequence[int], fold: int | None) -> list[int]:
    """Schoolbook product of encodings; if fold is q, fold exponents >= q down by q - 1."""
    if not a or not b:
        return []
    ta = [(i, v) for i, v in enumerate(a) if v]
    tb = [(j, v) for j, v in enumerate(b) if v]
    if len(ta) > len(tb):
        ta, tb = tb, ta
    size = len(a) + len(b) - 1
    if fold is not None:
        size = min(size, fold)
        qm1 = fold - 1
    if spec.n == 1:
        p = spec.p
        acc = [0] * size
        for i, x in ta:
            for j, y in tb:
                k = i + j
                if fold is not None and k >= fold:
                    k -= qm1
                acc[k] += x * y
        return [v % p for v in acc]
    add, mul = spec.add, spec.mul
    acc = [0] * size
    if spec.has_tables:
        log, exp2 = spec._log, spec._exp2
        tb = [(j, log[y]) for j, y in tb]
        for i, x in ta:
            lx = log[x]
            for j, ly in tb:
                k = i + j
                if fold is not None and k >= fold:
                    k -= qm1
                acc[k] = add(acc[k], exp2[lx + ly])
        return acc
    for i, x in ta:
        for j, y in tb:
            k = i + j
            if fold is not None and k >= fold:
                k -= qm1
            acc[k] = add(acc[k], mul(x, y))
    return acc


def poly_mul(f: Poly, g: Poly) -> Poly:
    _check(f, g)
    return Poly.from_encodings(f.spec, _mul_raw(f.spec, f._c, g._c, None))


# -- reduction modulo x^q - x -----------------------------------------------------

def reduce_exponent(e: int, q: int) -> int:
    """Representative exponent of x^e modulo x^q - x (e >= 0)."""
    if e < q:
        return e
    return (e - 1) % (q - 1) + 1


def reduce_mod_xq_minus_x(f: Poly) -> Poly:
    spec = f.spec
    q = spec.q
    if f.degree < q:
        return f
    out = [0] * q
    add = spec.add
    for e, v in f.terms():
        k = reduce_exponent(e, q)
        out[k] = add(out[k], v)
    return Poly.from_encodings(spec, out)


def mulmod(f: Poly, g: Poly) -> Poly:
    """f * g reduced modulo x^q - x (inputs are reduced first if needed)."""
    _check(f, g)
    f, g = reduce_mod_xq_minus_x(f), reduce_mod_xq_minus_x(g)
    return Poly.from_encodings(f.spec, _mul_raw(f.spec, f._c, g._c, f.spec.q))


def powmod(f: Poly, e: int) -> Poly:
    """f^e reduced modulo x^q - x, by square-and-multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    spec = f.spec
    result = Poly.constant(spec, 1)
    base = reduce_mod_xq_minus_x(f)
    while e:
        if e & 1:
            result = mulmod(result, base)
        e >>= 1
        if e:
            base = mulmod(base, base)
    return result


# -- evaluation -------------------------------------------------------------------

def evaluate(f: Poly, c: FieldElement | int) -> FieldElement:
    """Horner evaluation of f at c."""
    spec = f.spec
    cv = spec(c).value
    add, mul = spec.add, spec.mul
    acc = 0
    for v in reversed(f._c):
        acc = add(mul(acc, cv), v)
    return spec.element(acc)


def value_table(f: Poly) -> list[int]:
    """Encodings of f(c) for every c in encoding order 0..q-1.

    Sums the nonzero terms directly, which is much cheaper than Horner when
    f is sparse; the two paths are cross-checked in the tests.
    """
    spec = f.spec
    q = spec.q
    terms = f.terms()
    if not terms:
        return [0] * q
    const = f._c[0]
    terms = [(e, v) for e, v in terms if e > 0]
    if spec.n == 1:
        p, qm1 = spec.p, q - 1
        out = [const] * q
        for c in range(1, q):
            s = const
            for e, v in terms:
                s += v * pow(c, (e - 1) % qm1 + 1, p)
            out[c] = s % p
        return out
    add = spec.add
    if spec.has_tables:
        log, exp, qm1 = spec._log, spec._exp, q - 1
        out = [const] * q
        lterms = [(e, log[v]) for e, v in terms]
        for c in range(1, q):
            lc = log[c]
            s = const
            for e, lv in lterms:
                s = add(s, exp[(lc * e + lv) % qm1])
            out[c] = s
        return out
    return [evaluate(f, spec.element(c)).value for c in range(q)]


# -- composition -------------------------------------------------------------------

def compose(f: Poly, g: Poly) -> Poly:
    """f(g(x)) as a plain polynomial (no reduction)."""
    _check(f, g)
    spec = f.spec
    acc: list[int] = []
    for v in reversed(f._c):
        acc = _mul_raw(spec, acc, g._c, None)
        if acc:
            acc[0] = spec.add(acc[0], v)
        else:
            acc = [v]
    return Poly.from_encodings(spec, acc)


def compose_mod(f: Poly, g: Poly) -> Poly:
    """f(g(x)) reduced modulo x^q - x, by Horner's scheme."""
    _check(f, g)
    spec = f.spec
    q = spec.q
    g = reduce_mod_xq_minus_x(g)
    acc: list[int] = []
    for v in reversed(f._c):
        acc = _mul_raw(spec, acc, g._c, q)
        if acc:
            acc[0] = spec.add(acc[0], v)
        else:
            acc = [v]
    return reduce_mod_xq_minus_x(Poly.from_encodings(spec, acc))


# -- interpolation -------------------------------------------------------------------

def _check_domain(spec: FieldSpec, pairs) -> tuple[list[int], list[int]]:
    xs, ys = [], []
    seen = bytearray(spec.q)
    for x, y in pairs:
        xv, yv = spec(x).value, spec(y).value
        if seen[xv]:
            raise DuplicatePoint(f"x = {spec.element(xv)} given twice")
        seen[xv] = 1
        xs.append(xv)
        ys.append(yv)
    if len(xs) != spec.q:
        raise IncompleteDomain(f"{len(xs)} points given, need all {spec.q}")
    return xs, ys


def lagrange_interpolate(spec: FieldSpec, pairs) -> Poly:
    """The unique polynomial of degree < q through pairs covering all of F_q.

    Newton divided differences, then expansion of the Newton form.
    """
    xs, ys = _check_domain(spec, pairs)
    add, sub, mul, inv, neg = spec.add, spec.sub, spec.mul, spec.inv, spec.neg
    q = spec.q
    coef = list(ys)
    for level in range(1, q):
        for i in range(q - 1, level - 1, -1):
            num = sub(coef[i], coef[i - 1])
            coef[i] = mul(num, inv(sub(xs[i], xs[i - level])))
    # expand coef[0] + coef[1](x-x0) + coef[2](x-x0)(x-x1) + ...
    acc = [coef[q - 1]]
    for k in range(q - 2, -1, -1):
        nx = neg(xs[k])
        shifted = [0] + acc
        for i, v in enumerate(acc):
            shifted[i] = add(shifted[i], mul(v, nx))
        shifted[0] = add(shifted[0], coef[k])
        acc = shifted
    return Poly.from_encodings(spec, acc)


def interpolate_explicit(spec: FieldSpec, pairs) -> Poly:
    """Interpolation by summing y * (1 - (x - x_c)^(q-1)) over all points.

    Expands (x - x_c)^(q-1) with integer binomials; independent of the Newton path.
    """
    from math import comb

    xs, ys = _check_domain(spec, pairs)
    q, p = spec.q, spec.p
    add, sub, mul, neg, pw = spec.add, spec.sub, spec.mul, spec.neg, spec.pow
    binoms = [comb(q - 1, i) % p for i in range(q)]
    out = [0] * q
    for xv, yv in zip(xs, ys):
        if not yv:
            continue
        nx = neg(xv)
        out[0] = add(out[0], yv)
        for i in range(q):
            b = binoms[i]
            if not b:
                continue
            # an integer k < p is encoded as k in every GF(p^n)
            out[i] = sub(out[i], mul(yv, mul(b, pw(nx, q - 1 - i))))
    return Poly.from_encodings(spec, out)


# -- normalization -----------------------------------------------------------------

class Normalization:
    """Record of g(x) = b*f(x + c) + d.  Then f^{-1}(y) = g^{-1}(b*y + d) + c."""

    __slots__ = ("b", "c", "d")

    def __init__(self, b: FieldElement, c: FieldElement, d: FieldElement):
        self.b, self.c, self.d = b, c, d

    def as_tuple(self):
        return (self.b, self.c, self.d)

    def pull_back_inverse(self, g_inverse: Poly) -> Poly:
        """Turn an inverse of the normalized g into an inverse of the original f."""
        spec = g_inverse.spec
        inner = Poly(spec, [self.d, self.b])
        return compose_mod(g_inverse, inner) + self.c

    def __repr__(self):
        return f"Normalization(b={self.b}, c={self.c}, d={self.d})"


def normalize(f: Poly) -> tuple[Poly, Normalization]:
    """Monic, vanishing at 0, and (when p does not divide deg) no x^(deg-1) term."""
    spec = f.spec
    m = f.degree
    if m < 1:
        raise ValueError("normalize needs degree >= 1")
    b = f.coeff(m).inverse()
    c = spec.zero
    if m % spec.p:
        # coefficient of x^(m-1) in f(x+c) is f_{m-1} + m*c*f_m
        c = -f.coeff(m - 1) / (f.coeff(m) * m)
    shifted = compose(f, Poly(spec, [c, 1])) if c else f
    d = -(b * shifted.coeff(0))
    g = poly_scale(shifted, b) + d
    return g, Normalization(b, c, d)


# -- text format -----------------------------------------------------------------------

_TOKEN = re.compile(r"\[[^\]]*\]|[^,]+")


def format_poly(f: Poly) -> str:
    """Dense low-to-high comma list, e.g. "0,4,0,3,0,1"; the zero polynomial is "0"."""
    if f.is_zero():
        return "0"
    return ",".join(format_element(f.spec.element(v)) for v in f._c)


def parse_poly(spec: FieldSpec, text: str) -> Poly:
    """Parse the dense comma list, or a sum of terms like "x^5 - 2*x^3 + [1,2]*x"."""
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    if "x" in text:
        return _parse_expression(spec, text)
    tokens = _TOKEN.findall(text.replace(" ", ""))
    return Poly(spec, [parse_element(spec, t) for t in tokens])


_TERM = re.compile(r"^(?P<coef>\[[^\]]*\]|\d+)?\*?(?P<x>x(?:\^(?P<e>\d+))?)?$")


def _parse_expression(spec: FieldSpec, text: str) -> Poly:
    s = text.replace(" ", "")
    # split on top-level + and -
    pieces, depth, cur = [], 0, ""
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in "+-" and depth == 0 and cur not in ("", "+", "-"):
            pieces.append(cur)
            cur = ch
        else:
            cur += ch
    pieces.append(cur)
    result = Poly(spec)
    for piece in pieces:
        sign = 1
        while piece and piece[0] in "+-":
            if piece[0] == "-":
                sign = -sign
            piece = piece[1:]
        m = _TERM.match(piece)
        if not piece or not m or (m.group("coef") is None and m.group("x") is None):
            raise ParseError(f"cannot parse term {piece!r} in {text!r}")
        coef = parse_element(spec, m.group("coef")) if m.group("coef") else spec.one
        e = 0
        if m.group("x"):
            e = int(m.group("e")) if m.group("e") else 1
        result = result + Poly.monomial(spec, e, coef * sign)
    return result
