"""Exact arithmetic in GF(p) and GF(p^n).

Elements are encoded internally as integers in [0, q): the element
c_0 + c_1 t + ... + c_{n-1} t^{n-1} (t the class of the indeterminate
modulo the field modulus) is stored as c_0 + c_1 p + ... + c_{n-1} p^{n-1}.
The integer-level methods on FieldSpec (``add``, ``mul``, ...) work on these
encodings and are what the polynomial layer uses in its inner loops.
FieldElement wraps an encoding for user-facing code.

Extension fields of order at most ``Limits.table_limit`` use discrete
log/antilog tables (with Zech logarithms for addition in odd characteristic);
larger ones fall back to schoolbook arithmetic modulo the field polynomial.
Prime fields always use plain modular integer arithmetic.
"""

from __future__ import annotations

import functools
import itertools
import math
import re

import sympy

from .config import DEFAULT_LIMITS
from .errors import (
    DivisionByZero,
    NotADivisor,
    NotPrime,
    ParseError,
    SizeExceeded,
    SpecMismatch,
    ZeroInput,
)

__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_field",
    "parse_field",
    "frobenius",
    "norm",
    "is_dth_power",
    "primitive_root_of_unity",
    "canonical_modulus",
    "monic_irreducibles",
]


# -- polynomials over GF(p) as digit lists (low-to-high) ---------------------

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_rem(a, b, p):
    """Remainder of a modulo monic b over GF(p)."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - db
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
        a.pop()
        _fp_trim(a)
    return a


def _monic_tails(p, k):
    """Monic degree-k polynomials, tails (c_0..c_{k-1}) in lexicographic order."""
    for tail in itertools.product(range(p), repeat=k):
        yield list(tail) + [1]


@functools.cache
def monic_irreducibles(p: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducible polynomials of degree k over GF(p), canonical order."""
    divisors = [g for j in range(1, k // 2 + 1) for g in monic_irreducibles(p, j)]
    found = []
    for f in _monic_tails(p, k):
        if all(_fp_rem(f, g, p) for g in divisors):
            found.append(tuple(f))
    return tuple(found)


def canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    """First monic irreducible of degree n over GF(p) in lexicographic tail order.

    For n = 1 this is x itself, which serves as the prime-field sentinel.
    """
    divisors = [g for j in range(1, n // 2 + 1) for g in monic_irreducibles(p, j)]
    for f in _monic_tails(p, n):
        if all(_fp_rem(f, g, p) for g in divisors):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- the field ---------------------------------------------------------------

class FieldSpec:
    """The finite field GF(p^n) with its canonical modulus.

    Obtain instances through :func:`make_field`; equal (p, n) give the same object.
    """

    def __init__(self, p: int, n: int, table_limit: int = DEFAULT_LIMITS.table_limit):
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = canonical_modulus(p, n)
        self._pows = [p**i for i in range(n)]
        self.has_tables = n > 1 and self.q <= table_limit
        if n == 1:
            self._setup_prime()
        elif self.has_tables:
            self._setup_tables()
        else:
            self._setup_schoolbook()
        self.generator = self._find_generator()
        if self.has_tables:
            self._build_tables()
        self._zero = FieldElement(self, 0)
        self._one = FieldElement(self, 1)

    # digits <-> encoding
    def digits(self, v: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.n):
            v, r = divmod(v, p)
            out.append(r)
        return tuple(out)

    def encode(self, digits) -> int:
        return sum((d % self.p) * w for d, w in zip(digits, self._pows))

    def _digit_add(self, a, b):
        p = self.p
        return self.encode([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _digit_neg(self, a):
        return self.encode([-x for x in self.digits(a)])

    def _schoolbook_mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        prod = _fp_trim([c % p for c in prod])
        rem = _fp_rem(prod, self.modulus, p)
        return self.encode(rem)

    def _schoolbook_pow(self, a, e):
        result = 1
        base = a
        while e:
            if e & 1:
                result = self._schoolbook_mul(result, base)
            e >>= 1
            if e:
                base = self._schoolbook_mul(base, base)
        return result

    # integer-level arithmetic setup
    def _setup_prime(self):
        p = self.p
        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.neg = lambda a: (-a) % p
        self.mul = lambda a, b: (a * b) % p

        def inv(a):
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return pow(a, -1, p)

        def power(a, e):
            if a == 0:
                return _zero_pow(e)
            return pow(a, e % (p - 1), p)

        self.inv = inv
        self.pow = power

    def _setup_schoolbook(self):
        qm1 = self.q - 1
        if self.p == 2:
            self.add = self.sub = lambda a, b: a ^ b
            self.neg = lambda a: a
        else:
            self.add = self._digit_add
            self.neg = self._digit_neg
            self.sub = lambda a, b: self._digit_add(a, self._digit_neg(b))
        self.mul = self._schoolbook_mul

        def power(a, e):
            if a == 0:
                return _zero_pow(e)
            return self._schoolbook_pow(a, e % qm1)

        def inv(a):
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return self._schoolbook_pow(a, qm1 - 1)

        self.pow = power
        self.inv = inv

    def _setup_tables(self):
        # schoolbook versions are needed for the generator search, then replaced
        self._setup_schoolbook()

    def _build_tables(self):
        q, qm1, p = self.q, self.q - 1, self.p
        g = self.generator
        exp = [0] * qm1
        log = [-1] * q
        x = 1
        for k in range(qm1):
            exp[k] = x
            log[x] = k
            x = self._schoolbook_mul(x, g)
        self._exp, self._log = exp, log
        exp2 = exp + exp
        self._exp2 = exp2

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp2[log[a] + log[b]]

        def inv(a):
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return exp[-log[a] % qm1]

        def power(a, e):
            if a == 0:
                return _zero_pow(e)
            return exp[(log[a] * e) % qm1]

        self.mul, self.inv, self.pow = mul, inv, power
        if p == 2:
            return
        # Zech logarithms: zech[k] = log(1 + g^k), -1 where 1 + g^k = 0
        zech = [-1] * qm1
        for k in range(qm1):
            v = exp[k]
            c0 = v % p
            s = v - c0 + (c0 + 1) % p
            zech[k] = log[s] if s else -1
        half = qm1 // 2  # log(-1)

        def add(a, b):
            if a == 0:
                return b
            if b == 0:
                return a
            la = log[a]
            z = zech[(log[b] - la) % qm1]
            if z < 0:
                return 0
            return exp2[la + z]

        def neg(a):
            if a == 0:
                return 0
            return exp2[log[a] + half]

        def sub(a, b):
            if b == 0:
                return a
            return add(a, exp2[log[b] + half])

        self.add, self.neg, self.sub = add, neg, sub
        self._zech = zech

    def _find_generator(self) -> int:
        """Smallest encoding of multiplicative order q - 1."""
        qm1 = self.q - 1
        if qm1 == 1:
            return 1
        cofactors = [qm1 // r for r in sympy.factorint(qm1)]
        for g in range(1, self.q):
            if all(self.pow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("no generator")  # pragma: no cover

    # element construction
    def __call__(self, value) -> FieldElement:
        """Coerce an int (prime-subfield value), digit sequence or element."""
        if isinstance(value, FieldElement):
            if value.spec is not self:
                raise SpecMismatch(f"element of {value.spec} used in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        digits = list(value)
        if len(digits) > self.n:
            raise ValueError(f"too many digits for {self}")
        return FieldElement(self, self.encode(digits))

    def element(self, encoding: int) -> FieldElement:
        """Element with the given internal encoding."""
        if not 0 <= encoding < self.q:
            raise ValueError("encoding out of range")
        return FieldElement(self, encoding)

    def elements(self):
        """All elements in canonical (encoding) order."""
        return [FieldElement(self, v) for v in range(self.q)]

    def nonzero(self):
        return [FieldElement(self, v) for v in range(1, self.q)]

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    @property
    def gen(self) -> FieldElement:
        """The canonical multiplicative generator."""
        return FieldElement(self, self.generator)

    @property
    def t(self) -> FieldElement:
        """Class of the indeterminate (equals the integer 0 in a prime field)."""
        return FieldElement(self, self.p % self.q if self.n > 1 else 0)

    def __repr__(self):
        return f"GF({self.p}^{self.n})"

    def __reduce__(self):
        return (make_field, (self.p, self.n))


def _zero_pow(e):
    if e < 0:
        raise DivisionByZero("zero to a negative power")
    return 1 if e == 0 else 0


class FieldElement:
    """An element of a FieldSpec. Immutable and hashable."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.digits(self.value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec is not self.spec:
                raise SpecMismatch(f"{self.spec} vs {other.spec}")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.spec, self.spec.mul(o, self.spec.inv(self.value)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec is other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.n, self.value))

    def __repr__(self):
        return f"{self.spec!r}({format_element(self)})"

    def __str__(self):
        return format_element(self)


# -- construction -------------------------------------------------------------

@functools.cache
def _build_field(p: int, n: int, table_limit: int) -> FieldSpec:
    return FieldSpec(p, n, table_limit)


def make_field(p: int, n: int = 1, max_order: int | None = None,
               table_limit: int | None = None) -> FieldSpec:
    """Return GF(p^n) with its canonical modulus.

    Raises NotPrime for composite p and SizeExceeded if p^n is above the bound.
    """
    if not isinstance(p, int) or not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be positive")
    bound = DEFAULT_LIMITS.max_field_order if max_order is None else max_order
    if p**n > bound:
        raise SizeExceeded(f"{p}^{n} exceeds field order bound {bound}")
    limit = DEFAULT_LIMITS.table_limit if table_limit is None else table_limit
    return _build_field(p, n, limit)


def parse_field(text: str, max_order: int | None = None) -> FieldSpec:
    """Parse the "p^n" notation; a bare prime power such as "9" is also accepted."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*", text)
    if not m:
        raise ParseError(f"bad field notation {text!r}, expected p^n")
    p, n = int(m.group(1)), int(m.group(2) or 1)
    if m.group(2) is None and p > 1 and not sympy.isprime(p):
        factors = sympy.factorint(p)
        if len(factors) == 1:
            (p, n), = factors.items()
    return make_field(p, n, max_order=max_order)


def format_element(x: FieldElement) -> str:
    """Bare integer for prime-subfield elements, else "[c0,...,c_{n-1}]"."""
    d = x.coeffs
    if all(c == 0 for c in d[1:]):
        return str(d[0])
    return "[" + ",".join(map(str, d)) + "]"


def parse_element(spec: FieldSpec, text: str) -> FieldElement:
    text = text.strip()
    try:
        if text.startswith("["):
            if not text.endswith("]"):
                raise ParseError(f"unbalanced bracket in {text!r}")
            body = text[1:-1].strip()
            digits = [int(t) for t in body.split(",")] if body else []
            return spec(digits)
        return spec(int(text))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad field element {text!r}: {exc}") from exc


# -- structure maps -------------------------------------------------------------

def frobenius(x: FieldElement, i: int = 1) -> FieldElement:
    """x^(p^i); i is taken modulo n."""
    spec = x.spec
    return x ** (spec.p ** (i % spec.n))


def norm(x: FieldElement, d: int, base_exponent: int = 1) -> FieldElement:
    """Norm from GF(Q^N) down to GF(Q^d), where Q = p^base_exponent and N = n / base_exponent.

    Returns x^((Q^N - 1)/(Q^d - 1)).
    """
    spec = x.spec
    if base_exponent < 1 or spec.n % base_exponent:
        raise NotADivisor(f"base exponent {base_exponent} does not divide {spec.n}")
    big_n = spec.n // base_exponent
    if d < 1 or big_n % d:
        raise NotADivisor(f"{d} does not divide {big_n}")
    Q = spec.p**base_exponent
    return x ** ((Q**big_n - 1) // (Q**d - 1))


def is_dth_power(x: FieldElement, d: int) -> bool:
    if not x:
        raise ZeroInput("is_dth_power is defined on nonzero elements")
    qm1 = x.spec.q - 1
    return x ** (qm1 // math.gcd(d, qm1)) == 1


def primitive_root_of_unity(spec: FieldSpec, d: int) -> FieldElement:
    """Deterministic element of order exactly d, a power of the canonical generator."""
    qm1 = spec.q - 1
    if d < 1 or qm1 % d:
        raise NotADivisor(f"{d} does not divide q - 1 = {qm1}")
    return spec.gen ** (qm1 // d)
