"""Closed-form inverses of specific permutation polynomial families.

Every function here returns a concrete Poly (reduced modulo x^q - x) for a
concrete field and concrete parameters; nothing is symbolic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field

import numpy as np
import sympy

from .errors import (
    CharacteristicDividesD,
    ConsistencyFailure,
    DenominatorZero,
    NotAPermutation,
    NotCoprime,
    SizeExceeded,
    ZeroLeadingCoefficient,
)
from .field import FieldElement, FieldSpec, make_field, norm, primitive_root_of_unity
from .poly import Poly, mulmod, reduce_exponent, reduce_mod_xq_minus_x

__all__ = [
    "invert_linear",
    "monomial_inverse_exponent",
    "invert_monomial",
    "DicksonParams",
    "dickson_poly",
    "dickson_mod",
    "invert_dickson",
    "linearized_binomial",
    "invert_linearized_binomial",
    "dickson_matrix",
    "linearized_is_pp",
    "invert_linearized",
    "SSequence",
    "s_sequence",
    "linearized_trinomial",
    "invert_linearized_trinomial",
    "count_trinomial_pps",
    "quintic_pp",
    "invert_quintic_main",
    "invert_quintic_ordered_pairs",
    "quintic_pointwise",
    "CyclotomicSpec",
    "cyclotomic_map",
    "cyclotomic_is_pp",
    "invert_cyclotomic",
    "random_cyclotomic_spec",
]


def _sparse(spec: FieldSpec, terms) -> Poly:
    """Sum of (exponent, coefficient) pairs, exponents reduced mod x^q - x."""
    acc: dict[int, FieldElement] = {}
    for e, c in terms:
        k = reduce_exponent(e, spec.q)
        acc[k] = acc.get(k, spec.zero) + c
    return Poly.from_terms(spec, acc)


# -- linear and monomial -------------------------------------------------------

def invert_linear(a: FieldElement, b: FieldElement) -> Poly:
    """Inverse of ax + b."""
    if not a:
        raise ZeroLeadingCoefficient("ax + b with a = 0 is not a permutation")
    ai = a.inverse()
    return Poly(a.spec, [-(ai * b), ai])


def monomial_inverse_exponent(m: int, q: int) -> int:
    """(kq - k + 1)/m with k = -(q-1)^(phi(m)-1) mod m; the inverse of m mod q - 1."""
    if math.gcd(m, q - 1) != 1:
        raise NotCoprime(f"gcd({m}, {q - 1}) != 1")
    k = -pow(q - 1, int(sympy.totient(m)) - 1, m) % m
    num = k * q - k + 1
    if num % m:
        raise ConsistencyFailure(f"exponent {num}/{m} is not integral")
    e = num // m
    if (m * e - 1) % (q - 1):
        raise ConsistencyFailure(f"{m}*{e} is not 1 mod {q - 1}")
    return e


def invert_monomial(m: int, spec: FieldSpec) -> Poly:
    return Poly.monomial(spec, monomial_inverse_exponent(m, spec.q))


# -- Dickson polynomials ----------------------------------------------------------

@dataclass(frozen=True)
class DicksonParams:
    n: int
    a: FieldElement


def _dickson_int_coeffs(n: int) -> list[int]:
    out = []
    for i in range(n // 2 + 1):
        num = n * math.comb(n - i, i)
        if num % (n - i):
            raise ConsistencyFailure(f"Dickson coefficient {num}/{n - i} not integral")
        out.append(num // (n - i))
    return out


def dickson_poly(params: DicksonParams, spec: FieldSpec | None = None) -> Poly:
    """D_n(x, a) = sum_i n/(n-i) C(n-i, i) (-a)^i x^(n-2i), unreduced."""
    n, a = params.n, params.a
    spec = a.spec if spec is None else spec
    a = spec(a)
    if n < 1:
        raise ValueError("Dickson degree must be positive")
    terms = {}
    neg_a_pow = spec.one
    for i, c in enumerate(_dickson_int_coeffs(n)):
        terms[n - 2 * i] = neg_a_pow * (c % spec.p)
        neg_a_pow = neg_a_pow * (-a)
    return Poly.from_terms(spec, terms)


def dickson_mod(n: int, a: FieldElement) -> Poly:
    """D_n(x, a) mod x^q - x via the doubling ladder

    D_{2k} = D_k^2 - 2a^k,  D_{2k+1} = D_k D_{k+1} - a^k x.
    """
    spec = a.spec
    x = Poly.x(spec)
    two = Poly.constant(spec, 2)
    if n == 0:
        return two
    lo, hi, k = x, reduce_mod_xq_minus_x(x * x - two * a), 1  # (D_k, D_{k+1})
    for bit in bin(n)[3:]:
        ak = a**k
        if bit == "0":
            lo, hi = mulmod(lo, lo) - 2 * ak, mulmod(lo, hi) - x * ak
            k = 2 * k
        else:
            lo, hi = mulmod(lo, hi) - x * ak, mulmod(hi, hi) - 2 * (ak * a)
            k = 2 * k + 1
    return lo


def invert_dickson(params: DicksonParams, spec: FieldSpec | None = None) -> Poly:
    """Inverse of D_n(x, a): D_m(x, a^n) with m n = 1 mod q^2 - 1."""
    spec = params.a.spec if spec is None else spec
    a = spec(params.a)
    q = spec.q
    if math.gcd(params.n, q * q - 1) != 1:
        raise NotCoprime(f"gcd({params.n}, q^2 - 1) != 1 for q = {q}")
    m = pow(params.n, -1, q * q - 1)
    an = a**params.n
    if m > 4 * q:
        return dickson_mod(m, an)
    return reduce_mod_xq_minus_x(dickson_poly(DicksonParams(m, an), spec))


# -- linearized polynomials ----------------------------------------------------------

def _tower(spec: FieldSpec, base_exponent: int) -> tuple[int, int]:
    if base_exponent < 1 or spec.n % base_exponent:
        raise ValueError(f"base exponent {base_exponent} does not divide {spec.n}")
    return spec.p**base_exponent, spec.n // base_exponent


def linearized_binomial(r: int, a: FieldElement, base_exponent: int = 1) -> Poly:
    """x^(Q^r) - a x over GF(Q^N), Q = p^base_exponent."""
    spec = a.spec
    Q, _ = _tower(spec, base_exponent)
    return Poly.from_terms(spec, {Q**r: spec.one, 1: -a})


def invert_linearized_binomial(r: int, a: FieldElement, base_exponent: int = 1) -> Poly:
    """Inverse of x^(Q^r) - a x over GF(Q^N).

    With d = gcd(N, r) and nu the norm of a down to GF(Q^d):
        nu/(1 - nu) * sum_{i < N/d} a^(-(Q^((i+1)r) - 1)/(Q^r - 1)) x^(Q^(ir)).
    r = N is accepted; the map is then (1 - a)x.
    """
    spec = a.spec
    Q, N = _tower(spec, base_exponent)
    if not a:
        raise NotAPermutation("a = 0 gives a monomial, not covered here")
    if not 1 <= r <= N:
        raise ValueError(f"r must be in [1, {N}]")
    d = math.gcd(N, r)
    nu = norm(a, d, base_exponent)
    if nu == 1:
        raise NotAPermutation("norm of a is 1")
    pref = nu / (1 - nu)
    step = Q**r - 1
    terms = []
    for i in range(N // d):
        num = Q ** ((i + 1) * r) - 1
        terms.append((Q ** (i * r), pref * a ** (-(num // step))))
    return _sparse(spec, terms)


def dickson_matrix(coeffs: list[FieldElement], base_exponent: int = 1) -> list[list[FieldElement]]:
    """Matrix with row k = (a_{(j-k) mod N}^(Q^k))_j for L = sum a_i x^(Q^i)."""
    spec = coeffs[0].spec
    Q, N = _tower(spec, base_exponent)
    a = list(coeffs) + [spec.zero] * (N - len(coeffs))
    return [[a[(j - k) % N] ** (Q**k) for j in range(N)] for k in range(N)]


def _det(rows: list[list[FieldElement]]) -> FieldElement:
    m = [list(r) for r in rows]
    size = len(m)
    spec = m[0][0].spec if size else None
    det = spec.one
    for col in range(size):
        piv = next((r for r in range(col, size) if m[r][col]), None)
        if piv is None:
            return spec.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, size):
            f = m[r][col] * inv
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def linearized_is_pp(coeffs: list[FieldElement], base_exponent: int = 1) -> bool:
    """L = sum a_i x^(Q^i) permutes GF(Q^N) iff its Dickson matrix is nonsingular."""
    return bool(_det(dickson_matrix(coeffs, base_exponent)))


def invert_linearized(coeffs: list[FieldElement], base_exponent: int = 1) -> Poly:
    """det(D_L)^-1 * sum_i cof_i x^(Q^i), cof_i the (i, 0) cofactor of D_L."""
    spec = coeffs[0].spec
    Q, N = _tower(spec, base_exponent)
    D = dickson_matrix(coeffs, base_exponent)
    det = _det(D)
    if not det:
        raise NotAPermutation("Dickson matrix is singular")
    dinv = det.inverse()
    terms = []
    for i in range(N):
        minor = [row[1:] for k, row in enumerate(D) if k != i]
        cof = _det(minor) if minor else spec.one
        if i % 2:
            cof = -cof
        terms.append((Q**i, dinv * cof))
    return _sparse(spec, terms)


# -- x^4 + b x^2 + a x over GF(2^n) --------------------------------------------------------

@dataclass(frozen=True)
class SSequence:
    a: FieldElement
    b: FieldElement
    values: tuple[FieldElement, ...]  # S_{-1}, S_0, ..., S_n

    def __getitem__(self, i: int) -> FieldElement:
        """S_i for -1 <= i <= n."""
        if i < -1:
            raise IndexError(i)
        return self.values[i + 1]

    @property
    def n(self) -> int:
        return len(self.values) - 2

    @property
    def z(self) -> FieldElement:
        """S_n + a S_{n-2}^2, which is always 0 or 1."""
        return self[self.n] + self.a * self[self.n - 2] ** 2


def s_sequence(a: FieldElement, b: FieldElement, n: int | None = None) -> SSequence:
    """S_{-1} = 0, S_0 = 1, S_i = b^(2^(i-1)) S_{i-1} + a^(2^(i-1)) S_{i-2}.

    Cross-checked against S_i = b S_{i-1}^2 + a^2 S_{i-2}^4 at every step.
    """
    spec = a.spec
    if spec.p != 2:
        raise ValueError("the S-sequence lives in characteristic 2")
    if not a or not b:
        raise ValueError("a and b must be nonzero")
    n = spec.n if n is None else n
    vals = [spec.zero, spec.one]
    for i in range(1, n + 1):
        e = 2 ** (i - 1)
        s = b**e * vals[-1] + a**e * vals[-2]
        alt = b * vals[-1] ** 2 + a * a * vals[-2] ** 4
        if s != alt:
            raise ConsistencyFailure(f"S_{i}: recurrences disagree ({s} vs {alt})")
        vals.append(s)
    seq = SSequence(a, b, tuple(vals))
    if n == spec.n and seq.z not in (0, 1):
        raise ConsistencyFailure(f"S_n + a S_(n-2)^2 = {seq.z} is neither 0 nor 1")
    return seq


def linearized_trinomial(a: FieldElement, b: FieldElement) -> Poly:
    spec = a.spec
    return Poly.from_terms(spec, {4: spec.one, 2: b, 1: a})


def invert_linearized_trinomial(a: FieldElement, b: FieldElement) -> Poly:
    """Inverse of x^4 + b x^2 + a x over GF(2^n):
    sum_{i<n} (S_{n-2-i}^(2^(i+1)) + a^(1-2^(i+1)) S_i) x^(2^i).
    """
    spec = a.spec
    S = s_sequence(a, b)
    n = spec.n
    if S.z != 1:
        raise NotAPermutation("S_n + a S_(n-2)^2 = 0")
    terms = []
    for i in range(n):
        e = 2 ** (i + 1)
        terms.append((2**i, S[n - 2 - i] ** e + a ** (1 - e) * S[i]))
    return _sparse(spec, terms)


def count_trinomial_pps(n: int, max_order: int = 2**16) -> tuple[int, int]:
    """(number of a, b in GF(2^n)* with S_n + a S_{n-2}^2 = 1, (2^n-1)(2^n-(-1)^n)/3).

    The count is exhaustive; for each b all a are processed at once with numpy.
    """
    q = 2**n
    if q > max_order:
        raise SizeExceeded(f"2^{n} exceeds {max_order}")
    formula = (q - 1) * (q - (-1) ** n) // 3
    spec = make_field(2, n)
    if not spec.has_tables:
        count = 0
        for av in range(1, q):
            for bv in range(1, q):
                if s_sequence(spec.element(av), spec.element(bv)).z == 1:
                    count += 1
        return count, formula
    qm1 = q - 1
    log = np.array(spec._log, dtype=np.int64)
    exp = np.array(spec._exp, dtype=np.int64)

    def vmul(x, y):
        prod = exp[(log[x] + log[y]) % qm1]
        return np.where((x == 0) | (y == 0), 0, prod)

    a_vals = np.arange(1, q, dtype=np.int64)
    a_log = log[a_vals]
    a_pows = [exp[(a_log * 2 ** (i - 1)) % qm1] for i in range(1, n + 1)]
    count = 0
    for bv in range(1, q):
        lb = spec._log[bv]
        hist = [np.zeros(qm1, dtype=np.int64), np.ones(qm1, dtype=np.int64)]
        for i in range(1, n + 1):
            bp = np.full(qm1, spec._exp[(lb * 2 ** (i - 1)) % qm1], dtype=np.int64)
            hist.append(vmul(bp, hist[-1]) ^ vmul(a_pows[i - 1], hist[-2]))
        s_n, s_nm2 = hist[n + 1], hist[n - 1]
        z = s_n ^ vmul(a_vals, vmul(s_nm2, s_nm2))
        count += int(np.count_nonzero(z == 1))
    return count, formula


# -- x^5 - 2a x^3 + a^2 x over GF(5^n) --------------------------------------------------

def quintic_pp(a: FieldElement) -> Poly:
    spec = a.spec
    return Poly.from_terms(spec, {5: spec.one, 3: -2 * a, 1: a * a})


def _check_quintic(a: FieldElement):
    spec = a.spec
    if spec.p != 5:
        raise ValueError("the quintic family lives in characteristic 5")
    if not a or a ** ((spec.q - 1) // 2) != -1:
        raise NotAPermutation("a must be a non-square")


def invert_quintic_main(a: FieldElement) -> Poly:
    """sum_{0<=i<=j<n} b_ij a^(-(5^n + 5^(i+1) + 5^(j+1) - 3)/4) x^((5^n + 5^i + 5^j - 1)/2),
    b_ij = 3 on the diagonal and 1 above it.
    """
    _check_quintic(a)
    spec = a.spec
    n, q = spec.n, spec.q
    terms = []
    for i in range(n):
        for j in range(i, n):
            ea, ra = divmod(q + 5 ** (i + 1) + 5 ** (j + 1) - 3, 4)
            ex, rx = divmod(q + 5**i + 5**j - 1, 2)
            if ra or rx:
                raise ConsistencyFailure("non-integral exponent")
            terms.append((ex, a ** (-ea) * (3 if i == j else 1)))
    return _sparse(spec, terms)


def invert_quintic_ordered_pairs(a: FieldElement) -> Poly:
    """Same inverse written over ordered pairs (i, j):
    sum_{i,j<n} 2 a^((q - 5^(i+1) - 5^(j+1) + 1)/4) x^((q + 5^i + 5^j - 1)/2).
    """
    _check_quintic(a)
    spec = a.spec
    n, q = spec.n, spec.q
    terms = []
    for i in range(n):
        for j in range(n):
            ea = (q - 5 ** (i + 1) - 5 ** (j + 1) + 1) // 4
            terms.append(((q + 5**i + 5**j - 1) // 2, 2 * a**ea))
    return _sparse(spec, terms)


def quintic_pointwise(a: FieldElement, x: FieldElement) -> FieldElement:
    """Evaluate the inverse at x without building a polynomial.

    With u = a/x^2 and nu = u^((q-1)/4):
        x * (nu/(1-nu) * sum_{i<n} u^(-(5^(i+1)-1)/4) (1/x^2)^(5^i))^2,  and 0 at x = 0.
    """
    _check_quintic(a)
    spec = a.spec
    x = spec(x)
    if not x:
        return spec.zero
    x2inv = (x * x).inverse()
    u = a * x2inv
    nu = u ** ((spec.q - 1) // 4)
    den = 1 - nu
    if not den:
        raise DenominatorZero(f"1 - (a/x^2)^((q-1)/4) vanishes at x = {x}")
    s = spec.zero
    for i in range(spec.n):
        s = s + u ** (-((5 ** (i + 1) - 1) // 4)) * x2inv ** (5**i)
    t = nu / den * s
    return x * t * t


# -- generalized cyclotomic mappings -----------------------------------------------------

@dataclass(frozen=True)
class CyclotomicSpec:
    """x -> a_i x^(r_i) on the coset {x : x^s = omega^i}, with q - 1 = d s."""

    field: FieldSpec
    d: int
    s: int
    omega: FieldElement
    a: tuple[FieldElement, ...]
    r: tuple[int, ...]
    branch: tuple[tuple[int, int], ...] = dc_field(default=(), compare=False)

    def __post_init__(self):
        q = self.field.q
        if self.d * self.s != q - 1:
            raise ValueError(f"d*s = {self.d * self.s} != q - 1 = {q - 1}")
        if len(self.a) != self.d or len(self.r) != self.d:
            raise ValueError("need exactly d coefficients and d exponents")
        if self.omega ** self.d != 1 or any(self.omega**k == 1 for k in range(1, self.d)):
            raise ValueError("omega must have order exactly d")
        if any(not ai for ai in self.a):
            raise ValueError("all a_i must be nonzero")
        if any(not 1 <= ri < self.s for ri in self.r):
            raise ValueError(f"each r_i must satisfy 1 <= r_i < s = {self.s}")
        # (r~_i, t_i) with r_i r~_i + s t_i = 1, 1 <= r~_i < s (when gcd(r_i, s) = 1)
        branch = []
        for ri in self.r:
            if math.gcd(ri, self.s) == 1:
                rt = pow(ri, -1, self.s) if self.s > 1 else 1
                branch.append((rt, (1 - ri * rt) // self.s))
            else:
                branch.append((0, 0))
        object.__setattr__(self, "branch", tuple(branch))

    @classmethod
    def build(cls, field: FieldSpec, d: int, a, r) -> CyclotomicSpec:
        """Use the canonical primitive d-th root of unity."""
        return cls(field, d, (field.q - 1) // d, primitive_root_of_unity(field, d),
                   tuple(field(x) for x in a), tuple(r))


def cyclotomic_map(cs: CyclotomicSpec) -> Poly:
    """(1/d) sum_{i,j<d} a_i omega^(-ij) x^(r_i + j s)."""
    spec = cs.field
    dinv = spec(cs.d).inverse() if cs.d % spec.p else None
    if dinv is None:
        raise CharacteristicDividesD(f"p divides d = {cs.d}")
    terms = []
    for i in range(cs.d):
        for j in range(cs.d):
            terms.append((cs.r[i] + j * cs.s, dinv * cs.a[i] * cs.omega ** (-i * j)))
    return _sparse(spec, terms)


def cyclotomic_is_pp(cs: CyclotomicSpec) -> bool:
    """gcd(prod r_i, s) = 1 and {a_i^s omega^(i r_i)} is all of U_d."""
    if math.gcd(math.prod(cs.r), cs.s) != 1:
        return False
    images = {(cs.a[i] ** cs.s * cs.omega ** (i * cs.r[i])).value for i in range(cs.d)}
    return len(images) == cs.d


def invert_cyclotomic(cs: CyclotomicSpec) -> Poly:
    """(1/d) sum_{i,j<d} omega^(i(t_i - j r_i)) (x/a_i)^(r~_i + j s)."""
    spec = cs.field
    if cs.d % spec.p == 0:
        raise CharacteristicDividesD(f"p divides d = {cs.d}")
    if not cyclotomic_is_pp(cs):
        raise NotAPermutation("cyclotomic permutation criterion fails")
    dinv = spec(cs.d).inverse()
    terms = []
    for i in range(cs.d):
        rt, t = cs.branch[i]
        ainv = cs.a[i].inverse()
        for j in range(cs.d):
            e = rt + j * cs.s
            terms.append((e, dinv * cs.omega ** (i * (t - j * cs.r[i])) * ainv**e))
    return _sparse(spec, terms)


def random_cyclotomic_spec(field: FieldSpec, d: int, rng: random.Random,
                           max_tries: int = 10_000) -> CyclotomicSpec:
    """Rejection-sample a CyclotomicSpec satisfying the permutation criterion."""
    s = (field.q - 1) // d
    for _ in range(max_tries):
        r = [rng.randrange(1, s) for _ in range(d)]
        a = [field.element(rng.randrange(1, field.q)) for _ in range(d)]
        cs = CyclotomicSpec.build(field, d, a, r)
        if cyclotomic_is_pp(cs):
            return cs
    raise RuntimeError(f"no valid cyclotomic spec found for {field}, d = {d}")
