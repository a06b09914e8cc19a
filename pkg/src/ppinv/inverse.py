"""Permutation tests and the two generic inversion algorithms.

``invert_lagrange`` interpolates the reversed value table and is the
brute-force oracle used throughout the test-suite.  ``invert_coeff_formula``
reads every coefficient of the inverse off a single power of f: when f(0) = 0,
the coefficient of x^i in f^{-1} equals the coefficient of x^(q-2) in
f^(q-1-i) mod x^q - x.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_LIMITS
from .errors import FieldTooSmall, NonzeroConstantTerm, NotAPermutation, SizeExceeded
from .field import FieldSpec
from .poly import Poly, _mul_raw, lagrange_interpolate, reduce_mod_xq_minus_x, value_table

__all__ = [
    "InverseResult",
    "is_permutation",
    "invert_lagrange",
    "invert_coeff_formula",
    "inverse_coefficients",
    "verify_inverse",
    "classify_normalized_pps",
    "random_pp",
]


@dataclass(frozen=True)
class InverseResult:
    inverse: Poly
    method: str  # "lagrange", "coeff-formula" or "closed-form:<row id>"
    verified: bool


def _is_bijective(values: list[int], q: int) -> bool:
    seen = bytearray(q)
    for v in values:
        if seen[v]:
            return False
        seen[v] = 1
    return True


def is_permutation(f: Poly) -> bool:
    return _is_bijective(value_table(f), f.spec.q)


def verify_inverse(f: Poly, g: Poly) -> bool:
    """True iff g(f(c)) = c for every c in F_q, checked pointwise."""
    fv = value_table(f)
    gv = value_table(g)
    return all(gv[fv[c]] == c for c in range(f.spec.q))


def invert_lagrange(f: Poly) -> InverseResult:
    spec = f.spec
    fv = value_table(f)
    if not _is_bijective(fv, spec.q):
        raise NotAPermutation(f"{f} does not permute {spec}")
    pairs = [(spec.element(fv[c]), spec.element(c)) for c in range(spec.q)]
    g = lagrange_interpolate(spec, pairs)
    return InverseResult(g, "lagrange", verify_inverse(f, g))


def inverse_coefficients(f: Poly) -> list:
    """[b_1, ..., b_{q-2}]: b_i is the x^(q-2) coefficient of f^(q-1-i) mod x^q - x.

    Powers f^1, ..., f^(q-2) are built incrementally, one multiplication each.
    """
    spec = f.spec
    q = spec.q
    fr = reduce_mod_xq_minus_x(f)._c
    target = q - 2
    top = [0] * (q - 1)  # top[k] = coefficient of x^(q-2) in f^k
    power = list(fr)
    for k in range(1, q - 1):
        if k > 1:
            power = _mul_raw(spec, power, fr, q)
        top[k] = power[target] if target < len(power) else 0
    return [spec.element(top[q - 1 - i]) for i in range(1, q - 1)]


def invert_coeff_formula(f: Poly) -> InverseResult:
    spec = f.spec
    if spec.q < 3:
        raise FieldTooSmall("the coefficient formula needs q >= 3")
    if f.coeff(0):
        raise NonzeroConstantTerm("the coefficient formula needs f(0) = 0")
    if not is_permutation(f):
        raise NotAPermutation(f"{f} does not permute {spec}")
    coeffs = inverse_coefficients(f)
    g = Poly(spec, [spec.zero] + coeffs)
    return InverseResult(g, "coeff-formula", verify_inverse(f, g))


def _normalized_shapes(spec: FieldSpec, m: int):
    """Free coefficient positions of a normalized polynomial of degree m."""
    free = list(range(1, m))
    if m % spec.p and m - 1 >= 1:
        free.remove(m - 1)
    return free


def classify_normalized_pps(spec: FieldSpec, max_degree: int,
                            cap: int | None = None) -> list[Poly]:
    """Every normalized PP of degree 1..max_degree over spec.

    Ordered by degree, then by the coefficient encodings read from x^(m-1) down.
    """
    if max_degree > 7:
        raise ValueError("max_degree is at most 7")
    cap = DEFAULT_LIMITS.classify_cap if cap is None else cap
    total = sum(spec.q ** len(_normalized_shapes(spec, m)) for m in range(1, max_degree + 1))
    if total > cap:
        raise SizeExceeded(f"{total} candidates exceeds cap {cap}")
    if 1 < spec.q <= _VECTOR_Q:
        return _classify_vectorized(spec, max_degree)
    q = spec.q
    out = []
    for m in range(1, max_degree + 1):
        free = _normalized_shapes(spec, m)
        base = [0] * (m + 1)
        base[m] = 1
        for combo in itertools.product(range(q), repeat=len(free)):
            c = list(base)
            # most significant position first, so iterate free positions high-to-low
            for pos, v in zip(reversed(free), combo):
                c[pos] = v
            f = Poly.from_encodings(spec, c)
            if is_permutation(f):
                out.append(f)
    return out


_VECTOR_Q = 1024


def _classify_vectorized(spec: FieldSpec, max_degree: int) -> list[Poly]:
    """Same enumeration as the scalar loop, on value vectors.

    Partial sums are shared along a depth-first walk over the free
    coefficients, and all q choices of the lowest one are tested at once.
    """
    q, p, n = spec.q, spec.p, spec.n
    digits = np.array([spec.digits(v) for v in range(q)], dtype=np.int64).reshape(q, n)
    weights = np.array([p**i for i in range(n)], dtype=np.int64)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights  # add[a, b] = a + b
    xs = [spec.element(c) for c in range(q)]
    coeffs = [spec.element(v) for v in range(q)]
    target = np.arange(q)

    def term_table(k):
        powers = [c**k for c in xs]
        return np.array([[(v * w).value for w in powers] for v in coeffs], dtype=np.int64)

    out = []
    for m in range(1, max_degree + 1):
        free = sorted(_normalized_shapes(spec, m), reverse=True)
        lead = term_table(m)[1]
        tables = [term_table(k) for k in free]

        def walk(depth, acc, chosen):
            if depth == len(free) - 1:
                rows = add[acc[None, :], tables[depth]]
                ok = np.all(np.sort(rows, axis=1) == target, axis=1)
                for v in np.flatnonzero(ok):
                    out.append(_from_choice(spec, m, free, chosen + [int(v)]))
                return
            for v in range(q):
                walk(depth + 1, add[acc, tables[depth][v]], chosen + [v])

        if free:
            walk(0, lead, [])
        elif np.array_equal(np.sort(lead), target):
            out.append(_from_choice(spec, m, free, []))
    return out


def _from_choice(spec, m, free, values):
    c = [0] * (m + 1)
    c[m] = 1
    for pos, v in zip(free, values):
        c[pos] = v
    return Poly.from_encodings(spec, c)


def random_pp(spec: FieldSpec, rng: random.Random, fix_zero: bool = True) -> Poly:
    """Interpolate a uniformly random permutation of F_q (fixing 0 if asked)."""
    q = spec.q
    if fix_zero:
        rest = list(range(1, q))
        rng.shuffle(rest)
        perm = [0] + rest
    else:
        perm = list(range(q))
        rng.shuffle(perm)
    pairs = [(spec.element(c), spec.element(perm[c])) for c in range(q)]
    return lagrange_interpolate(spec, pairs)
