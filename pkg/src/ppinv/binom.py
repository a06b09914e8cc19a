"""Binomial coefficients mod p and the mod-5 congruences behind the quintic inverse.

Every binomial that enters a check is evaluated twice: once with Lucas' digit
product and once as an exact integer reduced mod p.  A disagreement is counted
as a failure of the check that requested it.

Notation, with q = 5^n, h = (q-1)/2 and T = (q-5)/10:
    A(m) = C(5m+3, m)          B(m) = C(5m+2, m-1)       D(m) = C(5m+2, m)
    alpha/beta(m) = C(5m+3+h, m+h)                       C(m) = C(5m+2+h, m-1+h)
"""

from __future__ import annotations

import functools
import itertools
import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .closed_forms import _check_quintic
from .config import DEFAULT_LIMITS
from .errors import ConsistencyFailure, EvenIndex, OutOfRange, SizeExceeded
from .field import FieldElement
from .poly import Poly

__all__ = [
    "BasePDigits",
    "lucas_binom_mod_p",
    "gen_binom",
    "binom_mod",
    "binom_shift_check",
    "quintic_binom_A",
    "quintic_A_decomposition",
    "EmkTable",
    "emk_row",
    "quintic_coeff_via_emk",
    "quintic_inverse_via_emk",
    "TheoremReport",
    "CongruenceReport",
    "congruence_suite",
    "theorem_predicate_equivalences",
]


@dataclass(frozen=True)
class BasePDigits:
    p: int
    digits: tuple[int, ...]  # low to high

    def __post_init__(self):
        if any(not 0 <= d < self.p for d in self.digits):
            raise ValueError(f"digits {self.digits} out of range for base {self.p}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("trailing zero digit")

    @classmethod
    def of(cls, value: int, p: int) -> BasePDigits:
        if value < 0:
            raise ValueError("base-p digits of a negative integer")
        out = []
        while value:
            value, d = divmod(value, p)
            out.append(d)
        return cls(p, tuple(out) or (0,))

    @property
    def value(self) -> int:
        return sum(d * self.p**i for i, d in enumerate(self.digits))

    def padded(self, length: int) -> tuple[int, ...]:
        return self.digits + (0,) * (length - len(self.digits))


def lucas_binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p as the product of digit-wise binomials in base p."""
    if n < 0 or k < 0:
        raise ValueError("Lucas' theorem needs non-negative arguments")
    out = 1
    while n or k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
    return out


def gen_binom(r: int, k: int) -> int:
    """Generalized binomial r(r-1)...(r-k+1)/k!, any integer r; 0 for k < 0."""
    if k < 0:
        return 0
    if r >= 0:
        return math.comb(r, k)
    # falling factorial of a negative r: r(r-1)...(r-k+1) = (-1)^k (-r)(-r+1)...(-r+k-1)
    return (-1) ** k * math.perm(k - r - 1, k) // math.factorial(k)


@functools.lru_cache(maxsize=1 << 16)
def binom_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by two paths (Lucas and exact), which must agree."""
    if k < 0 or k > n:
        return 0
    lucas = lucas_binom_mod_p(n, k, p)
    exact = math.comb(n, k) % p
    if lucas != exact:
        raise ConsistencyFailure(f"C({n},{k}) mod {p}: Lucas {lucas} != exact {exact}")
    return lucas


def binom_shift_check(q: int, r: int, k: int) -> bool:
    """C(q + r, k) = C(r, k) mod p for 0 <= k <= q-1 (generalized binomials)."""
    if not 0 <= k <= q - 1:
        raise OutOfRange(f"k = {k} outside [0, {q - 1}]")
    p = _prime_of(q)
    return (gen_binom(q + r, k) - gen_binom(r, k)) % p == 0


def _prime_of(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            if q != 1:
                raise ValueError("q must be a prime power")
            return p
    raise ValueError("q must be a prime power")


def _rep(k: int) -> int:
    """(5^k - 1)/4 = 1 + 5 + ... + 5^(k-1)."""
    return (5**k - 1) // 4


def quintic_binom_A(m: int, n: int) -> int:
    """C(5m+3, m) mod 5 for 0 <= m <= 5^n - 1."""
    if not 0 <= m <= 5**n - 1:
        raise OutOfRange(f"m = {m} outside [0, 5^{n} - 1]")
    return binom_mod(5 * m + 3, m, 5)


def quintic_A_decomposition(m: int, n: int) -> tuple[int, int, int] | None:
    """(k1, k2, k3) with k1 <= k2 <= k3 <= n and m = sum of (5^k_i - 1)/4, if any."""
    for ks in itertools.combinations_with_replacement(range(n + 1), 3):
        if sum(map(_rep, ks)) == m:
            return ks
    return None


def _a_value_rule(ks: tuple[int, int, int]) -> int:
    k1, k2, k3 = ks
    return 1 if (k1 == k2 == k3 or k1 < k2 < k3) else 3


# -- coefficient reconstruction for x^5 - 2a x^3 + a^2 x --------------------------------

def _T(n: int) -> int:
    q = 5**n
    t1, r1 = divmod(q - 5, 10)
    t2, r2 = divmod(5 ** (n - 1) - 1, 2)
    if r1 or r2 or t1 != t2:
        raise ConsistencyFailure(f"T mismatch for n = {n}: (q-5)/10 = {t1}, (5^(n-1)-1)/2 = {t2}")
    return t1


@dataclass(frozen=True)
class EmkTable:
    q: int
    T: int
    m: int
    entries: tuple[FieldElement, FieldElement, FieldElement, FieldElement]


def emk_row(a: FieldElement, m: int) -> EmkTable:
    """e_mk = C(2q-4m-4, k(q-1)/2 + m) (-1)^(k+m) a^(-5m-2) for k = 0..3."""
    spec = a.spec
    q = spec.q
    if not 0 <= m <= (q - 3) // 2:
        raise OutOfRange(f"m = {m} outside [0, (q-3)/2]")
    h = (q - 1) // 2
    scale = a ** (-5 * m - 2)
    top = 2 * q - 4 * m - 4
    entries = tuple(
        scale * (binom_mod(top, k * h + m, 5) * (-1) ** (k + m)) for k in range(4)
    )
    return EmkTable(q, _T(spec.n), m, entries)


def quintic_coeff_via_emk(a: FieldElement, i: int) -> FieldElement:
    """Coefficient of x^i (i odd) in the inverse of x^5 - 2a x^3 + a^2 x.

    The branch on m = (i-1)/2 picks how many of e_m0..e_m3 survive; the full
    four-term sum is computed as well and must agree.
    """
    _check_quintic(a)
    q = a.spec.q
    if not 1 <= i <= q - 2:
        raise OutOfRange(f"i = {i} outside [1, q-2]")
    if i % 2 == 0:
        raise EvenIndex(f"even index {i}: the coefficient is 0")
    m = (i - 1) // 2
    row = emk_row(a, m)
    T = row.T
    if m > 4 * T + 1:
        kept = 0
    elif m > 3 * T:
        kept = 1
    elif m > 2 * T:
        kept = 2
    elif m > T:
        kept = 3
    else:
        kept = 4
    branch = sum(row.entries[:kept], a.spec.zero)
    full = sum(row.entries, a.spec.zero)
    if branch != full:
        raise ConsistencyFailure(f"branch sum {branch} != full sum {full} at m = {m}")
    return branch


def quintic_inverse_via_emk(a: FieldElement) -> Poly:
    """The whole inverse, with 0 at every even index."""
    spec = a.spec
    coeffs = [spec.zero] * (spec.q - 1)
    for i in range(1, spec.q - 1, 2):
        coeffs[i] = quintic_coeff_via_emk(a, i)
    return Poly(spec, coeffs)


# -- reports -----------------------------------------------------------------------------

@dataclass
class TheoremReport:
    id: str
    n: int
    lo: int
    hi: int
    passed: int = 0
    failed: int = 0
    first_counterexample: int | None = None
    skipped: str | None = None

    def record(self, m: int, ok: bool):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_counterexample is None:
                self.first_counterexample = m

    def line(self) -> str:
        if self.skipped:
            return f"THEOREM {self.id} n={self.n} range=skipped pass=0 fail=0 # {self.skipped}"
        out = f"THEOREM {self.id} n={self.n} range={self.lo}..{self.hi} pass={self.passed} fail={self.failed}"
        if self.first_counterexample is not None:
            out += f" first_counterexample=m={self.first_counterexample}"
        return out


@dataclass
class CongruenceReport:
    n: int
    theorems: list[TheoremReport] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(t.failed for t in self.theorems)

    def lines(self) -> list[str]:
        return [t.line() for t in self.theorems]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _check_n(n: int, bound: int | None):
    bound = DEFAULT_LIMITS.congruence_max_n if bound is None else bound
    if n < 1:
        raise OutOfRange("n must be at least 1")
    if n > bound:
        raise SizeExceeded(f"n = {n} exceeds bound {bound}")


def _run(report: CongruenceReport, tid: str, n: int, lo: int, hi: int,
         check: Callable[[int], bool], min_n: int = 1):
    t = TheoremReport(tid, n, lo, hi)
    if n < min_n:
        t.skipped = f"requires n>={min_n}"
    else:
        for m in range(lo, hi + 1):
            try:
                ok = check(m)
            except ConsistencyFailure:
                ok = False
            t.record(m, ok)
    report.theorems.append(t)


def _b5(top: int, bottom: int) -> int:
    return binom_mod(top, bottom, 5)


@functools.lru_cache(maxsize=1 << 16)
def _g5(top: int, bottom: int) -> int:
    """Generalized binomial mod 5; for non-negative top it is checked against Lucas."""
    exact = gen_binom(top, bottom) % 5
    if top >= 0 and bottom >= 0 and lucas_binom_mod_p(top, bottom, 5) != exact:
        raise ConsistencyFailure(f"C({top},{bottom}): Lucas and exact paths disagree")
    return exact


def congruence_suite(n: int, bound: int | None = None) -> CongruenceReport:
    """Check every mod-5 value and congruence statement over its full m-range."""
    _check_n(n, bound)
    q = 5**n
    h = (q - 1) // 2
    T = _T(n)
    rep = CongruenceReport(n)

    def A(m):
        return _b5(5 * m + 3, m)

    def B(m):
        return _b5(5 * m + 2, m - 1)

    def C(m):
        return _b5(5 * m + 2 + h, m - 1 + h)

    def D(m):
        return _b5(5 * m + 2, m)

    def a_value(m):
        ks = quintic_A_decomposition(m, n)
        return ks is None or A(m) == _a_value_rule(ks)

    upper = {(q + 5**k1 + 5**k2 - 3) // 4: (3 if k1 == k2 else 1)
             for k1 in range(n) for k2 in range(k1, n)}

    def a_upper(m):
        return A(m) == upper.get(m, 0)

    # values of A(m): 1 or 3 according to the shape of its decomposition
    _run(rep, "A-value", n, 0, q - 1, a_value)
    # on 2T < m <= 4T+1, A(m) = 3^C(k1,k2) at m = (q + 5^k1 + 5^k2 - 3)/4 and 0 elsewhere
    _run(rep, "A-upper-range", n, 2 * T + 1, 4 * T + 1, a_upper)
    _run(rep, "A-eq-B", n, T + 1, 2 * T, lambda m: A(m) == B(m), min_n=2)
    _run(rep, "alpha-beta-zero", n, 0, h, lambda m: _b5(5 * m + 3 + h, m + h) == 0)
    _run(rep, "C-eq-minus-D", n, 0, 2 * T, lambda m: C(m) == (-D(m)) % 5)
    _run(rep, "A-plus-C-eq-B", n, 0, T, lambda m: (A(m) + C(m)) % 5 == B(m), min_n=2)

    # removing multiples of q from the e_mk binomials, checked step by step
    top = lambda m: 2 * q - 4 * m - 4  # noqa: E731
    sign = lambda e: (-1) ** e % 5  # noqa: E731

    def shift_e0(m):
        v = _g5(top(m), m)
        return v == _g5(-4 * m - 4, m) == sign(m) * A(m) % 5

    def shift_e1(m):
        return _g5(top(m), h + m) == sign(m) * _b5(5 * m + 3 + h, m + h) % 5

    def shift_e2(m):
        v = _g5(top(m), q + m - 1)
        return v == _g5(q - 4 * m - 4, m - 1) == _g5(-4 * m - 4, m - 1) == sign(m - 1) * B(m) % 5

    def shift_e3(m):
        return _g5(top(m), 3 * h + m) == sign(m - 1) * C(m) % 5

    _run(rep, "shift-e0", n, 0, 4 * T + 1, shift_e0)
    _run(rep, "shift-e1", n, 0, 3 * T, shift_e1)
    _run(rep, "shift-e2", n, 0, 2 * T, shift_e2)
    _run(rep, "shift-e3", n, 0, T, shift_e3)

    # past ((4-k)q + k - 8)/10 the binomial in e_mk has bottom > top and vanishes
    def vanish(m):
        return all(_g5(top(m), k * h + m) == 0
                   for k in range(4) if 10 * m > (4 - k) * q + k - 8)

    _run(rep, "emk-vanish", n, 0, (q - 3) // 2, vanish)

    # with the above, e_m1 = 0, e_m0 + e_m2 = 0 and e_m0 + e_m2 + e_m3 = 0 on their ranges
    def e(m, k):
        return _g5(top(m), k * h + m) * (-1) ** (k + m) % 5

    _run(rep, "emk-e1-zero", n, 0, 3 * T, lambda m: e(m, 1) == 0)
    _run(rep, "emk-e0-plus-e2-zero", n, T + 1, 2 * T,
         lambda m: (e(m, 0) + e(m, 2)) % 5 == 0, min_n=2)
    _run(rep, "emk-e0-e2-e3-zero", n, 0, T,
         lambda m: (e(m, 0) + e(m, 2) + e(m, 3)) % 5 == 0, min_n=2)
    return rep


def _digits(m: int, length: int) -> tuple[int, ...]:
    return BasePDigits.of(m, 5).padded(length)


def _nonincreasing(ds: Iterable[int]) -> bool:
    ds = list(ds)
    return all(x >= y for x, y in zip(ds, ds[1:]))


def theorem_predicate_equivalences(n: int, bound: int | None = None) -> CongruenceReport:
    """For each nonvanishing characterization, compare the Lucas test, the digit
    chain and the existence of a closed-form decomposition at every m."""
    _check_n(n, bound)
    q = 5**n
    h = (q - 1) // 2
    T = _T(n)
    rep = CongruenceReport(n)

    sums3 = {sum(map(_rep, ks)) for ks in itertools.combinations_with_replacement(range(n + 1), 3)}

    def a_nonzero(m):
        i = _b5(5 * m + 3, m) != 0
        ds = _digits(m, n)
        ii = ds[0] <= 3 and _nonincreasing(ds)
        iii = m in sums3
        return i == ii == iii

    forms = {h + _rep(k) for k in range(1, n + 1)}

    def ab_nonzero(m):
        i = _b5(5 * m + 3 + h, m + h) != 0
        ds = _digits(m, n)
        ii = ds[0] == 3 and _nonincreasing(ds) and ds[-1] >= 2
        iii = m in forms
        return i == ii == iii

    sums2 = {_rep(k1) + _rep(k2) for k1 in range(n) for k2 in range(k1, n)}

    def c_nonzero(m):
        i = _b5(5 * m + 2 + h, m - 1 + h) != 0
        ds = _digits(m, n - 1)
        ii = all(d <= 2 for d in ds[:1]) and _nonincreasing(ds)
        iii = m in sums2
        return i == ii == iii

    _run(rep, "A-nonzero", n, 0, q - 1, a_nonzero)
    _run(rep, "alpha-beta-nonzero", n, 0, q - 1, ab_nonzero)
    _run(rep, "C-nonzero", n, 0, 2 * T, c_nonzero)
    return rep
