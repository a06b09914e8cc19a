import itertools
import random

import pytest

from ppinv.errors import FieldTooSmall, NonzeroConstantTerm, NotAPermutation, SizeExceeded
from ppinv.field import is_dth_power, make_field
from ppinv.inverse import (
    classify_normalized_pps,
    inverse_coefficients,
    invert_coeff_formula,
    invert_lagrange,
    is_permutation,
    random_pp,
    verify_inverse,
)
from ppinv.poly import Poly, compose_mod, reduce_mod_xq_minus_x

F5 = make_field(5)
F7 = make_field(7)


def X(spec, e=1, c=1):
    return Poly.monomial(spec, e, c)


def quintic(a):
    return Poly.from_terms(a.spec, {5: 1, 3: -2 * a, 1: a * a})


def test_is_permutation_examples():
    assert not is_permutation(X(F5, 2))
    assert is_permutation(X(F5, 3))
    assert is_permutation(quintic(F5(2)))
    assert not is_permutation(Poly.constant(F5, 1))


def test_lagrange_examples():
    assert invert_lagrange(X(F5, 3)).inverse == X(F5, 3)
    for p, n in [(2, 3), (3, 2), (7, 1)]:
        F = make_field(p, n)
        assert invert_lagrange(X(F)).inverse == X(F)
    res = invert_lagrange(Poly(F7, [3, 2]))
    assert res.inverse == Poly(F7, [2, 4]) and res.verified and res.method == "lagrange"
    with pytest.raises(NotAPermutation):
        invert_lagrange(X(F5, 2))


def test_coeff_formula_examples():
    assert invert_coeff_formula(X(F5, 3)).inverse == X(F5, 3)
    assert invert_coeff_formula(X(F7)).inverse == X(F7)
    assert invert_coeff_formula(quintic(F5(2))).inverse == X(F5, 3)
    # x^3 over F_5: only i = 3 gives a nonzero x^3 coefficient in f^(q-1-i)
    assert inverse_coefficients(X(F5, 3)) == [0, 0, 1]


def test_coeff_formula_preconditions():
    with pytest.raises(FieldTooSmall):
        invert_coeff_formula(X(make_field(2)))
    with pytest.raises(NonzeroConstantTerm):
        invert_coeff_formula(X(F5) + 1)
    with pytest.raises(NotAPermutation):
        invert_coeff_formula(X(F5, 2))


def test_verify_examples():
    assert verify_inverse(X(F5, 3), X(F5, 3))
    for n in range(1, 7):
        F = make_field(2, n)
        assert verify_inverse(X(F, 2), X(F, F.q // 2))
    assert not verify_inverse(X(F5), X(F5) + 1)


@pytest.mark.parametrize("p,n", [(5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (5, 2)])
def test_coeff_formula_equals_lagrange_on_random_pps(p, n):
    F = make_field(p, n)
    rng = random.Random(1000 * p + n)
    for _ in range(200):
        f = random_pp(F, rng)
        a = invert_coeff_formula(f)
        b = invert_lagrange(f)
        assert a.inverse == b.inverse and a.verified and b.verified


@pytest.mark.parametrize("p,n", [(5, 1), (7, 1), (3, 2)])
def test_coeff_formula_equals_lagrange_on_low_degree_pps(p, n):
    F = make_field(p, n)
    seen = 0
    for c in itertools.product(range(F.q), repeat=4):
        f = Poly.from_encodings(F, (0,) + c)
        if f.degree >= 1 and is_permutation(f):
            seen += 1
            assert invert_coeff_formula(f).inverse == invert_lagrange(f).inverse
    assert seen > 0


@pytest.mark.parametrize("p,n", [(5, 1), (7, 1), (3, 2), (2, 3), (5, 2)])
def test_inverse_of_inverse(p, n):
    F = make_field(p, n)
    rng = random.Random(7)
    for _ in range(20):
        f = random_pp(F, rng)
        g = invert_lagrange(f).inverse
        assert invert_lagrange(g).inverse == reduce_mod_xq_minus_x(f)
        assert compose_mod(g, f) == X(F)


def test_random_pp_is_seeded_and_fixes_zero():
    F = make_field(3, 2)
    a = [random_pp(F, random.Random(3)) for _ in range(2)]
    assert a[0] == a[1]
    f = random_pp(F, random.Random(4))
    assert is_permutation(f) and f.coeff(0) == 0
    g = random_pp(F, random.Random(4), fix_zero=False)
    assert is_permutation(g)


def _classify_oracle(F, max_degree):
    """All monic f with f(0) = 0, no x^(m-1) term when p does not divide m, permuting F."""
    out = set()
    for m in range(1, max_degree + 1):
        for mid in itertools.product(F.elements(), repeat=m - 1):
            f = Poly(F, [F.zero, *mid, F.one])
            if m % F.p and m >= 2 and f.coeff(m - 1):
                continue
            if len({f(c).value for c in F.elements()}) == F.q:
                out.add(f)
    return out


@pytest.mark.parametrize("p,n,deg", [(5, 1, 5), (7, 1, 5), (2, 2, 4), (2, 3, 5), (3, 2, 4)])
def test_classification_matches_brute_force(p, n, deg):
    F = make_field(p, n)
    got = classify_normalized_pps(F, deg)
    assert len(got) == len(set(got))
    assert set(got) == _classify_oracle(F, deg)
    assert [f.degree for f in got] == sorted(f.degree for f in got)


def test_classification_examples():
    F5pps = classify_normalized_pps(F5, 3)
    assert X(F5) in F5pps and X(F5, 3) in F5pps
    F7pps = classify_normalized_pps(F7, 4)
    assert X(F7, 4) + X(F7, 1, 3) in F7pps and X(F7, 4) + X(F7, 1, -3) in F7pps
    F9 = make_field(3, 2)
    F9pps = classify_normalized_pps(F9, 5)
    roots = [a for a in F9.elements() if a * a == 2]
    assert len(roots) == 2
    assert all(X(F9, 5) + X(F9, 1, a) in F9pps for a in roots)
    assert classify_normalized_pps(make_field(2), 1) == [X(make_field(2))]
    with pytest.raises(SizeExceeded):
        classify_normalized_pps(make_field(13), 7, cap=1000)
    with pytest.raises(ValueError):
        classify_normalized_pps(F5, 8)


@pytest.mark.parametrize("n", [2, 3])
def test_quintic_inverse_has_no_even_terms(n):
    F = make_field(5, n)
    for a in F.nonzero():
        if not is_dth_power(a, 2):
            g = invert_coeff_formula(quintic(a)).inverse
            assert all(not g.coeff(i) for i in range(0, F.q, 2))


@pytest.mark.parametrize("p,n,d", [(2, 1, 7), (3, 1, 7), (5, 1, 6), (2, 2, 7), (2, 3, 6), (3, 2, 5), (11, 1, 5)])
def test_classify_vectorized_matches_scalar_loop(monkeypatch, p, n, d):
    import ppinv.inverse as inv

    spec = make_field(p, n)
    fast = inv.classify_normalized_pps(spec, d)
    monkeypatch.setattr(inv, "_VECTOR_Q", 0)
    assert inv.classify_normalized_pps(spec, d) == fast
