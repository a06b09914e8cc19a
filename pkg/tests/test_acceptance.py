"""The nine acceptance criteria, each at its stated tolerance and time budget.

Every test records a line "CRITERION <k> <name> PASS|FAIL (<seconds>s / <budget>s)",
printed in the terminal summary and immediately when run with -s.
"""

import itertools
import random
import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE_LINES
from ppinv.binom import congruence_suite, theorem_predicate_equivalences
from ppinv.catalog import table1_catalog
from ppinv.closed_forms import (
    DicksonParams,
    count_trinomial_pps,
    dickson_poly,
    invert_dickson,
    invert_quintic_main,
    quintic_pointwise,
    quintic_pp,
)
from ppinv.field import is_dth_power, make_field
from ppinv.inverse import (
    classify_normalized_pps,
    invert_coeff_formula,
    invert_lagrange,
    is_permutation,
    random_pp,
    verify_inverse,
)
from ppinv.poly import Poly, compose_mod, normalize, reduce_mod_xq_minus_x, value_table


@contextmanager
def criterion(k, name, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        passed = ok and elapsed < budget
        line = f"CRITERION {k} {name} {'PASS' if passed else 'FAIL'} ({elapsed:.1f}s / {budget}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert elapsed < budget, f"criterion {k} took {elapsed:.1f}s, budget {budget}s"


def nonsquares(spec):
    return [a for a in spec.nonzero() if not is_dth_power(a, 2)]


def test_criterion_1_catalog_round_trip():
    qs = [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (13, 1), (2, 4), (5, 2), (3, 3), (2, 5), (5, 3), (5, 4)]
    with criterion(1, "catalog-round-trip", 120):
        checked = 0
        for p, n in qs:
            F = make_field(p, n)
            for row in table1_catalog():
                if not row.id.startswith("table1."):
                    continue
                for params in row.parameter_space(F):
                    f, g = row.instantiate(F, params)
                    assert verify_inverse(f, g), (row.id, F.q, params)
                    checked += 1
        assert checked > 0


def test_criterion_2_main_quintic_equals_lagrange():
    with criterion(2, "quintic-main-vs-lagrange", 60):
        counts = []
        for n in (1, 2, 3):
            F = make_field(5, n)
            avals = nonsquares(F)
            counts.append(len(avals))
            for a in avals:
                assert invert_quintic_main(a) == invert_lagrange(quintic_pp(a)).inverse, (F.q, a)
        assert counts == [2, 12, 62]


def test_criterion_3_pointwise_agrees_with_polynomial():
    with criterion(3, "pointwise-vs-polynomial", 30):
        for n in (1, 2, 3):
            F = make_field(5, n)
            for a in nonsquares(F):
                poly_values = value_table(invert_quintic_main(a))
                assert [quintic_pointwise(a, x).value for x in F.elements()] == poly_values, (F.q, a)


def test_criterion_4_coefficient_formula_equals_lagrange():
    with criterion(4, "coeff-formula-vs-lagrange", 120):
        F7 = make_field(7)
        enumerated = 0
        for c in itertools.product(range(7), repeat=4):
            f = Poly.from_encodings(F7, (0,) + c)
            if f.degree >= 1 and is_permutation(f):
                assert invert_coeff_formula(f).inverse == invert_lagrange(f).inverse, f
                enumerated += 1
        assert enumerated > 0
        rng = random.Random(4)
        for p, n in ((3, 2), (13, 1), (5, 2)):
            F = make_field(p, n)
            for _ in range(200):
                f = random_pp(F, rng)
                assert invert_coeff_formula(f).inverse == invert_lagrange(f).inverse


# values printed in the criterion text; see the strict xfail below
LISTED_TRINOMIAL_COUNTS = (1, 3, 21, 85, 341, 1365, 5461, 21845, 87381, 349525)


def test_criterion_5_trinomial_count():
    with criterion(5, "trinomial-count", 60):
        for n in range(1, 11):
            count, formula = count_trinomial_pps(n)
            assert formula == (2**n - 1) * (2**n - (-1) ** n) // 3
            assert count == formula, n


@pytest.mark.xfail(strict=True, reason="the listed values at even n are (4^n - 1)/3, not the formula")
def test_trinomial_listed_values_match_formula():
    formula = [(2**n - 1) * (2**n - (-1) ** n) // 3 for n in range(1, 11)]
    assert tuple(formula) == LISTED_TRINOMIAL_COUNTS


def test_trinomial_listed_values_differ_at_n_4_6_8_10():
    for n, listed in enumerate(LISTED_TRINOMIAL_COUNTS, start=1):
        formula = (2**n - 1) * (2**n - (-1) ** n) // 3
        if n in (4, 6, 8, 10):
            assert listed != formula and listed == (4**n - 1) // 3
        else:
            assert listed == formula


def test_criterion_6_congruence_suite():
    with criterion(6, "congruence-suite", 60):
        for n in range(1, 6):
            suite = congruence_suite(n)
            equiv = theorem_predicate_equivalences(n)
            assert suite.failures == 0, suite.lines()
            assert equiv.failures == 0, equiv.lines()


def test_criterion_7_dickson_inverse_over_f7():
    with criterion(7, "dickson-inverse", 5):
        F = make_field(7)
        q = F.q
        assert pow(5, -1, q * q - 1) == 29 == (3 * q * q - 2) // 5
        x = Poly.monomial(F, 1)
        for a in F.elements():
            f = dickson_poly(DicksonParams(5, a))
            g = invert_dickson(DicksonParams(5, a))
            assert g == reduce_mod_xq_minus_x(dickson_poly(DicksonParams(29, a**5)))
            assert compose_mod(g, f) == x, a
            assert verify_inverse(f, g)


def test_criterion_8_classification_matches_catalog_over_f7():
    with criterion(8, "classification-spot-check", 120):
        F = make_field(7)
        rows = [row for row in table1_catalog() if row.id.startswith("table1.")]
        built = set()
        for row in rows:
            for params in row.parameter_space(F):
                f, _ = row.instantiate(F, params)
                g, _ = normalize(f)
                built.add(g)
        for d in (4, 5):
            listed = set(classify_normalized_pps(F, d))
            assert listed == {g for g in built if g.degree <= d}, d


def test_criterion_9_even_coefficients_vanish():
    with criterion(9, "even-coefficients-zero", 30):
        for n in (2, 3):
            F = make_field(5, n)
            for a in nonsquares(F):
                g = invert_coeff_formula(quintic_pp(a)).inverse
                assert all(not g.coeff(i) for i in range(0, F.q - 1, 2)), (F.q, a)
