import random

import pytest

from ppinv.catalog import get_row, match_catalog, table1_catalog
from ppinv.closed_forms import invert_monomial
from ppinv.errors import NotAPermutation
from ppinv.field import make_field
from ppinv.inverse import classify_normalized_pps, is_permutation, verify_inverse
from ppinv.poly import Poly, normalize

FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4),
          (5, 1), (5, 2), (5, 3), (5, 4), (7, 1), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1)]


def X(spec, e=1, c=1):
    return Poly.monomial(spec, e, c)


def test_row_ids_are_unique():
    ids = [row.id for row in table1_catalog()]
    assert len(ids) == len(set(ids))
    assert "table1.x5-2ax3-a2x" in ids and "table1.x4+bx2+ax" in ids
    with pytest.raises(KeyError):
        get_row("table1.nope")


@pytest.mark.parametrize("p,n", FIELDS)
def test_every_row_inverts_over_small_fields(p, n):
    F = make_field(p, n)
    for row in table1_catalog():
        for params in row.parameter_space(F):
            f, g = row.instantiate(F, params)
            assert is_permutation(f), (row.id, params)
            assert verify_inverse(f, g), (row.id, params)
            g_norm, nrm = normalize(f)
            assert g_norm == f and nrm.as_tuple() == (1, 0, 0)
            assert row.match(f) is not None


@pytest.mark.parametrize("n", [7, 8, 9, 10])
def test_char2_rows_up_to_2_to_the_10(n):
    F = make_field(2, n)
    rng = random.Random(n)
    for row in table1_catalog():
        if row.id == "table1.x4+bx2+ax":
            space = [{"a": F.element(rng.randrange(1, F.q)), "b": F.element(rng.randrange(1, F.q))}
                     for _ in range(300)]
            space = [prm for prm in space if row.admissible(F, prm)]
            assert space
        else:
            space = list(row.parameter_space(F))
            if len(space) > 40:
                space = rng.sample(space, 40)
        for params in space:
            f, g = row.instantiate(F, params)
            assert verify_inverse(f, g), (row.id, params)


def test_involution_row_q9():
    F9 = make_field(3, 2)
    row = get_row("table1.x5+ax")
    params = list(row.parameter_space(F9))
    assert len(params) == 2
    for prm in params:
        f, g = row.instantiate(F9, prm)
        assert f == g


def test_q13_row_inverse():
    F = make_field(13)
    row = get_row("table1.x5+ax3+3a2x")
    for prm in row.parameter_space(F):
        a = prm["a"]
        _, g = row.instantiate(F, prm)
        assert g == Poly.from_terms(F, {9: -a * a, 7: -a, 5: 4, 3: 4 * a**5, 1: -5 * a**4})


def test_q7_fixed_rows():
    F = make_field(7)
    f, g = get_row("table1.x4+-3x").instantiate(F, {"s": 1})
    assert f == X(F, 4) + X(F, 1, 3) and g == X(F, 4, -1) + X(F, 1, 3)
    f, g = get_row("table1.x5+-2x2").instantiate(F, {"s": -1})
    assert f == X(F, 5) - X(F, 2, 2) and g == X(F, 5) + X(F, 2, 2)


def test_monomial_rows_delegate():
    F = make_field(2, 5)
    for m, rid in [(3, "table1.x3"), (5, "table1.x5")]:
        assert get_row(rid).instantiate(F, {})[1] == invert_monomial(m, F)
    assert not get_row("table1.x3").field_ok(make_field(7))
    assert not get_row("table1.x5").field_ok(make_field(11))


def test_instantiate_errors():
    F5 = make_field(5)
    row = get_row("table1.x5-2ax3-a2x")
    with pytest.raises(NotAPermutation):
        row.instantiate(F5, {"a": 4})
    with pytest.raises(ValueError):
        row.instantiate(F5, {})
    with pytest.raises(NotAPermutation):
        row.instantiate(make_field(7), {"a": 3})


def test_match_catalog_finds_rows():
    F = make_field(5, 2)
    for row in table1_catalog():
        for params in row.parameter_space(F):
            f, _ = row.instantiate(F, params)
            hit = match_catalog(f)
            assert hit is not None
            r2, p2 = hit
            assert r2.instantiate(F, p2)[0] == f
    assert match_catalog(X(F, 7) + X(F, 1)) is None


# the table lists PPs of degree < q, so fields with q > 5
@pytest.mark.parametrize("p,n", [(7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)])
def test_catalog_covers_classification_through_degree_5(p, n):
    F = make_field(p, n)
    listed = {f for f in classify_normalized_pps(F, 5)}
    built = {row.instantiate(F, prm)[0] for row in table1_catalog() if not row.id.startswith("deg")
             for prm in row.parameter_space(F)}
    assert built == listed
