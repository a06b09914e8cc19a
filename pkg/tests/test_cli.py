import itertools
import subprocess
import sys

import pytest

from ppinv.cli import invert, main
from ppinv.field import make_field
from ppinv.inverse import is_permutation, verify_inverse
from ppinv.poly import Poly, parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invert_monomial(capsys):
    code, out, err = run(capsys, "invert", "--field", "5^1", "--poly", "0,0,0,1")
    assert code == 0 and out == "0,0,0,1\n" and "verified" in err


def test_invert_catalog_instance(capsys):
    code, out, _ = run(capsys, "catalog", "--instantiate", "table1.x5-2ax3-a2x", "--field", "5^1",
                       "--param", "a=2")
    assert code == 0
    f_text, g_text = out.split()
    assert f_text == "0,4,0,1,0,1" and g_text == "0,0,0,1"
    code, out, err = run(capsys, "invert", "--field", "5^1", "--poly", f_text)
    assert code == 0 and out.strip() == "0,0,0,1"


def test_invert_identity_over_f8(capsys):
    code, out, _ = run(capsys, "invert", "--field", "2^3", "--poly", "x")
    assert code == 0 and out.strip() == "0,1"


@pytest.mark.parametrize("method", ["auto", "lagrange", "coeff-formula", "closed-form:table1.x5-2ax3-a2x"])
def test_methods_agree(capsys, method):
    code, out, err = run(capsys, "invert", "--field", "5^2", "--poly", "x^5 + [1,3]*x^3 + [3,3]*x",
                         "--method", method)
    assert code == 0, err
    F = make_field(5, 2)
    f = parse_poly(F, "x^5 + [1,3]*x^3 + [3,3]*x")
    assert verify_inverse(f, parse_poly(F, out.strip()))


def test_invert_errors(capsys):
    assert run(capsys, "invert", "--field", "5", "--poly", "x^2")[0] == 2
    assert run(capsys, "invert", "--field", "5", "--poly", "x+1", "--method", "coeff-formula")[0] == 3
    assert run(capsys, "invert", "--field", "2", "--poly", "x", "--method", "coeff-formula")[0] == 3
    assert run(capsys, "invert", "--field", "7", "--poly", "x^5", "--method", "closed-form:table1.x3")[0] == 3
    assert run(capsys, "invert", "--field", "7", "--poly", "x^5", "--method", "closed-form:nope")[0] == 3
    assert run(capsys, "invert", "--field", "7", "--poly", "x^5", "--method", "magic")[0] == 3
    assert run(capsys, "invert", "--field", "2^30", "--poly", "x")[0] == 4
    assert run(capsys, "invert", "--field", "6", "--poly", "x")[0] == 64
    assert run(capsys, "invert", "--field", "5", "--poly", "[1")[0] == 64


def test_auto_handles_every_low_degree_pp_over_f7():
    # every PP of degree <= 4, including nonzero constant terms and non-monic ones
    F = make_field(7)
    count = 0
    for c in itertools.product(range(7), repeat=5):
        f = Poly.from_encodings(F, c)
        if f.degree >= 1 and is_permutation(f):
            res = invert(f)
            assert res.verified and verify_inverse(f, res.inverse)
            count += 1
    assert count > 0


def test_auto_over_f2():
    F = make_field(2)
    res = invert(Poly(F, [1, 1]))
    assert res.inverse == Poly(F, [1, 1]) and res.verified


def test_verify(capsys):
    a = "[0,1]"  # t^2 = 2 in GF(9) with modulus x^2 + 1
    f = f"x^5 + {a}*x"
    assert run(capsys, "verify", "--field", "3^2", "--f", f, "--g", f)[0] == 0
    assert run(capsys, "verify", "--field", "5", "--f", "x", "--g", "x")[0] == 0
    assert run(capsys, "verify", "--field", "5", "--f", "x^3", "--g", "x^2")[0] == 1


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--field", "7^1", "--max-degree", "4")
    lines = out.split()
    assert code == 0 and "0,3,0,0,1" in lines and "0,4,0,0,1" in lines and lines[-1] == "count=3"
    code, out, _ = run(capsys, "classify", "--field", "2^1", "--max-degree", "1")
    assert out.split() == ["0,1", "count=1"]
    assert run(capsys, "classify", "--field", "13", "--max-degree", "7")[0] == 0
    assert run(capsys, "classify", "--field", "131", "--max-degree", "7")[0] == 4


def test_classify_f5_matches_catalog(capsys):
    from ppinv.catalog import table1_catalog

    F = make_field(5)
    _, out, _ = run(capsys, "classify", "--field", "5^1", "--max-degree", "5")
    listed = {parse_poly(F, line) for line in out.split()[:-1]}
    built = {row.instantiate(F, prm)[0] for row in table1_catalog() if not row.id.startswith("deg")
             for prm in row.parameter_space(F)}
    # degree-5 entries over F_5 have degree >= q; the catalog rows account for all of lower degree
    assert {f for f in listed if f.degree < 5} == {f for f in built if f.degree < 5}
    assert all(verify_inverse(f, invert(f).inverse) for f in listed)


def test_catalog_listing_and_errors(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and "table1.x4+bx2+ax" in out
    assert run(capsys, "catalog", "--instantiate", "table1.x5+ax", "--field", "9", "--param", "a=1")[0] == 2
    assert run(capsys, "catalog", "--instantiate", "table1.x4+-3x", "--field", "7", "--param", "s=2")[0] == 64
    assert run(capsys, "catalog", "--instantiate", "table1.x4+-3x", "--field", "7")[0] == 64
    assert run(capsys, "catalog", "--instantiate", "nope", "--field", "7")[0] == 3
    code, out, _ = run(capsys, "catalog", "--instantiate", "table1.x4+-3x", "--field", "7", "--param", "s=-1")
    assert out.split() == ["0,4,0,0,1", "0,4,0,0,1"]


@pytest.mark.parametrize("n", [1, 2])
def test_congruence(capsys, n):
    code, out, _ = run(capsys, "congruence", "--n", str(n))
    assert code == 0 and out.strip().endswith("failures=0")
    assert all(line.startswith("THEOREM ") for line in out.strip().splitlines()[:-1])
    if n == 1:
        assert "range=skipped" in out


def test_congruence_bound(capsys):
    assert run(capsys, "congruence", "--n", "6")[0] == 4


def test_output_round_trips_and_is_deterministic(capsys):
    F = make_field(3, 3)
    args = ("invert", "--field", "3^3", "--poly", "x^3 - [0,1]*x + [1,1]")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    g = parse_poly(F, out1.strip())
    assert str(parse_poly(F, out1.strip())) and verify_inverse(parse_poly(F, args[-1]), g)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ppinv", "verify", "--field", "5", "--f", "x^3", "--g", "x^3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "verified"
    proc = subprocess.run([sys.executable, "-m", "ppinv", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 64
