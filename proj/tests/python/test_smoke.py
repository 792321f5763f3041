"""Smoke tests for the Python bindings.

These only check that the bindings are wired correctly and return sane
values; the numerical heavy lifting is covered by the C++ unit and
acceptance suites.
"""

import math

import pytest

import mmtheory as mt


def test_lambda_spot_value():
    # lambda(2i) = 17 - 12 sqrt(2)
    val = mt.lambda2(1j, prec=256)
    assert val.real == pytest.approx(17 - 12 * math.sqrt(2), abs=1e-12)
    assert abs(val.imag) < 1e-12


def test_lambda_string_variant():
    re, im = mt.lambda2_str(1j, prec=256, digits=40)
    assert re.startswith("0.029437")
    assert float(im) == pytest.approx(0.0, abs=1e-30)


def test_j_invariant():
    assert mt.j_invariant(2j).real == pytest.approx(66 ** 3, rel=1e-12)


def test_weber_powers():
    f1 = mt.weber_f1(2j) ** 24
    assert f1.real == pytest.approx(512.0, rel=1e-12)


def test_class_number_lists():
    ones = mt.class_number_one_discs()
    twos = mt.class_number_two_discs()
    assert len(ones) == 13 and len(twos) == 29
    assert -163 in ones and -427 in twos


def test_cm_table_shape():
    table = mt.cm_table()
    assert len(table) == 47
    assert table[0]["form"] == (2, -2, 1)
    assert table[0]["lambda"] == pytest.approx(-1.0)


def test_search_matches_table():
    found = mt.search_cm_points(max_product=4, prec=128)
    assert len(found) == len(mt.cm_table())


def test_mahler_cross_method():
    # tau = i corresponds to k = 12 + 8 sqrt(2)
    mj = mt.mahler_jensen(12 + 8 * math.sqrt(2), eps=1e-10, prec=128)
    ml = mt.mahler_lattice(1j, eps=1e-5, strategy="direct", prec=128)
    assert mj == pytest.approx(ml, abs=1e-4)


def test_mahler_jensen_inside_critical_interval():
    # real k in (0,4): the torus intersects the zero set
    assert mt.mahler_jensen(2 * math.sqrt(2), eps=1e-8, prec=128) > 0


def test_verify_identity_headline():
    res = mt.verify_identity(0, eps=1e-12, prec=256)
    assert res["residual"] < 1e-10
    assert res["m"] == pytest.approx(res["cL"], abs=1e-10)


def test_identity_count():
    assert mt.identity_count() == 35


def test_algdep_quadratic():
    # row 6 (1,0,1): lambda = 17 - 12 sqrt(2), minimal polynomial x^2 - 34x + 1
    coeffs = mt.algdep(5, prec=256)
    assert coeffs == [1, -34, 1]


def test_algdep_conjugate_pair_row():
    # row 22 (4,2,1): lambda = e^{-i pi/3}, x^2 - x + 1
    coeffs = mt.algdep(21, prec=256)
    assert coeffs == [1, -1, 1]


def test_recognize_string():
    root = "1.41421356237309504880168872420969807856967187537694808934"
    assert mt.recognize(root, prec=256, max_degree=4) == [-2, 0, 1]


def test_regulator_case_ids():
    assert len(mt.regulator_case_ids()) == 5


def test_regulator_headline_case():
    rep = mt.regulator(mt.regulator_case_ids()[0], eps=1e-12, prec=256)
    assert rep["residual"] < 1e-8
    assert rep["R"] == pytest.approx(rep["R_target"], abs=1e-8)
    assert rep["R"] == pytest.approx(39.4540949298, abs=1e-6)


def test_error_surface():
    with pytest.raises(Exception):
        mt.recognize("not a number")
