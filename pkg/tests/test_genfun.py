import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from checkerboard import genfun as gf, reference as ref
from checkerboard.exactalg import LaurentPoly, SeriesX


def test_t_dn():
    assert gf.t_dn(2, 5) == 42
    assert gf.t_dn(3, 2) == 3
    assert gf.t_dn(5, 0) == 1


def test_recursion_examples():
    table = gf.w_recursion(10)
    assert table[0] == LaurentPoly({0: 1})
    assert table[2] == LaurentPoly({0: 2})
    assert table[5] == LaurentPoly({-1: 12, 1: 30})
    assert table.polys == ref.golden_table()


def test_fixedpoint_examples():
    W = gf.w_fixedpoint(2, 6)
    assert W[1] == LaurentPoly({1: 1})
    assert W[6] == LaurentPoly({-2: 4, 0: 100, 2: 28})
    assert gf.w_fixedpoint(3, 2)[2] == LaurentPoly({0: 3})


def test_closed_examples():
    assert gf.w_closed(6) == LaurentPoly({-2: 4, 0: 100, 2: 28})
    assert gf.w_closed(4) == LaurentPoly({0: 12, 2: 2})
    assert gf.w_closed(14).coeff(-4) == 6120
    assert gf.w_closed_d(3, 2) == LaurentPoly({0: 3})
    assert gf.w_closed_d(2, 10) == LaurentPoly({-2: 1540, 0: 10584, 2: 4620, 4: 52})
    assert gf.w_closed_d(4, 0) == LaurentPoly({0: 1})


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_closed_d_matches_fixedpoint(d):
    assert [gf.w_closed_d(d, m) for m in range(16)] == gf.w_fixedpoint(d, 15).polys


@pytest.mark.parametrize("d", [2, 3, 4])
def test_values_at_one_are_fuss_catalan(d):
    table = gf.w_fixedpoint(d, 12)
    assert [w.value_at_one() for w in table.polys] == [gf.t_dn(d, n) for n in range(13)]


def test_algebraic_residual():
    assert gf.algebraic_residual(2, gf.w_fixedpoint(2, 40).series()).is_zero()
    assert gf.algebraic_residual(2, gf.closed_table(2, 40).series()).is_zero()
    bad = gf.algebraic_residual(2, SeriesX.one(4))
    assert bad[0].is_zero() and not bad[1].is_zero()


def test_formulas():
    assert gf.fair_formula(2, 4) == 980
    assert gf.fair_formula(2, 0) == 1
    assert gf.fair_formula(3, 2) == 45
    assert gf.eulerian_formula(2, 1) == 2
    assert gf.eulerian_formula(2, 0) == 1
    assert gf.eulerian_formula(2, 5) == comb(22, 5) // 11 == 2394


def test_coeffid():
    w3 = gf.w_closed(3)
    assert (3 + 2 + 3) * w3.coeff(-1) == (3 + 2 - 3) * w3.coeff(1)
    assert gf.coeffid_check(2, gf.closed_table(2, 40)).passed
    assert gf.coeffid_check(3, gf.w_fixedpoint(3, 20)).passed


def test_coeffid_detects_a_corrupted_table():
    table = gf.closed_table(2, 10)
    polys = list(table.polys)
    polys[8] = polys[8] + LaurentPoly({2: 1})
    res = gf.coeffid_check(2, gf.WeightTable(2, polys, "edited"))
    assert res.status == "fail" and res.detail["n"] == 8


def test_weight_table_json_round_trip():
    table = gf.closed_table(3, 9)
    text = json.dumps(table.to_json())
    again = gf.WeightTable.from_json(json.loads(text))
    assert again.polys == table.polys and again.d == 3


def test_specializations():
    plus, minus = gf.specialization_check(60)
    assert plus.order == gf.complete_prefix(60) == 39
    assert plus.is_zero() and minus.is_zero()
    raw = gf.specialize(gf.closed_table(2, 10), 1)
    assert raw[0] == 1 and raw[2] == 0


def test_specialization_rejects_tiny_order():
    with pytest.raises(ValueError):
        gf.specialization_check(1)


def test_array_and_row_col_series():
    R, C, A = gf.row_col_series(10, gf.closed_table(2, 31))
    assert R.at_t_one()[:6] == ref.R_PREFIX
    assert C.at_t_one()[:6] == ref.C_PREFIX
    assert A.rows[2][1:5] == [4, 12, 12, 4]
    assert A.rows[5][9] == 6120
    assert gf.row_quartic_residual(R).is_zero()
    assert gf.col_quartic_residual(C).is_zero()
    assert gf.lagrange_R(10) == R.at_t_one()
    assert A.to_csv().splitlines()[0].startswith("1,")


def test_extremal():
    A, B = gf.extremal_AB(8)
    assert A.at_t_one()[:7] == ref.A_PREFIX
    assert B.at_t_one()[:7] == ref.B_PREFIX
    assert (A.at_t_one(), B.at_t_one()) == tuple(gf.extremal_closed(8))


def test_wprime():
    wp = gf.wprime_series(40)
    assert wp.series.at_t_one()[:6] == [0, 1, 0, 3, 4, 18]
    assert wp.residual.is_zero()
    assert isinstance(wp.ratio, Fraction)


def test_positivity_helpers():
    assert gf.homogenize(gf.w_closed(3), 3) == [0, 1, 4, 0]
    assert gf.is_real_rooted([1])
    assert gf.is_real_rooted([1, 3, 2])
    assert not gf.is_real_rooted([1, 0, 1])
    # Q(u, v) = u v^2 + 4 u^3 symmetrises to 4 e1^3 - 11 e1 e2
    assert gf.symmetric_reduction([0, 1, 0, 4]) == {(3, 0): 4, (1, 1): -11}
    # roots -3/2 against -1, -2
    assert gf.interlaces([3, 2], [2, 3, 1])
    assert not gf.interlaces([1, 1], [2, 3, 1])
    assert not gf.interlaces([3, 2], [1, 2, 1])


def test_positivity_suite_small():
    res = gf.positivity_suite(12)
    assert res.passed, res.detail


@given(st.integers(0, 40))
def test_parity_of_weights(n):
    for j, c in gf.w_closed(n).items():
        assert (n - j) % 2 == 0 and c > 0
