from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from checkerboard import diffops as D, genfun as gf
from checkerboard.exactalg import LaurentPoly, SeriesX

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))


def test_monomial_action_examples():
    DL, DR, DLt, DRt = (D.OperatorId(tag, 2) for tag in D.TAGS)
    assert D.monomial_action(DL, 0, 0) == (8, 1, 1)
    assert D.monomial_action(DR, 0, 0)[0] == 0
    assert D.monomial_action(DRt, 1, 1)[0] == 0


def test_operator_on_constants():
    assert D.apply_operator(D.OperatorId("DL", 2), SeriesX.one(2)) == SeriesX([0, LaurentPoly({1: 8})], 2)
    for tag in D.TAGS:
        assert D.apply_operator(D.OperatorId(tag, 3), SeriesX.zero(3)).is_zero()


def test_operator_id_validation():
    with pytest.raises(ValueError):
        D.OperatorId("DQ", 2)
    with pytest.raises(ValueError):
        D.OperatorId("DL", 1)


@given(st.sampled_from(D.TAGS), st.integers(2, 4),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 4), rationals), max_size=5),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 4), rationals), max_size=5),
       rationals, rationals)
@settings(max_examples=60)
def test_operators_are_linear(tag, d, a, b, p, q):
    def series(terms):
        out = {}
        for j, m, c in terms:
            out[(j, m)] = out.get((j, m), 0) + c
        return SeriesX.from_dict(out, 4)

    op = D.OperatorId(tag, d)
    A, B = series(a), series(b)
    lhs = D.apply_operator(op, A.scale(p) + B.scale(q))
    rhs = D.apply_operator(op, A).scale(p) + D.apply_operator(op, B).scale(q)
    assert lhs == rhs


@pytest.mark.parametrize("d,N", [(2, 40), (3, 24), (4, 16)])
def test_pde_and_corollary_vanish(d, N):
    W = gf.closed_table(d, N).series()
    assert all(r.is_zero() for r in D.pde_residuals(d, W))
    assert D.corollary_residual(d, W).is_zero()


def test_initial_condition_alone():
    W = SeriesX([1, LaurentPoly({1: 1})], 1)
    assert all(r.is_zero() for r in D.pde_residuals(2, W))


def test_wrong_inputs_leave_residuals():
    assert not D.corollary_residual(2, SeriesX([1, 1], 3)).is_zero()
    W = gf.closed_table(2, 12).series()
    broken = W + SeriesX.from_dict({(1, 7): 1}, 12)
    assert not all(r.is_zero() for r in D.pde_residuals(2, broken))
    assert not D.coeff_identity_series(broken).is_zero()


def test_coeff_identity_series():
    assert D.coeff_identity_series(gf.closed_table(2, 40).series()).is_zero()


def test_pde_solve():
    assert D.pde_solve(2, 2)[2] == LaurentPoly({0: 2})
    assert D.pde_solve(2, 1) == SeriesX([1, LaurentPoly({1: 1})], 1)
    assert D.pde_solve(3, 12) == gf.w_fixedpoint(3, 12).series()
    assert D.pde_solve(2, 30) == gf.closed_table(2, 30).series()


def test_term_formulas():
    assert D.term_sums_d2("DL", 0, 0) == (1, LaurentPoly({1: 8}))
    assert D.verify_termwise(6, 2).passed
    assert D.verify_termwise(3, 3).passed


def test_fact_ratio_negative_denominator():
    assert D._fact_ratio([3], [-1]) == 0
    assert D._fact_ratio([5], [2, 3]) == Fraction(120, 12)
