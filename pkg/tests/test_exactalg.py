from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from checkerboard.exactalg import (
    FreeWordSeries,
    LaurentPoly,
    MultiPoly,
    OrderMismatch,
    SeriesX,
    freeword_left_quotient,
    freeword_mul,
    laurent_bar,
    laurent_mul,
    naive_series_mul,
    series_mul,
)

coeffs = st.integers(min_value=-10**6, max_value=10**6)
laurents = st.dictionaries(st.integers(-8, 8), coeffs, max_size=6).map(LaurentPoly)


def series_of(order):
    return st.lists(laurents, min_size=order + 1, max_size=order + 1).map(lambda ts: SeriesX(ts, order))


# -- LaurentPoly -------------------------------------------------------------------


def test_laurent_examples():
    p = LaurentPoly({-1: 1, 1: 4})
    assert laurent_mul(p, p) == LaurentPoly({-2: 1, 0: 8, 2: 16})
    assert laurent_mul(LaurentPoly({0: 1}), p) == p
    assert laurent_mul(LaurentPoly(), p).is_zero()
    assert laurent_bar(p) == LaurentPoly({1: 1, -1: 4})
    assert laurent_bar(LaurentPoly({0: 2})) == LaurentPoly({0: 2})


def test_laurent_zero_coefficients_are_dropped():
    p = LaurentPoly({0: 0, 3: 5, -2: 0})
    assert list(p.support()) == [3]
    assert (p - p).is_zero()


def test_laurent_large_coefficients_stay_exact():
    big = 10**40 + 7
    p = LaurentPoly({-3: big, 2: -big})
    q = p * p
    assert q.coeff(-6) == big * big
    assert q.coeff(-1) == -2 * big * big
    assert q.coeff(4) == big * big


def test_laurent_rational_coefficients():
    p = LaurentPoly({0: Fraction(1, 2), 1: Fraction(-3, 4)})
    assert (p * 4) == LaurentPoly({0: 2, 1: -3})
    assert LaurentPoly.from_text(p.to_text()) == p


@given(laurents, laurents)
def test_laurent_mul_commutes(a, b):
    assert a * b == b * a


@given(laurents, laurents, laurents)
@settings(max_examples=50)
def test_laurent_mul_associates_and_distributes(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(laurents)
def test_bar_is_involution(a):
    assert a.bar().bar() == a


@given(laurents, laurents)
def test_bar_is_multiplicative(a, b):
    assert (a * b).bar() == a.bar() * b.bar()


@given(laurents)
def test_text_and_json_round_trip(a):
    assert LaurentPoly.from_text(a.to_text()) == a
    assert LaurentPoly.from_json(a.to_json()) == a


@given(laurents)
def test_value_at_one_matches_call(a):
    assert a.value_at_one() == a(1)


# -- SeriesX -----------------------------------------------------------------------------


def test_series_examples():
    S = SeriesX([1, LaurentPoly({1: 1})], 2)
    assert series_mul(S, S) == SeriesX([1, LaurentPoly({1: 2}), LaurentPoly({2: 1})], 2)
    assert series_mul(S, SeriesX.one(2)) == S
    assert series_mul(S, SeriesX.zero(2)).is_zero()


def test_series_truncation_drops_high_terms():
    S = SeriesX([1, 1, 1], 2)
    assert (S * S) == SeriesX([1, 2, 3], 2)
    assert (S * S).truncate(1) == SeriesX([1, 2], 1)


def test_series_order_mismatch():
    with pytest.raises(OrderMismatch):
        SeriesX([1, 1], 1) + SeriesX([1, 1, 1], 2)
    with pytest.raises(OrderMismatch):
        SeriesX([1], 0) * SeriesX([1, 2], 1)


@given(series_of(5), series_of(5))
@settings(max_examples=60)
def test_series_mul_matches_naive(S, T):
    assert series_mul(S, T) == naive_series_mul(S, T)


@given(series_of(4), series_of(4), series_of(4))
@settings(max_examples=30)
def test_series_ring_laws(A, B, C):
    assert A * B == B * A
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C


def test_series_power_and_derivatives():
    S = SeriesX([1, LaurentPoly({1: 1})], 3)
    assert S**3 == SeriesX([1, LaurentPoly({1: 3}), LaurentPoly({2: 3}), LaurentPoly({3: 1})], 3)
    assert S.d_x().order == 2
    assert S.theta_t() == SeriesX([0, LaurentPoly({1: 1})], 3)


# -- FreeWordSeries --------------------------------------------------------------------------


def test_freeword_examples():
    uv = FreeWordSeries.word("UV", 4)
    assert freeword_mul(uv, uv) == FreeWordSeries.word("UVUV", 4)
    s = FreeWordSeries({"U": 1, "V": 1}, 2)
    assert s * s == FreeWordSeries({"UU": 1, "UV": 1, "VU": 1, "VV": 1}, 2)
    assert s * FreeWordSeries.unit(2) == s


def test_freeword_left_quotient():
    a = FreeWordSeries({"VU": 1, "VVV": 1}, 3)
    assert freeword_left_quotient(a, "V") == FreeWordSeries({"U": 1, "VV": 1}, 2)
    assert freeword_left_quotient(FreeWordSeries.word("UV", 2), "U") == FreeWordSeries.word("V", 1)
    with pytest.raises(ValueError):
        freeword_left_quotient(FreeWordSeries({"UV": 1, "VU": 1}, 2), "U")


def test_freeword_products_are_not_commutative():
    u, v = FreeWordSeries.word("U", 3), FreeWordSeries.word("V", 3)
    assert u * v != v * u


def test_freeword_rejects_bad_letters_and_mixed_lengths():
    with pytest.raises(ValueError):
        FreeWordSeries({"UX": 1}, 3)
    with pytest.raises(ValueError):
        FreeWordSeries.word("U", 2) + FreeWordSeries.word("U", 3)


def test_freeword_transpose():
    assert FreeWordSeries({"UUV": 2}, 3).transpose() == FreeWordSeries({"VVU": 2}, 3)


# -- MultiPoly -----------------------------------------------------------------------------------


def test_multipoly_basics():
    names = ("t", "x", "F")
    t, x, F = MultiPoly.gens(names)
    P = t - t * F + x * (t + x * F**2) ** 2
    assert len(P) == 5
    assert P.diff("F") == -t + 4 * t * x**2 * F + 4 * x**3 * F**3
    assert P.evaluate({"t": 2, "x": 0, "F": 1}) == 0
    assert MultiPoly.from_json(names, P.to_json()) == P
    assert (P * P - P**2).is_zero()


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_multipoly_evaluation_is_a_homomorphism(a, b):
    names = ("t", "x", "F")
    t, x, F = MultiPoly.gens(names)
    p = a[0] * t * x + a[1] * F**2 + a[2]
    q = b[0] * x**3 + b[1] * t * F + b[2]
    pt = {"t": 3, "x": -2, "F": 5}
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
