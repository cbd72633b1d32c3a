from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from checkerboard import _univariate as up

u = sympy.Symbol("u")
roots = st.lists(st.integers(-6, 6), min_size=1, max_size=5)


def from_roots(rs, extra=()):
    p = sympy.Poly(sympy.prod([u - r for r in rs]) * sympy.prod(extra or [1]), u)
    return [int(c) for c in reversed(p.all_coeffs())]


def test_basic_ops():
    a = [-1, 0, 1]
    b = [1, 1]
    q, r = up.divmod_poly(a, b)
    assert q == [-1, 1] and not up.trim(r)
    assert up.degree(up.gcd_poly(a, b)) == 1
    assert up.evaluate(a, Fraction(1, 2)) == Fraction(-3, 4)
    assert up.derivative([1, 2, 3]) == [2, 6]


@given(roots)
@settings(max_examples=60)
def test_real_root_count_matches_sympy(rs):
    p = from_roots(rs, [u**2 + 1])
    assert up.count_real_roots(p) == len(set(rs))
    assert up.count_real_roots(p) == len(sympy.real_roots(sympy.Poly(list(reversed(p)), u), multiple=False))


@given(roots)
@settings(max_examples=40)
def test_isolation_brackets_each_root(rs):
    p = from_roots(rs)
    ivs = up.isolate_roots(p)
    assert len(ivs) == len(set(rs))
    for r in set(rs):
        assert sum(1 for a, b in ivs if a < r <= b) == 1


def test_squarefree_degree():
    assert up.squarefree_degree(from_roots([1, 1, 2])) == 2
    assert up.count_real_roots(from_roots([1, 2, 3]), 1, 3) == 2
