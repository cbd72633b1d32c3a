from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from checkerboard import enumeration as en, genfun as gf
from checkerboard.exactalg import LaurentPoly


@pytest.mark.parametrize("d,n,count", [(2, 3, 5), (3, 2, 3), (2, 0, 1), (3, 0, 1), (2, 5, 42), (4, 3, 22)])
def test_enum_counts(d, n, count):
    assert len(list(en.enum_trees(d, n))) == count == gf.t_dn(d, n)


def test_enum_order_is_canonical():
    brackets = [t.bracket() for t in en.enum_trees(2, 3)]
    assert brackets == sorted(brackets) and len(set(brackets)) == 5
    assert brackets[0] == "(((..).).)"


@given(st.integers(2, 4), st.integers(0, 5), st.data())
@settings(max_examples=40)
def test_bracket_round_trip(d, n, data):
    i = data.draw(st.integers(0, gf.t_dn(d, n) - 1))
    tree = en.tree_at(d, n, i)
    assert en.DissectionTree.from_bracket(d, tree.bracket()) == tree
    assert tree.n == n and tree.n_leaves == (d - 1) * n + 1


def test_colour_stats_examples():
    comb3 = en.DissectionTree.from_bracket(2, "(((..).).)")
    s = en.colour_stats(comb3)
    assert (s.n_b, s.n_w) == (2, 1)
    s = en.colour_stats(en.tree_at(2, 1, 0))
    assert (s.n_b, s.n_w, s.e_b, s.e_w) == (1, 0, 3, 0)


def test_edge_counts_for_every_small_triangulation():
    for n in range(7):
        for tree in en.enum_trees(2, n):
            s = en.colour_stats(tree)
            assert s.e_b == 2 * s.n_b - s.n_w + 1
            assert s.e_w == 2 * s.n_w - s.n_b + 1


def test_w_enum_examples():
    assert en.w_enum(2, 4) == LaurentPoly({0: 12, 2: 2})
    assert en.w_enum(3, 2) == LaurentPoly({0: 3})
    assert en.w_enum(2, 0) == LaurentPoly({0: 1})


def test_w_enum_agrees_with_tree_walk():
    for d, n in [(2, 6), (3, 4), (4, 3)]:
        assert en.w_enum(d, n) == en.w_enum_trees(d, n)


def test_boundary_words():
    assert en.boundary_word(en.tree_at(2, 0, 0)) == "UV"
    assert en.boundary_word(en.tree_at(2, 1, 0)) == "UUU"
    for tree in en.enum_trees(2, 5):
        assert len(en.boundary_word(tree)) == 7


def test_noncomm_small():
    N = en.noncomm_N(4)
    assert dict(N.items()) == {"UV": 1, "UUU": 1, "UUVV": 1, "UVVU": 1}


def test_eulerian_counts():
    assert [en.eulerian_count_enum(2, n) for n in range(3)] == [1, 2, 9]
    assert en.eulerian_count_enum(2, 1) == comb(6, 1) // 3


def test_fair_counts():
    assert en.fair_count_enum(2, 2) == 12
    assert en.fair_count_enum(2, 0) == 1
    assert en.fair_count_enum(3, 2) == gf.w_fixedpoint(3, 4)[4].coeff(0) == 45


def test_lattice_paths():
    assert [en.lattice_path_count(n) for n in (0, 1, 3)] == [1, 2, 100]


def test_guard_stops_large_enumerations():
    with pytest.raises(en.GuardExceeded):
        en.w_enum(2, 12, guard=1000)
    with pytest.raises(en.GuardExceeded):
        list(en.enum_trees(2, 10, guard=100))


def test_bad_arguments():
    with pytest.raises(ValueError):
        en.w_enum(1, 3)
    with pytest.raises(ValueError):
        en.w_enum(2, -1)
    with pytest.raises(IndexError):
        en.tree_at(2, 3, 5)
