"""
Weight polynomials four ways
============================

Every checkerboard triangulation of a polygon with n + 2 vertices has a
black/white balance n_b - n_w.  Summing t to that power over all of them
gives the Laurent polynomial w_n(t).  Here we compute it by brute force,
by the product recursion, by iterating the functional equation and from
the binomial closed form, and check that they agree.
"""

import time

from checkerboard import enumeration as en, genfun as gf

# brute force: walk every plane binary tree with n internal nodes
for n in range(7):
    print(n, en.w_enum(2, n))

# the three generating-function methods on a longer range
N = 40
for name, build in [("recursion", lambda: gf.w_recursion(N)),
                    ("fixedpoint", lambda: gf.w_fixedpoint(2, N)),
                    ("closed", lambda: gf.closed_table(2, N))]:
    start = time.perf_counter()
    table = build()
    print(f"{name:>10}: {time.perf_counter() - start:.3f}s  w_{N}(1) = {table[N].value_at_one()}")

# setting t = 1 counts all triangulations, so we land on the Catalan numbers
assert [w.value_at_one() for w in gf.closed_table(2, 12).polys] == [gf.t_dn(2, n) for n in range(13)]

# the same story for quadrangulations and pentagon dissections
for d in (3, 4):
    W = gf.w_fixedpoint(d, 10)
    print(f"d={d}:", ", ".join(str(W[n]) for n in range(5)))
