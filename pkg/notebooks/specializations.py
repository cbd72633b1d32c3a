"""
Specializations, arrays and extremal diagonals
==============================================

Substituting t = -x or t = -1/x collapses W to something trivial, the
antidiagonal coefficient array has row and column sums with quartic
generating functions, and the outermost diagonals are Fuss-Catalan
sequences.
"""

from checkerboard import genfun as gf, verify

plus, minus = gf.specialization_check(60)
print("W(-x, x) - 1 zero through x^%d:" % plus.order, plus.is_zero())
print("W(-1/x, x) zero through x^%d:" % minus.order, minus.is_zero())

R, C, A = gf.row_col_series(10, gf.closed_table(2, 31))
print("row sums   ", R.at_t_one()[:6])
print("column sums", C.at_t_one()[:6])
for row in A.rows[:6]:
    print(" ".join(f"{v:6d}" for v in row[:10]))

Aser, Bser = gf.extremal_AB(8)
print("A:", Aser.at_t_one())
print("B:", Bser.at_t_one())

# the mean balance of a random triangulation tends to 3/8
wp = gf.wprime_series(300)
print("8 w'_300(1) / (3 C_300) = %.5f" % float(wp.ratio))

# the printed table has one dropped digit; the verifier flags it as expected
report = verify.run_suite("specializations", verify.VerifyParams(order=30))
print(report.to_text())
