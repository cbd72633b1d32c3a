"""
Identities, differential equations and a certificate
====================================================

The weight series W(t, x) = sum w_n(t) x^n satisfies an algebraic equation,
a pair of second-order PDEs, and a coefficient symmetry tying [t^-j] to
[t^j].  All of these are exact checks on truncated series.
"""

from checkerboard import diffops, genfun as gf, ideal

W = gf.closed_table(2, 40).series()

# the quartic defining equation vanishes through x^40
print("algebraic residual zero:", gf.algebraic_residual(2, W).is_zero())

# both PDE pairs and their first-order consequence
print("PDE residuals zero:", [r.is_zero() for r in diffops.pde_residuals(2, W)])
print("first-order residual zero:", diffops.corollary_residual(2, W).is_zero())

# coefficient symmetry, e.g. for w_3 = t^-1 + 4t:  8 * 1 == 2 * 4
print(gf.coeffid_check(2, gf.closed_table(2, 40)))

# the PDEs alone rebuild the series from 1 + tx
print("pde_solve agrees:", diffops.pde_solve(3, 15) == gf.w_fixedpoint(3, 15).series())

# an explicit ideal-membership certificate; the witness re-expands to zero
result, cert = ideal.ideal_certificate(2)
print(result.status, result.detail)
