"""Linear partial differential operators on ``SeriesX`` and the PDE characterisation of ``W``.

Each operator is a monomial prefactor times a product of first-order factors
``a + alpha*theta_t + beta*theta_x`` (``theta_t = t d/dt``, ``theta_x = x d/dx``),
so it maps ``t^j x^m`` to a single monomial with scalar
``prod (a + alpha*j + beta*m)``.

Normalisation: the general-d operators are scaled by ``2**d`` so that every
factor has integer coefficients.  At ``d = 2`` this gives exactly the four
integer operators of the triangulation case; the displayed general-d term
sums refer to the unscaled operators and are compared against
``2**-d`` times ours (see :func:`verify_termwise`).
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactalg import LaurentPoly, SeriesX
from .exactalg._kronecker import normalize
from .genfun import CheckResult, w_closed, w_closed_d

TAGS = ("DL", "DR", "DLt", "DRt")


@dataclass(frozen=True)
class OperatorId:
    tag: str
    d: int = 2

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown operator {self.tag!r}; expected one of {TAGS}")
        if self.d < 2:
            raise ValueError("d must be >= 2")


def operator_factors(op):
    """``(prefactor, dt, dx, factors)``: scalar ``prefactor * t^dt * x^dx`` and ``(a, alpha, beta)`` triples."""
    d = op.d
    if op.tag == "DL":
        fs = [(2, -(d + 1), d - 1)] + [(2 * j, d, d) for j in range(1, d)]
        return d, 1, 1, fs
    if op.tag == "DR":
        return 1, 0, 0, [(-2 * j, d + 1, d - 1) for j in range(d)]
    if op.tag == "DLt":
        fs = [(0, d + 1, d - 1)] + [(2 * j, -d, d) for j in range(1, d)]
        return d, 0, 1, fs
    return 1, 1, 0, [(2 - 2 * j, -(d + 1), d - 1) for j in range(d)]


def monomial_action(op, j, m):
    """``op(t^j x^m) = scalar * t^j_out x^m_out``; returns ``(scalar, j_out, m_out)``."""
    pre, dt, dx, fs = operator_factors(op)
    s = pre
    for a, alpha, beta in fs:
        s *= a + alpha * j + beta * m
    return s, j + dt, m + dx


def _apply_row(op, poly, m):
    """Apply ``op`` to ``x^m * poly(t)``; returns ``(m_out, LaurentPoly)``."""
    out = {}
    m_out = m
    for j, c in poly.items():
        s, j_out, m_out = monomial_action(op, j, m)
        if s:
            out[j_out] = out.get(j_out, 0) + s * c
    if not poly:
        m_out = monomial_action(op, 0, m)[2]
    return m_out, LaurentPoly(out)


def apply_operator(op, S):
    """Linear extension of :func:`monomial_action`, truncated at ``S.order``.

    Operators with an ``x`` prefactor push ``x^N`` to ``x^(N+1)``, which is
    dropped; every kept coefficient reads only known input coefficients.
    """
    rows = [LaurentPoly()] * (S.order + 1)
    for m, poly in enumerate(S.terms):
        if not poly:
            continue
        m_out, res = _apply_row(op, poly, m)
        if m_out <= S.order:
            rows[m_out] = rows[m_out] + res
    return SeriesX(rows, S.order)


def pde_residuals(d, W):
    """``((DL - DR) W, (DLt - DRt) W)``."""
    L, R, Lt, Rt = (apply_operator(OperatorId(tag, d), W) for tag in TAGS)
    return L - R, Lt - Rt


def corollary_residual(d, W):
    """``2t(1-W) + (d-1) x (d x W^(d-1) - t) W_x + (d+1) t (t + d x W^(d-1)) W_t``.

    ``W_x`` loses one order of precision, so the result has order ``W.order - 1``
    and the other factors are truncated to match.
    """
    if W.order < 1:
        raise ValueError("need W of order >= 1")
    N = W.order - 1
    Wk = W.truncate(N)
    Wd1 = Wk ** (d - 1)
    t = LaurentPoly({1: 1})
    Wx = W.d_x()
    Wt = Wk.d_t()
    term1 = (1 - Wk).mul_t(1).scale(2)
    term2 = (Wd1.mul_x_keep(1).scale(d) - t) * Wx
    term2 = term2.mul_x_keep(1).scale(d - 1)
    term3 = (Wd1.mul_x_keep(1).scale(d) + t) * Wt
    term3 = term3.mul_t(1).scale(d + 1)
    return term1 + term2 + term3


def coeff_identity_series(W):
    """``x Wbar_x + 2 Wbar + 3t Wbar_t - (x W_x + 2 W - 3t W_t)`` for ``d = 2``."""
    Wb = W.bar()
    lhs = Wb.theta_x() + Wb.scale(2) + Wb.theta_t().scale(3)
    rhs = W.theta_x() + W.scale(2) - W.theta_t().scale(3)
    return lhs - rhs


class PivotError(ArithmeticError):
    """Neither recurrence determines a coefficient."""


def pde_solve(d, N):
    """Rebuild ``W`` through ``x**N`` from ``DL F = DR F``, ``DLt F = DRt F`` and ``F = 1 + tx mod x^2``.

    Comparing coefficients of ``t^j x^m`` gives

    * ``DR-scalar(j, m) F[j, m] = DL-scalar(j-1, m-1) F[j-1, m-1]``,
    * ``DRt-scalar(j-1, m) F[j-1, m] = DLt-scalar(j, m-1) F[j, m-1]``, i.e. after
      shifting ``j``: ``DRt-scalar(j, m) F[j, m] = DLt-scalar(j+1, m-1) F[j+1, m-1]``.

    The first is used when its pivot is nonzero, otherwise the second; when
    both pivots are nonzero both are evaluated and must agree.
    """
    if d < 2 or N < 0:
        raise ValueError("need d >= 2 and N >= 0")
    DL, DR, DLt, DRt = (OperatorId(tag, d) for tag in TAGS)
    rows = [{0: 1}, {1: 1}][: N + 1]
    for m in range(2, N + 1):
        prev = rows[m - 1]
        lo, hi = min(prev) - 1, max(prev) + 1
        row = {}
        for j in range(lo, hi + 1):
            p = monomial_action(DR, j, m)[0]
            pt = monomial_action(DRt, j, m)[0]
            vals = []
            if p:
                vals.append(Fraction(monomial_action(DL, j - 1, m - 1)[0] * prev.get(j - 1, 0), p))
            if pt:
                vals.append(Fraction(monomial_action(DLt, j + 1, m - 1)[0] * prev.get(j + 1, 0), pt))
            if not vals:
                raise PivotError(f"both pivots vanish at (j, m) = ({j}, {m})")
            if len(vals) == 2 and vals[0] != vals[1]:
                raise ArithmeticError(f"recurrences disagree at (j, m) = ({j}, {m}): {vals}")
            if vals[0]:
                row[j] = normalize(vals[0])
        if not row:
            raise ArithmeticError(f"coefficient of x^{m} came out zero")
        rows.append(row)
    return SeriesX([LaurentPoly(r) for r in rows], N)


# -- term-by-term sums ---------------------------------------------------------------------


def _fact_ratio(nums, dens):
    """``prod nums! / prod dens!``; a negative denominator argument gives 0."""
    if any(a < 0 for a in dens):
        return 0
    if any(a < 0 for a in nums):
        raise ValueError(f"negative factorial in numerator: {nums}")
    top = 1
    for a in nums:
        top *= factorial(a)
    bot = 1
    for a in dens:
        bot *= factorial(a)
    return normalize(Fraction(top, bot))


def _sum_poly(scale, k_range, term):
    acc = {}
    for k in k_range:
        nums, dens, e = term(k)
        v = _fact_ratio(nums, dens)
        if v:
            acc[e] = acc.get(e, 0) + scale * v
    return LaurentPoly(acc)


def term_sums_d2(tag, n, r):
    """Term formula for ``op(x^m w_m)`` with ``m = 3n + r`` (triangulations); returns ``(m_out, poly)``."""
    if tag == "DL":
        if r == 0:
            return 3 * n + 1, _sum_poly(8, range(n + 1), lambda k: (
                [4 * n + 1 - 2 * k, 2 * n + 2 * k], [n + k, 3 * n - 3 * k, 3 * k, 2 * n - k], n + 1 - 2 * k))
        if r == 1:
            return 3 * n + 2, _sum_poly(8, range(1, n + 1), lambda k: (
                [4 * n + 1 - 2 * (k - 1), 2 * n + 2 + 2 * (k - 1)],
                [n + 1 + (k - 1), 3 * n - 1 - 3 * (k - 1), 3 * (k - 1) + 2, 2 * n - (k - 1)],
                n - 2 * (k - 1)))
        return 3 * n + 3, _sum_poly(4, range(n + 1), lambda k: (
            [4 * (n + 1) - 2 * k, 2 * (n + 1) + 2 * k],
            [n + 1 + k, 3 * (n + 1) - 3 * k - 2, 3 * k + 1, 2 * (n + 1) - k], n + 1 - 2 * k))
    if tag == "DR":
        if r == 0:
            return 3 * n, _sum_poly(4, range(n), lambda k: (
                [4 * n - 2 * k, 2 * n + 2 * k], [n + k, 3 * n - 3 * k - 2, 3 * k + 1, 2 * n - k], n - 2 * k))
        if r == 1:
            return 3 * n + 1, _sum_poly(8, range(n + 1), lambda k: (
                [4 * n + 1 - 2 * k, 2 * n + 2 * k], [n + k, 3 * n - 3 * k, 3 * k, 2 * n - k], n + 1 - 2 * k))
        return 3 * n + 2, _sum_poly(8, range(n), lambda k: (
            [4 * n + 1 - 2 * k, 2 * n + 2 + 2 * k], [n + 1 + k, 3 * n - 1 - 3 * k, 3 * k + 2, 2 * n - k],
            n - 2 * k))
    if tag == "DLt":
        if r == 0:
            return 3 * n + 1, _sum_poly(8, range(n), lambda k: (
                [4 * n - 2 * k, 2 * n + 1 + 2 * k], [n + k, 3 * n - 3 * k - 1, 3 * k + 1, 2 * n - k], n - 2 * k))
        if r == 1:
            return 3 * n + 2, _sum_poly(8, range(n + 1), lambda k: (
                [4 * n + 2 - 2 * k, 2 * n + 1 + 2 * k], [n + k, 3 * n + 1 - 3 * k, 3 * k, 2 * n + 1 - k],
                n + 1 - 2 * k))
        return 3 * n + 3, _sum_poly(8, range(n + 1), lambda k: (
            [4 * (n + 1) - 2 - 2 * k, 2 * (n + 1) + 1 + 2 * k],
            [n + 1 + k, 3 * (n + 1) - 3 * k - 3, 3 * k + 2, 2 * (n + 1) - 1 - k], n - 2 * k))
    if r == 0:
        return 3 * n, _sum_poly(8, range(1, n + 1), lambda k: (
            [4 * n - 2 - 2 * (k - 1), 2 * n + 1 + 2 * (k - 1)],
            [n + (k - 1), 3 * n - 3 * (k - 1) - 3, 3 * (k - 1) + 2, 2 * n - 1 - (k - 1)],
            n - 1 - 2 * (k - 1)))
    if r == 1:
        return 3 * n + 1, _sum_poly(8, range(1, n + 1), lambda k: (
            [4 * n - 2 * (k - 1), 2 * n + 1 + 2 * (k - 1)],
            [n + (k - 1), 3 * n - 3 * (k - 1) - 1, 3 * (k - 1) + 1, 2 * n - (k - 1)], n - 2 * (k - 1)))
    return 3 * n + 2, _sum_poly(8, range(n + 1), lambda k: (
        [4 * n + 2 - 2 * k, 2 * n + 1 + 2 * k], [n + k, 3 * n + 1 - 3 * k, 3 * k, 2 * n + 1 - k],
        n + 1 - 2 * k))


def general_sums(tag, d, n, j):
    """Term formula for the unscaled general-d ``op(x^m w_{d,m})``, ``m = (d+1)n + j``, ``1 <= j <= d+1``."""
    a = d * d * n
    b = (d * d - 1) * n
    e0 = (d - 1) * n
    if tag == "DL":
        if j == 1:
            return (d + 1) * n + 2, _sum_poly(d, range(1, e0 + 1), lambda k: (
                [a + d - d * (k - 1) - 1, d * n + d + d * (k - 1)],
                [n + (k - 1) + 1, b - (d + 1) * (k - 1) - 1, d * (k - 1) + d + (k - 1), d * n - (k - 1)],
                e0 - 2 * (k - 1)))
        return (d + 1) * n + j + 1, _sum_poly(d, range(e0 + j - 1), lambda k: (
            [a + d * j - d * k - 1, d * n + d * (k + 1)],
            [n + k + 1, b + d * j - (d + 1) * (k + 1), (d + 1) * (k + 1) - j, d * n + j - k - 1],
            e0 + (j + 1) - 2 * (k + 1)))
    if tag == "DR":
        if j == 1:
            return (d + 1) * n + 1, _sum_poly(1, range(e0 + 1), lambda k: (
                [a + d - d * k, d * n + d * k], [n + k, b - (d + 1) * k, (d + 1) * k, d * n + 1 - k],
                e0 + 1 - 2 * k))
        return (d + 1) * n + j, _sum_poly(1, range(e0 + j - 2), lambda k: (
            [a + d * (j - 1) - d * k, d * n + d * (k + 1)],
            [n + k + 1, b + d * (j - 2) - (d + 1) * k - 1, (d + 1) * k + d - j + 2, d * n + j - k - 1],
            e0 + j - 2 - 2 * k))
    if tag == "DLt":
        if j == 1:
            return (d + 1) * n + 2, _sum_poly(d, range(e0 + 1), lambda k: (
                [a + d - d * k, d * n + d + d * k - 1],
                [n + k, b + d - (d + 1) * k - 1, (d + 1) * k, d * n + 1 - k], e0 + 1 - 2 * k))
        omega = e0 + j - 2 if j <= d else e0 + d - 2
        return (d + 1) * n + j + 1, _sum_poly(d, range(omega + 1), lambda k: (
            [a + d * (j - 1) - d * k, d * n + 2 * d + d * k - 1],
            [n + k + 1, b + d * j - (d + 1) * (k + 1) - 1, (d + 1) * k + d - j + 2, d * n + j - k - 1],
            e0 + j - 2 - 2 * k))
    if j == 1:
        return (d + 1) * n + 1, _sum_poly(1, range(1, e0 + 1), lambda k: (
            [a + d - d * k, d * n + d * k], [n + k, b + d - (d + 1) * k, (d + 1) * k - d, d * n + 1 - k],
            e0 + 2 - 2 * k))
    alpha = 0 if j == 2 else 1
    return (d + 1) * n + j, _sum_poly(1, range(alpha, e0 + j - 1), lambda k: (
        [a + d * (j - 1) - d * k, d * n + d + d * k],
        [n + k + 1, b + d * (j - 1) - (d + 1) * k - 1, (d + 1) * k - j + 2, d * n + j - k - 1],
        e0 + j - 1 - 2 * k))


def verify_termwise(n_max, d=2):
    """Compare each operator applied to ``x^m w_m`` with its factorial-sum formula.

    ``d = 2`` uses the triangulation formulas (residues ``m mod 3``) with the
    integer operators; other ``d`` use the general formulas (``m = (d+1)n + j``,
    ``1 <= j <= d+1``) against ``2**-d`` times the scaled operators.
    """
    start = time.perf_counter()
    checked = 0
    for n in range(n_max + 1):
        cases = range(3) if d == 2 else range(1, d + 2)
        for r in cases:
            m = 3 * n + r if d == 2 else (d + 1) * n + r
            w = w_closed(m) if d == 2 else w_closed_d(d, m)
            for tag in TAGS:
                if d == 2:
                    m_exp, expected = term_sums_d2(tag, n, r)
                    scale = 1
                else:
                    m_exp, expected = general_sums(tag, d, n, r)
                    scale = Fraction(1, 2**d)
                m_out, got = _apply_row(OperatorId(tag, d), w, m)
                got = got.scale(scale)
                checked += 1
                if got != expected or (got and m_out != m_exp):
                    return CheckResult("termwise", "fail", {"d": d, "n_max": n_max},
                                       {"case": tag, "n": n, "residue": r, "expected": str(expected),
                                        "got": str(got)}, time.perf_counter() - start)
    return CheckResult("termwise", "pass", {"d": d, "n_max": n_max}, {"checked": checked},
                       time.perf_counter() - start)
