"""Weight polynomials ``w_{d,n}`` and their generating series.

Four independent routes to the same Laurent polynomials:

* the convolution recursion for triangulations (``w_recursion``),
* fixed-point iteration of the algebraic equation (``w_fixedpoint``),
* the closed binomial sums (``w_closed`` for d = 2, ``w_closed_d`` in general),
* brute-force enumeration (see :mod:`checkerboard.enumeration`).

Plus the derived objects: specialisations, the array of antidiagonal
coefficients with its row/column series, the extremal series, the derivative
series at ``t = 1`` and the real-rootedness/positivity checks.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import _univariate as up
from .exactalg import LaurentPoly, SeriesX

METHODS = ("enum", "recursion", "fixedpoint", "closed")


def _exact_div(num, den):
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-exact division {num}/{den}")
    return q


def t_dn(d, n):
    """Number of d-dissections into ``n`` polygons (Fuss-Catalan number)."""
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    return _exact_div(comb(d * n, n), (d - 1) * n + 1)


@dataclass
class CheckResult:
    """Outcome of one verification: ``status`` is pass, fail or skipped."""

    name: str
    status: str
    params: dict = field(default_factory=dict)
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self):
        return self.status == "pass"

    def __bool__(self):
        return self.status != "fail"


@dataclass
class WeightTable:
    d: int
    polys: list
    method: str

    @property
    def n_max(self):
        return len(self.polys) - 1

    def __getitem__(self, n):
        return self.polys[n]

    def series(self, order=None):
        order = self.n_max if order is None else order
        return SeriesX(self.polys[: order + 1], order)

    def to_json(self):
        return {
            "d": self.d,
            "method": self.method,
            "w": [{"n": n, "coeffs": p.to_json()} for n, p in enumerate(self.polys)],
        }

    @classmethod
    def from_json(cls, obj):
        polys = [None] * len(obj["w"])
        for entry in obj["w"]:
            polys[entry["n"]] = LaurentPoly.from_json(entry["coeffs"])
        return cls(obj["d"], polys, obj["method"])


# -- recursion and fixed point -----------------------------------------------------


def w_recursion(n_max):
    """Triangulation weights from ``w_{n+1}(t) = t * sum_k w_k(1/t) w_{n-k}(1/t)``."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    polys = [LaurentPoly({0: 1})]
    bars = [polys[0]]
    for n in range(n_max):
        acc = LaurentPoly()
        for k in range(n // 2 + 1):
            term = bars[k] * bars[n - k]
            acc = acc + (term if 2 * k == n else term.scale(2))
        w = acc.shift(1)
        polys.append(w)
        bars.append(w.bar())
    return WeightTable(2, polys, "recursion")


def _fixedpoint_step(Z, d):
    inner = 1 + (Z**d).mul_t(-1).mul_x_keep(1)
    return 1 + (inner**d).mul_t(1).mul_x_keep(1)


def fixedpoint_series(d, N):
    """The series ``W`` solving ``W = 1 + t x (1 + x W^d / t)^d`` through ``x**N``.

    Iterates from ``Z = 1``.  Iterate ``k`` is exact through ``x**k`` because
    the map reads ``Z`` only below the order it writes, so iterate ``k`` is
    computed at order ``k``.  The final, ``(N+1)``-th, iteration runs at order
    ``N`` and must reproduce its input.
    """
    if d < 2 or N < 0:
        raise ValueError("need d >= 2 and N >= 0")
    Z = SeriesX.one(0)
    for k in range(1, N + 1):
        Z = _fixedpoint_step(Z.pad(k), d)
    again = _fixedpoint_step(Z, d)
    if again != Z:
        raise ArithmeticError("fixed-point iteration did not stabilise")
    return Z


def w_fixedpoint(d, N):
    W = fixedpoint_series(d, N)
    return WeightTable(d, list(W.terms), "fixedpoint")


def algebraic_residual(d, W):
    """Left side of the algebraic equation evaluated at ``W`` (same order as ``W``)."""
    if d == 2:
        N = W.order
        # t(1 + tx) - tW + 2t x^2 W^2 + x^3 W^4
        one = SeriesX.one(N)
        W2 = W * W
        res = (one + one.mul_x_keep(1).mul_t(1)).mul_t(1) - W.mul_t(1)
        return res + W2.mul_x_keep(2).mul_t(1).scale(2) + (W2 * W2).mul_x_keep(3)
    inner = 1 + (W**d).mul_t(-1).mul_x_keep(1)
    return W - 1 - (inner**d).mul_t(1).mul_x_keep(1)


# -- closed formulas -----------------------------------------------------------------


def w_closed(n):
    """Triangulation weight ``w_n`` from the three binomial sums (by ``n mod 3``)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    q, r = divmod(n, 3)
    c = {}
    for k in range(q + 1):
        if r == 0:
            num = comb(4 * q - 2 * k, q + k) * comb(2 * q + 2 * k, 3 * k)
            den, j = 3 * k + 1, q - 2 * k
        elif r == 1:
            num = comb(4 * q + 2 - 2 * k, q + k) * comb(2 * q + 2 * k, 3 * k)
            den, j = 2 * q + 1 - k, q + 1 - 2 * k
        else:
            num = comb(4 * q + 2 - 2 * k, q + 1 + k) * comb(2 * q + 2 + 2 * k, 3 * k + 1)
            den, j = 3 * k + 2, q - 2 * k
        v = _exact_div(num, den)
        if v:
            c[j] = v
    return LaurentPoly(c)


def w_closed_d(d, m):
    """Weight ``w_{d,m}`` from the general-d binomial sums (write ``m = (d+1)n + j``)."""
    if d < 2 or m < 0:
        raise ValueError("need d >= 2 and m >= 0")
    n, j = divmod(m, d + 1)
    c = {}
    if j == 0:
        for k in range((d - 1) * n + 1):
            num = comb(d * d * n - d * k, n + k) * comb(d * (n + k), (d + 1) * k)
            v = _exact_div(num, (d + 1) * k + 1)
            if v:
                c[(d - 1) * n - 2 * k] = v
    elif j == 1:
        for k in range((d - 1) * n + 1):
            num = comb(d * d * n + d - d * k, n + k) * comb(d * (n + k), (d + 1) * k)
            v = _exact_div(num, d * n + 1 - k)
            if v:
                c[(d - 1) * n + 1 - 2 * k] = v
    else:
        c = _closed_d_general_j(d, n, j)
    return LaurentPoly(c)


def _closed_d_general_j(d, n, j):
    """Third family, valid for ``2 <= j <= d + 1``."""
    c = {}
    for k in range((d - 1) * n + j - 1):
        num = comb(d * d * n + d * (j - 1) - d * k, n + 1 + k) * comb(d * n + d + d * k, (d + 1) * k + d - j + 1)
        v = _exact_div(num, (d + 1) * k + d - j + 2)
        if v:
            c[(d - 1) * n + j - 2 - 2 * k] = v
    return c


def closed_table(d, N):
    polys = [w_closed(n) if d == 2 else w_closed_d(d, n) for n in range(N + 1)]
    return WeightTable(d, polys, "closed")


def fair_formula(d, n):
    """``C(dn, n)^2 / ((d-1)n + 1)``: fair checkerboard d-dissections into ``2n`` polygons."""
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    return _exact_div(comb(d * n, n) ** 2, (d - 1) * n + 1)


def eulerian_formula(d, n):
    """``C(d^2 n + d, n) / (dn + 1)``: dissections into ``(d+1)n+1`` polygons with black boundary."""
    if d < 2 or n < 0:
        raise ValueError("need d >= 2 and n >= 0")
    return _exact_div(comb(d * d * n + d, n), d * n + 1)


# -- coefficient identity ------------------------------------------------------------------


def coeffid_check(d, table):
    """``((d-1)n + 2 + (d+1)j) [t^-j] w = ((d-1)n + 2 - (d+1)j) [t^j] w`` for every entry."""
    start = time.perf_counter()
    checked = 0
    for n, w in enumerate(table.polys):
        base = (d - 1) * n + 2
        for j in sorted(set(w.support()) | {-e for e in w.support()}):
            checked += 1
            lhs = (base + (d + 1) * j) * w.coeff(-j)
            rhs = (base - (d + 1) * j) * w.coeff(j)
            if lhs != rhs:
                return CheckResult(
                    "coeffid", "fail", {"d": d, "n_max": table.n_max},
                    {"n": n, "j": j, "lhs": str(lhs), "rhs": str(rhs)},
                    time.perf_counter() - start,
                )
    return CheckResult("coeffid", "pass", {"d": d, "n_max": table.n_max}, {"checked": checked},
                       time.perf_counter() - start)


# -- specialisations t = -x, t = -1/x ---------------------------------------------------------


def complete_prefix(N):
    """Largest power of ``x`` in ``W(-x, x)`` or ``W(-1/x, x)`` fixed by ``w_0..w_N``.

    Uses only the degree bound ``|j| <= (n+2)/3`` for monomials ``t^j`` of ``w_n``:
    ``w_n`` touches powers ``>= n - floor((n+2)/3)``, which grows with ``n``.
    """
    n = N + 1
    return n - (n + 2) // 3 - 1


def specialize(table, sign_power):
    """Coefficients of ``W(-x^s, x)`` for ``s = +1`` or ``-1`` over the complete prefix."""
    P = complete_prefix(table.n_max)
    out = [0] * (P + 1)
    for n, w in enumerate(table.polys):
        for j, c in w.items():
            p = n + sign_power * j
            if 0 <= p <= P:
                out[p] += -c if j % 2 else c
    return out


def specialization_check(N, table=None):
    """Residuals ``W(-x, x) - 1`` and ``W(-1/x, x)`` as SeriesX over the complete prefix."""
    if N < 2:
        raise ValueError("N must be >= 2")
    table = table or closed_table(2, N)
    table = WeightTable(2, table.polys[: N + 1], table.method)
    plus = specialize(table, 1)
    minus = specialize(table, -1)
    plus[0] -= 1
    return SeriesX(plus), SeriesX(minus)


# -- array A and its row/column series --------------------------------------------------


@dataclass
class ArrayA:
    """``rows[r][c]`` = coefficient of ``t^(r-c)`` in ``w_(r+c)``."""

    rows: list

    def row_sums(self):
        return [sum(r) for r in self.rows]

    def col_sums(self, n_cols=None):
        n_cols = len(self.rows[0]) if n_cols is None else n_cols
        return [sum(r[c] for r in self.rows) for c in range(n_cols)]

    def to_csv(self):
        return "\n".join(",".join(str(v) for v in row) for row in self.rows) + "\n"


def _check_parity(table):
    for n, w in enumerate(table.polys):
        for j in w.support():
            if (n + j) % 2:
                raise ArithmeticError(f"parity violation: t^{j} in w_{n}")


def _const_series(values):
    return SeriesX([LaurentPoly({0: v}) for v in values])


def build_array(table, n_rows):
    """Rows ``0..n_rows-1``, columns ``0..2*n_rows-1``; needs ``w`` up to ``3*n_rows - 2``."""
    n_cols = 2 * n_rows
    need = n_rows - 1 + n_cols - 1
    if table.n_max < need:
        raise ValueError(f"array with {n_rows} rows needs w up to n = {need}")
    rows = [[table[r + c].coeff(r - c) for c in range(n_cols)] for r in range(n_rows)]
    return ArrayA(rows)


def row_col_series(N, table=None):
    """``R(x) = W(sqrt x, sqrt x)`` and ``C(x) = W(1/sqrt x, sqrt x)`` through ``x**N``, with the array.

    Row ``r`` and column ``c`` of the array are finite: the degree bound gives
    ``c <= 2r + 1`` on a row and ``r <= 2c + 1`` on a column, so ``w`` up to
    ``3N + 1`` determines both series through ``x**N``.
    """
    need = 3 * N + 1
    table = table or fixedpoint_table_cached(2, need)
    if table.n_max < need:
        raise ValueError(f"need w up to n = {need}")
    _check_parity(WeightTable(2, table.polys[: need + 1], table.method))
    R = [0] * (N + 1)
    C = [0] * (N + 1)
    for n in range(need + 1):
        for j, v in table[n].items():
            r, c = (n + j) // 2, (n - j) // 2
            if r <= N:
                R[r] += v
            if c <= N:
                C[c] += v
    return _const_series(R), _const_series(C), build_array(table, N + 1)


_TABLE_CACHE = {}


def fixedpoint_table_cached(d, N):
    key = (d, N)
    if key not in _TABLE_CACHE:
        hit = [k for k in _TABLE_CACHE if k[0] == d and k[1] >= N]
        if hit:
            big = _TABLE_CACHE[hit[0]]
            return WeightTable(d, big.polys[: N + 1], big.method)
        _TABLE_CACHE[key] = w_fixedpoint(d, N)
    return _TABLE_CACHE[key]


def _x_series_values(S):
    return [t.coeff(0) for t in S.terms]


def row_quartic_residual(R):
    """``1 + x - R + 2xR^2 + xR^4``."""
    R2 = R * R
    return 1 + _const_series([0, 1]).pad(R.order) - R + R2.mul_x_keep(1).scale(2) + (R2 * R2).mul_x_keep(1)


def col_quartic_residual(C):
    """``2 - C + 2xC^2 + x^2 C^4``."""
    C2 = C * C
    return 2 - C + C2.mul_x_keep(1).scale(2) + (C2 * C2).mul_x_keep(2)


def lagrange_R(N):
    """Coefficients of ``R`` from the Lagrange-inversion sum."""
    out = [1]
    for n in range(1, N + 1):
        inner = sum(Fraction(comb(2 * n, k) * comb(2 * n - k, n - 1 - 2 * k), 2**k)
                    for k in range((n - 1) // 2 + 1))
        v = inner * 4**n / n
        if v.denominator != 1:
            raise ArithmeticError(f"Lagrange coefficient {n} is not an integer: {v}")
        out.append(v.numerator)
    return out


def even_restricted_sums(array):
    """Even-column part of each row and even-row part of each column."""
    rows = [sum(v for c, v in enumerate(row) if c % 2 == 0) for row in array.rows]
    n_cols = len(array.rows[0])
    cols = [sum(array.rows[r][c] for r in range(0, len(array.rows), 2)) for c in range(n_cols)]
    return rows, cols


# -- extremal series -----------------------------------------------------------------------


def extremal_AB(N, table=None):
    """Extremal diagonals ``A_n = [t^-n] w_{3n}`` and ``B_n = [t^(n+1)] w_{3n+1}`` as series."""
    need = 3 * N + 1
    table = table or closed_table(2, need)
    A = [table[3 * n].coeff(-n) for n in range(N + 1)]
    B = [table[3 * n + 1].coeff(n + 1) for n in range(N + 1)]
    return _const_series(A), _const_series(B)


def extremal_closed(N):
    A = [_exact_div(comb(4 * n, n), 3 * n + 1) for n in range(N + 1)]
    B = [_exact_div(comb(4 * n + 2, n), 2 * n + 1) for n in range(N + 1)]
    return A, B


# -- derivative at t = 1 -----------------------------------------------------------------------


@dataclass
class WPrime:
    series: SeriesX
    residual: SeriesX
    ratio: Fraction


def wprime_series(N, table=None):
    """``sum_n w_n'(1) x^n``, the residual of its quadratic equation, and ``8 w_N'(1) / (3 t_{2,N})``."""
    table = table or closed_table(2, N)
    vals = [sum(j * c for j, c in table[n].items()) for n in range(N + 1)]
    S = _const_series(vals)
    x = _const_series([0, 1]).pad(N)
    poly = _const_series([0, 3, 4]).pad(N) if N >= 2 else _const_series([0, 3][: N + 1])
    residual = x - S + poly * (S * S)
    ratio = Fraction(8 * vals[N], 3 * t_dn(2, N)) if N else Fraction(0)
    return WPrime(S, residual, ratio)


# -- positivity conjectures ----------------------------------------------------------------------


def homogenize(w, n):
    """Coefficients ``q[a]`` of ``u^a v^(n-a)`` in ``Q_n(u, v)``."""
    q = [0] * (n + 1)
    for j, c in w.items():
        a, r = divmod(n + j, 2)
        if r:
            raise ArithmeticError(f"parity violation in w_{n}")
        q[a] += c
    return q


def _nonzero_root_part(q):
    """Strip the power of ``u`` dividing ``Q_n(u, 1)``."""
    k = 0
    while k < len(q) and q[k] == 0:
        k += 1
    return up.trim(q[k:])


def is_real_rooted(q):
    p = _nonzero_root_part(q)
    if len(p) <= 1:
        return True
    return up.count_real_roots(p) == up.squarefree_degree(p)


def interlaces(q_small, q_big):
    """Nonzero roots of ``q_small`` strictly separate those of ``q_big``.

    Isolates the roots of the larger polynomial, shrinks each interval until
    it is free of roots of the smaller one and requires the signs of the
    smaller polynomial there to alternate.
    """
    f = _nonzero_root_part(q_small)
    g = _nonzero_root_part(q_big)
    if up.degree(g) != up.degree(f) + 1:
        return False
    if up.squarefree_degree(g) != up.degree(g) or up.count_real_roots(g) != up.degree(g):
        return False
    if up.degree(up.gcd_poly(f, g)) > 0:
        return False
    signs = []
    for iv in up.isolate_roots(g):
        a, b = up.refine(g, iv, avoid=f)
        signs.append(up.evaluate(f, (a + b) / 2) > 0)
    return all(s != t for s, t in zip(signs, signs[1:]))


def symmetric_reduction(q):
    """Write ``Q(u, v) + Q(v, u)`` as ``R(e1, e2)``; returns ``{(a, b): coeff}`` of ``e1^a e2^b``."""
    n = len(q) - 1
    s = [q[i] + q[n - i] for i in range(n + 1)]
    out = {}
    for i in range(n, (n - 1) // 2, -1):
        c = s[i]
        if not c:
            continue
        b = n - i
        a = 2 * i - n
        out[(a, b)] = c
        for l in range(a + 1):
            s[b + l] -= c * comb(a, l)
    if any(s):
        raise ArithmeticError("symmetric reduction left a remainder")
    return out


def positivity_suite(n_max, table=None):
    """Real-rootedness, interlacing with ``Q_{n+3}`` and positivity of the symmetric part.

    A failing ``n`` is recorded, not raised: these are conjecture checks.
    """
    start = time.perf_counter()
    table = table or closed_table(2, n_max + 3)
    Q = [homogenize(table[n], n) for n in range(table.n_max + 1)]
    real_fail = [n for n in range(n_max + 1) if not is_real_rooted(Q[n])]
    inter_fail = [n for n in range(max(n_max - 2, 0)) if not interlaces(Q[n], Q[n + 3])]
    pos_fail = [n for n in range(n_max + 1) if any(c < 0 for c in symmetric_reduction(Q[n]).values())]
    detail = {
        "real_rooted_first_failure": real_fail[0] if real_fail else None,
        "interlacing_first_failure": inter_fail[0] if inter_fail else None,
        "positivity_first_failure": pos_fail[0] if pos_fail else None,
        "real_rooted_checked": n_max + 1,
        "interlacing_checked": max(n_max - 2, 0),
        "positivity_checked": n_max + 1,
    }
    ok = not (real_fail or inter_fail or pos_fail)
    return CheckResult("positivity", "pass" if ok else "fail", {"n_max": n_max}, detail,
                       time.perf_counter() - start)
