"""Truncated power series in ``x`` whose coefficients are Laurent polynomials in ``t``.

The truncation order is part of the value: a ``SeriesX`` of order ``N`` is
known exactly through ``x**N`` and says nothing beyond.  Binary operations
insist on equal orders; callers truncate explicitly.
"""

from fractions import Fraction
from numbers import Rational

from ._kronecker import convolve_int, integerize, normalize
from .laurent import LaurentPoly

_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})


class OrderMismatch(ValueError):
    """Raised when two series of different truncation order are combined."""


class SeriesX:
    """``sum_{m=0}^{order} terms[m] * x**m`` with ``terms[m]`` a LaurentPoly."""

    __slots__ = ("order", "terms")

    def __init__(self, terms, order=None):
        terms = [t if isinstance(t, LaurentPoly) else LaurentPoly({0: t}) for t in terms]
        if order is None:
            order = len(terms) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(terms) > order + 1:
            raise ValueError("more terms than the truncation order allows")
        terms = terms + [_ZERO] * (order + 1 - len(terms))
        self.order = order
        self.terms = tuple(terms)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([_ONE], order)

    @classmethod
    def from_dict(cls, coeffs, order):
        """``coeffs`` maps ``(j, m)`` to the coefficient of ``t**j x**m``; ``m > order`` is dropped."""
        rows = [dict() for _ in range(order + 1)]
        for (j, m), v in coeffs.items():
            if 0 <= m <= order:
                rows[m][j] = rows[m].get(j, 0) + v
        return cls([LaurentPoly(r) for r in rows], order)

    # -- access ----------------------------------------------------------------
    def __getitem__(self, m):
        return self.terms[m]

    def coeff(self, j, m):
        return self.terms[m].coeff(j)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return self.order + 1

    def is_zero(self):
        return all(not t for t in self.terms)

    def nonzero_orders(self):
        return [m for m, t in enumerate(self.terms) if t]

    def __eq__(self, other):
        if not isinstance(other, SeriesX):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, self.terms))

    def __repr__(self):
        shown = ", ".join(f"x^{m}: {t}" for m, t in enumerate(self.terms) if t)
        return f"SeriesX(order={self.order}, {{{shown}}})"

    # -- truncation ------------------------------------------------------------
    def truncate(self, order):
        if order > self.order:
            raise OrderMismatch(f"cannot raise precision from {self.order} to {order}")
        return SeriesX(self.terms[: order + 1], order)

    def pad(self, order):
        """Declare zero coefficients up to ``order``.

        Only sound when the caller knows the extra coefficients do not matter,
        as in a fixed-point step whose output at ``x**k`` reads input below ``k``.
        """
        if order < self.order:
            return self.truncate(order)
        return SeriesX(self.terms, order)

    def _check(self, other):
        if not isinstance(other, SeriesX):
            raise TypeError("expected SeriesX")
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    # -- linear structure ----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (Rational, LaurentPoly)) and not isinstance(other, bool):
            return SeriesX([self.terms[0] + other] + list(self.terms[1:]), self.order)
        self._check(other)
        return SeriesX([a + b for a, b in zip(self.terms, other.terms)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return SeriesX([-a for a in self.terms], self.order)

    def __sub__(self, other):
        if isinstance(other, (Rational, LaurentPoly)) and not isinstance(other, bool):
            return self + (-other)
        self._check(other)
        return SeriesX([a - b for a, b in zip(self.terms, other.terms)], self.order)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k):
        return SeriesX([a.scale(k) for a in self.terms], self.order)

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        if isinstance(other, LaurentPoly):
            return SeriesX([a * other for a in self.terms], self.order)
        if isinstance(other, SeriesX):
            return series_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Rational, LaurentPoly)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        result = SeriesX.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- monomial shifts and derivations ------------------------------------------
    def mul_t(self, k):
        """Multiply by ``t**k``."""
        return SeriesX([a.shift(k) for a in self.terms], self.order)

    def mul_x(self, k=1):
        """Multiply by ``x**k``; precision rises by ``k``."""
        return SeriesX([_ZERO] * k + list(self.terms), self.order + k)

    def mul_x_keep(self, k=1):
        """Multiply by ``x**k`` keeping the current order."""
        return self.mul_x(k).truncate(self.order)

    def theta_t(self):
        """``t d/dt``."""
        return SeriesX([a.theta() for a in self.terms], self.order)

    def theta_x(self):
        """``x d/dx``."""
        return SeriesX([a.scale(m) for m, a in enumerate(self.terms)], self.order)

    def d_t(self):
        return SeriesX([a.derivative() for a in self.terms], self.order)

    def d_x(self):
        """``d/dx``; precision drops by one."""
        if self.order == 0:
            raise OrderMismatch("derivative of an order-0 series has no known terms")
        return SeriesX([a.scale(m + 1) for m, a in enumerate(self.terms[1:])], self.order - 1)

    def bar(self):
        """``t -> 1/t`` applied coefficientwise."""
        return SeriesX([a.bar() for a in self.terms], self.order)

    def at_t_one(self):
        """Coefficient list of the specialisation ``t = 1``."""
        return [a.value_at_one() for a in self.terms]


def series_mul(S, T):
    """Truncated Cauchy product of two series of equal order."""
    S._check(T)
    N = S.order
    s_rows = [m for m in range(N + 1) if S.terms[m]]
    t_rows = [m for m in range(N + 1) if T.terms[m]]
    if not s_rows or not t_rows:
        return SeriesX.zero(N)
    if len(s_rows) * len(t_rows) <= 16:
        return naive_series_mul(S, T)
    lo_s = min(S.terms[m].min_exp() for m in s_rows)
    hi_s = max(S.terms[m].max_exp() for m in s_rows)
    lo_t = min(T.terms[m].min_exp() for m in t_rows)
    hi_t = max(T.terms[m].max_exp() for m in t_rows)
    stride = (hi_s - lo_s) + (hi_t - lo_t) + 1
    rows_s = max(s_rows) + 1
    rows_t = min(max(t_rows), N) + 1

    def dense(X, rows, lo):
        flat = []
        for m in range(rows):
            row = X.terms[m]._c
            flat.extend(row.get(j, 0) for j in range(lo, lo + stride))
        return flat

    a, da = integerize(dense(S, rows_s, lo_s))
    b, db = integerize(dense(T, rows_t, lo_t))
    prod = convolve_int(a, b)
    den = da * db
    base = lo_s + lo_t
    out = []
    for m in range(N + 1):
        chunk = prod[m * stride:(m + 1) * stride]
        if den != 1:
            chunk = [normalize(Fraction(c, den)) for c in chunk]
        out.append(LaurentPoly.from_dense(base, chunk))
    return SeriesX(out, N)


def naive_series_mul(S, T):
    """Schoolbook truncated product; reference implementation for tests."""
    S._check(T)
    N = S.order
    out = [_ZERO] * (N + 1)
    for i, a in enumerate(S.terms):
        if not a:
            continue
        for k in range(N + 1 - i):
            b = T.terms[k]
            if b:
                out[i + k] = out[i + k] + a * b
    return SeriesX(out, N)
