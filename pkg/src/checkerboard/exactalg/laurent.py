"""Laurent polynomials in one variable ``t`` with exact coefficients."""

from fractions import Fraction
from numbers import Rational

from ._kronecker import convolve, normalize

# below this many terms the schoolbook product beats packing overhead
_KRONECKER_MIN_TERMS = 12


def _check_coeff(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")
    return normalize(Fraction(c)) if not isinstance(c, int) else c


class LaurentPoly:
    """Finitely supported map ``j -> coefficient of t**j``.

    Zero coefficients are never stored, so two polynomials are equal iff their
    coefficient dicts are equal.  Instances are immutable by convention.

    >>> w3 = LaurentPoly({-1: 1, 1: 4})
    >>> w3 * w3
    LaurentPoly({-2: 1, 0: 8, 2: 16})
    >>> w3.bar()
    LaurentPoly({-1: 4, 1: 1})
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for j, v in dict(coeffs).items():
                if not isinstance(j, int) or isinstance(j, bool):
                    raise TypeError("exponents must be integers")
                v = _check_coeff(v)
                if v:
                    c[j] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, j, coeff=1):
        return cls({j: coeff})

    @classmethod
    def constant(cls, coeff):
        return cls({0: coeff})

    @classmethod
    def from_dense(cls, offset, values):
        """Build from ``values[i]`` = coefficient of ``t**(offset+i)``."""
        return cls._raw({offset + i: normalize(v) for i, v in enumerate(values) if v})

    # -- access -------------------------------------------------------------
    @property
    def coeffs(self):
        return dict(self._c)

    def coeff(self, j):
        return self._c.get(j, 0)

    def __getitem__(self, j):
        return self._c.get(j, 0)

    def items(self):
        return sorted(self._c.items())

    def support(self):
        return sorted(self._c)

    def min_exp(self):
        return min(self._c) if self._c else None

    def max_exp(self):
        return max(self._c) if self._c else None

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def is_integral(self):
        return all(isinstance(v, int) for v in self._c.values())

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, Rational):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- ring operations ----------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for j, v in o._c.items():
            s = c.get(j, 0) + v
            if s:
                c[j] = normalize(s)
            else:
                c.pop(j, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({j: -v for j, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, k):
        """Multiply every coefficient by the rational ``k``."""
        k = _check_coeff(k)
        if not k:
            return LaurentPoly()
        return LaurentPoly._raw({j: normalize(v * k) for j, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return laurent_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        result = LaurentPoly({0: 1})
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k):
        """Multiply by ``t**k``."""
        return LaurentPoly._raw({j + k: v for j, v in self._c.items()})

    def bar(self):
        """The substitution ``t -> 1/t``."""
        return LaurentPoly._raw({-j: v for j, v in self._c.items()})

    def theta(self):
        """Euler operator ``t d/dt``: coefficient of ``t**j`` times ``j``."""
        return LaurentPoly._raw({j: j * v for j, v in self._c.items() if j})

    def derivative(self):
        return LaurentPoly._raw({j - 1: j * v for j, v in self._c.items() if j})

    def __call__(self, t):
        """Evaluate at a nonzero exact number."""
        total = 0
        for j, v in self._c.items():
            total += v * (Fraction(t) ** j if j < 0 else t ** j)
        return normalize(Fraction(total)) if isinstance(total, Fraction) else total

    def value_at_one(self):
        return sum(self._c.values())

    # -- text forms -----------------------------------------------------------
    def to_text(self):
        """Canonical text: sorted ``j:coefficient`` pairs joined by spaces."""
        return " ".join(f"{j}:{v}" for j, v in self.items())

    @classmethod
    def from_text(cls, text):
        c = {}
        for tok in text.split():
            j, v = tok.split(":", 1)
            c[int(j)] = Fraction(v) if "/" in v else int(v)
        return cls(c)

    def to_json(self):
        """``{"j": "coefficient"}`` with decimal strings, keys in exponent order."""
        return {str(j): str(v) for j, v in self.items()}

    @classmethod
    def from_json(cls, obj):
        return cls({int(j): (Fraction(v) if "/" in v else int(v)) for j, v in obj.items()})

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for j, v in self.items():
            if j == 0:
                mono = str(v)
            else:
                pw = "t" if j == 1 else f"t^{j}"
                mono = pw if v == 1 else (f"-{pw}" if v == -1 else f"{v}*{pw}")
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


def laurent_mul(a, b):
    """Exact product of two Laurent polynomials."""
    if not a._c or not b._c:
        return LaurentPoly()
    if len(a._c) < _KRONECKER_MIN_TERMS or len(b._c) < _KRONECKER_MIN_TERMS:
        out = {}
        for i, u in a._c.items():
            for j, v in b._c.items():
                k = i + j
                s = out.get(k, 0) + u * v
                if s:
                    out[k] = s
                else:
                    del out[k]
        return LaurentPoly._raw({k: normalize(v) for k, v in out.items()})
    lo_a, hi_a = min(a._c), max(a._c)
    lo_b, hi_b = min(b._c), max(b._c)
    da = [a._c.get(j, 0) for j in range(lo_a, hi_a + 1)]
    db = [b._c.get(j, 0) for j in range(lo_b, hi_b + 1)]
    return LaurentPoly.from_dense(lo_a + lo_b, convolve(da, db))


def laurent_bar(a):
    return a.bar()
