"""Sparse multivariate polynomials with exact rational coefficients.

Exponent vectors are packed into one Python int, 16 bits per variable, so
multiplying two monomials is a single integer addition.
"""

from fractions import Fraction
from numbers import Rational

from ._kronecker import normalize

BITS = 16
MASK = (1 << BITS) - 1


def _pack(exps):
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MASK:
            raise ValueError(f"exponent out of range: {e}")
        key |= e << (BITS * i)
    return key


def _unpack(key, n):
    return tuple((key >> (BITS * i)) & MASK for i in range(n))


class MultiPoly:
    """Polynomial in the indeterminates ``names`` (a tuple of strings)."""

    __slots__ = ("names", "_c")

    def __init__(self, names, terms=None):
        self.names = tuple(names)
        c = {}
        n = len(self.names)
        for exps, v in (terms or {}).items():
            if len(exps) != n:
                raise ValueError("exponent vector length does not match variables")
            if isinstance(v, bool) or not isinstance(v, Rational):
                raise TypeError("coefficients must be int or Fraction")
            if v:
                k = _pack(exps)
                s = c.get(k, 0) + v
                if s:
                    c[k] = normalize(Fraction(s)) if not isinstance(s, int) else s
                else:
                    c.pop(k, None)
        self._c = c

    @classmethod
    def _raw(cls, names, c):
        obj = cls.__new__(cls)
        obj.names = names
        obj._c = c
        return obj

    @classmethod
    def var(cls, names, name, power=1):
        names = tuple(names)
        i = names.index(name)
        return cls._raw(names, {power << (BITS * i): 1})

    @classmethod
    def constant(cls, names, c):
        return cls._raw(tuple(names), {0: c} if c else {})

    @classmethod
    def gens(cls, names):
        return [cls.var(names, n) for n in names]

    # -- access -------------------------------------------------------------------
    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def terms(self):
        """``(exponent tuple, coefficient)`` pairs in graded-lex order, highest first."""
        n = len(self.names)
        out = [(_unpack(k, n), v) for k, v in self._c.items()]
        out.sort(key=lambda ev: (sum(ev[0]), ev[0]), reverse=True)
        return out

    def coeff(self, exps):
        return self._c.get(_pack(exps), 0)

    def exponent(self, key, i):
        return (key >> (BITS * i)) & MASK

    def index(self, name):
        return self.names.index(name)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.names == other.names and self._c == other._c
        if isinstance(other, Rational):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self._c.items())))

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.names != self.names:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return MultiPoly.constant(self.names, other)
        return None

    # -- arithmetic -------------------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        get = c.get
        for k, v in o._c.items():
            s = get(k, 0) + v
            if s:
                c[k] = s
            else:
                del c[k]
        return MultiPoly._raw(self.names, c)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.names, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k):
        if not k:
            return MultiPoly._raw(self.names, {})
        return MultiPoly._raw(self.names, {m: normalize(v * k) for m, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for kb, vb in b.items():
            for ka, va in a.items():
                k = ka + kb
                out[k] = get(k, 0) + va * vb
        out = {k: normalize(v) for k, v in out.items() if v}
        return MultiPoly._raw(self.names, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only nonnegative integer powers")
        result = MultiPoly.constant(self.names, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_monomial(self, exps, coeff=1):
        shift = _pack(exps)
        return MultiPoly._raw(self.names, {k + shift: normalize(v * coeff) for k, v in self._c.items()})

    # -- calculus and structure -------------------------------------------------------------
    def diff(self, name):
        """Partial derivative with respect to one indeterminate."""
        i = self.names.index(name)
        sh = BITS * i
        one = 1 << sh
        out = {}
        for k, v in self._c.items():
            e = (k >> sh) & MASK
            if e:
                out[k - one] = e * v
        return MultiPoly._raw(self.names, out)

    def degree_in(self, names):
        """Total degree in the given subset of indeterminates (``-1`` for zero)."""
        idx = [self.names.index(n) for n in names]
        best = -1
        for k in self._c:
            s = sum((k >> (BITS * i)) & MASK for i in idx)
            if s > best:
                best = s
        return best

    def homogeneous_parts(self, names):
        """Split by total degree in ``names``: ``{degree: MultiPoly}``."""
        idx = [self.names.index(n) for n in names]
        parts = {}
        for k, v in self._c.items():
            s = sum((k >> (BITS * i)) & MASK for i in idx)
            parts.setdefault(s, {})[k] = v
        return {s: MultiPoly._raw(self.names, c) for s, c in sorted(parts.items())}

    def coefficient_in(self, name, power):
        """Coefficient of ``name**power``, as a polynomial free of ``name``."""
        i = self.names.index(name)
        sh = BITS * i
        strip = power << sh
        out = {k - strip: v for k, v in self._c.items() if (k >> sh) & MASK == power}
        return MultiPoly._raw(self.names, out)

    def split_by(self, names):
        """Group terms by their exponent vector in ``names``.

        Returns ``{exps: coefficient polynomial free of names}``.
        """
        idx = [self.names.index(n) for n in names]
        groups = {}
        for k, v in self._c.items():
            exps = tuple((k >> (BITS * i)) & MASK for i in idx)
            strip = sum(e << (BITS * i) for e, i in zip(exps, idx))
            groups.setdefault(exps, {})[k - strip] = v
        return {e: MultiPoly._raw(self.names, c) for e, c in groups.items()}

    def substitute(self, mapping):
        """Replace indeterminates by polynomials of the same ring.

        ``mapping`` maps variable names to MultiPoly.  Terms are grouped by
        their exponents in the substituted variables so each power product is
        formed once.
        """
        names = list(mapping)
        groups = self.split_by(names)
        power_cache = {n: [MultiPoly.constant(self.names, 1)] for n in names}

        def power(n, e):
            cache = power_cache[n]
            while len(cache) <= e:
                cache.append(cache[-1] * mapping[n])
            return cache[e]

        total = MultiPoly._raw(self.names, {})
        for exps, coeff in groups.items():
            term = coeff
            for n, e in zip(names, exps):
                if e:
                    term = term * power(n, e)
            total = total + term
        return total

    def uses(self, names):
        idx = [self.names.index(n) for n in names]
        return any((k >> (BITS * i)) & MASK for k in self._c for i in idx)

    def evaluate(self, values):
        """Evaluate at a mapping ``name -> exact number`` (all names required)."""
        total = 0
        vals = [values[n] for n in self.names]
        n = len(self.names)
        for k, v in self._c.items():
            term = v
            for i in range(n):
                e = (k >> (BITS * i)) & MASK
                if e:
                    term *= vals[i] ** e
            total += term
        return total

    def to_json(self):
        """List of ``[exponents, "coefficient"]`` in graded-lex order."""
        return [[list(e), str(v)] for e, v in self.terms()]

    @classmethod
    def from_json(cls, names, data):
        return cls(names, {tuple(e): (Fraction(v) if "/" in v else int(v)) for e, v in data})

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for exps, v in self.terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, exps) if e)
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
