"""Length-truncated series in two non-commuting letters ``U`` and ``V``.

Words are plain strings over ``"UV"``; the empty string is the unit word.
"""

ALPHABET = "UV"
_SWAP = str.maketrans("UV", "VU")


class FreeWordSeries:
    """Map from words of length ``<= max_len`` to nonzero integers."""

    __slots__ = ("max_len", "_c")

    def __init__(self, coeffs=None, max_len=0):
        if max_len < 0:
            raise ValueError("max_len must be >= 0")
        c = {}
        for w, v in (coeffs or {}).items():
            if any(ch not in ALPHABET for ch in w):
                raise ValueError(f"word {w!r} is not over {{U, V}}")
            if len(w) <= max_len and v:
                c[w] = c.get(w, 0) + v
                if not c[w]:
                    del c[w]
        self.max_len = max_len
        self._c = c

    @classmethod
    def word(cls, w, max_len, coeff=1):
        return cls({w: coeff}, max_len)

    @classmethod
    def unit(cls, max_len):
        return cls({"": 1}, max_len)

    @property
    def coeffs(self):
        return dict(self._c)

    def coeff(self, w):
        return self._c.get(w, 0)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __eq__(self, other):
        if not isinstance(other, FreeWordSeries):
            return NotImplemented
        return self.max_len == other.max_len and self._c == other._c

    def __repr__(self):
        return f"FreeWordSeries({dict(self.items())!r}, max_len={self.max_len})"

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(w or "1" if v == 1 else f"{v}*{w or '1'}" for w, v in self.items())

    def is_zero(self):
        return not self._c

    def _check(self, other):
        if not isinstance(other, FreeWordSeries):
            raise TypeError("expected FreeWordSeries")
        if other.max_len != self.max_len:
            raise ValueError(f"max_len differs: {self.max_len} vs {other.max_len}")

    def __add__(self, other):
        self._check(other)
        c = dict(self._c)
        for w, v in other._c.items():
            c[w] = c.get(w, 0) + v
        return FreeWordSeries(c, self.max_len)

    def __neg__(self):
        return FreeWordSeries({w: -v for w, v in self._c.items()}, self.max_len)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FreeWordSeries({w: v * other for w, v in self._c.items()}, self.max_len)
        return freeword_mul(self, other)

    def truncate(self, max_len):
        if max_len > self.max_len:
            raise ValueError("cannot raise precision")
        return FreeWordSeries(self._c, max_len)

    def transpose(self):
        """Swap the letters ``U`` and ``V``."""
        return FreeWordSeries({w.translate(_SWAP): v for w, v in self._c.items()}, self.max_len)

    def left_mul_letter(self, letter):
        """``letter * self``; precision rises by one."""
        return FreeWordSeries({letter + w: v for w, v in self._c.items()}, self.max_len + 1)


def freeword_mul(A, B):
    """Concatenation product, discarding words longer than ``max_len``."""
    A._check(B)
    L = A.max_len
    out = {}
    for a, u in A._c.items():
        room = L - len(a)
        for b, v in B._c.items():
            if len(b) <= room:
                w = a + b
                out[w] = out.get(w, 0) + u * v
    return FreeWordSeries(out, L)


def freeword_left_quotient(A, letter):
    """Strip ``letter`` from the front of every word; precision drops by one.

    Raises ValueError when some supported word does not begin with ``letter``.
    """
    if letter not in ALPHABET or len(letter) != 1:
        raise ValueError(f"not a letter: {letter!r}")
    out = {}
    for w, v in A._c.items():
        if not w.startswith(letter):
            raise ValueError(f"word {w!r} does not start with {letter}")
        out[w[1:]] = v
    return FreeWordSeries(out, max(A.max_len - 1, 0))
