"""Kronecker-substitution convolution of signed integer sequences.

A sequence ``c_0, c_1, ...`` is packed into the single integer
``sum c_i * 2**(b*i)`` so that one big-integer product yields the whole
convolution.  Digits are signed, so packing uses a borrow pass and
unpacking adds a bias of ``2**(b-1)`` to every digit.
"""

from fractions import Fraction
from math import lcm

try:
    import gmpy2

    def _bigmul(a, b):
        return int(gmpy2.mpz(a) * gmpy2.mpz(b))

except ImportError:  # pragma: no cover - gmpy2 is optional
    def _bigmul(a, b):
        return a * b


def _digit_bits(bound):
    bits = bound.bit_length() + 2
    return (bits + 7) // 8 * 8


def pack(coeffs, bits):
    """Pack signed integers (little-endian order) into one integer."""
    nbytes = bits // 8
    full = 1 << bits
    out = bytearray()
    carry = 0
    for c in coeffs:
        v = c + carry
        if v < 0:
            v += full
            carry = -1
        else:
            carry = 0
        out += v.to_bytes(nbytes, "little")
    value = int.from_bytes(out, "little")
    if carry:
        value -= 1 << (bits * len(coeffs))
    return value


def unpack(value, bits, count):
    """Inverse of :func:`pack` for ``count`` digits, each of magnitude < 2**(bits-1)."""
    nbytes = bits // 8
    half = 1 << (bits - 1)
    bias = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * count, "little")
    raw = (value + bias).to_bytes(nbytes * count, "little")
    frm = int.from_bytes
    return [frm(raw[i:i + nbytes], "little") - half for i in range(0, nbytes * count, nbytes)]


def convolve_int(a, b):
    """Full linear convolution of two integer lists."""
    if not a or not b:
        return []
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if ma == 0 or mb == 0:
        return [0] * (len(a) + len(b) - 1)
    nnz = min(sum(1 for c in a if c), sum(1 for c in b if c))
    bits = _digit_bits(ma * mb * nnz)
    prod = _bigmul(pack(a, bits), pack(b, bits))
    return unpack(prod, bits, len(a) + len(b) - 1)


def integerize(values):
    """Return ``(ints, denom)`` with ``values[i] == ints[i] / denom``."""
    den = 1
    for v in values:
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    if den == 1:
        return [int(v) for v in values], 1
    return [int(v * den) for v in values], den


def convolve(a, b):
    """Convolution of exact (int or Fraction) lists."""
    ia, da = integerize(a)
    ib, db = integerize(b)
    out = convolve_int(ia, ib)
    den = da * db
    if den == 1:
        return out
    return [normalize(Fraction(c, den)) for c in out]


def normalize(c):
    """Collapse integral Fractions to int."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c
