"""Published reference values used as golden data by the verifier and the tests."""

from .exactalg import LaurentPoly

# w_0 .. w_10 for triangulations, as {exponent: coefficient}
GOLDEN_W = [
    {0: 1},
    {1: 1},
    {0: 2},
    {-1: 1, 1: 4},
    {0: 12, 2: 2},
    {-1: 12, 1: 30},
    {-2: 4, 0: 100, 2: 28},
    {-1: 140, 1: 280, 3: 9},
    {-2: 90, 0: 980, 2: 360},
    {-3: 22, -1: 1680, 1: 2940, 3: 220},
    {-2: 1540, 0: 10584, 2: 4620, 4: 52},
]


def golden_table():
    return [LaurentPoly(c) for c in GOLDEN_W]


R_PREFIX = [1, 4, 32, 384, 5376, 82176]
C_PREFIX = [2, 8, 80, 1024, 14848, 231936]
A_PREFIX = [1, 1, 4, 22, 140, 969, 7084]
B_PREFIX = [1, 2, 9, 52, 340, 2394, 17710]
FAIR_PREFIX = [1, 2, 12, 100, 980, 10584]
WPRIME_PREFIX = [0, 1, 0, 3, 4, 18]

# Printed rows of the antidiagonal array: (row, first column, entries).
# Row 5, column 9 is printed as 612; the coefficient is 6120.
PRINTED_ARRAY = [
    (0, 0, [1]),
    (1, 0, [1, 2, 1]),
    (2, 1, [4, 12, 12, 4]),
    (3, 1, [2, 30, 100, 140, 90, 22]),
    (4, 2, [28, 280, 980, 1680, 1540, 728, 140]),
    (5, 2, [9, 360, 2940, 10584, 20790, 24024, 16380, 612, 969]),
]
KNOWN_MISPRINTS = {(5, 9): 6120}

# Boundary words of the smallest triangulations (complete through length 6).
NONCOMM_DISPLAY = {
    "UV": 1, "UUU": 1, "UVVU": 1, "UUVV": 1, "UVVVV": 1, "UVUUU": 1, "UUVUU": 1,
    "UUUVU": 1, "UUUUV": 1, "UUUUUU": 2, "UUUVVV": 2, "UUVVVU": 2, "UVVVUU": 2,
    "UUVUVV": 1, "UVVUVU": 1, "UUVVUV": 1, "UVVUUV": 1, "UVUUVV": 1, "UVUVVU": 1,
}
NONCOMM_DISPLAY_COMPLETE_LEN = 6
