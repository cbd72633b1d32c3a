"""Exact arithmetic kernel: Laurent polynomials, x-series, free-word series, multivariate polynomials."""

from .freeword import FreeWordSeries, freeword_left_quotient, freeword_mul
from .laurent import LaurentPoly, laurent_bar, laurent_mul
from .multipoly import MultiPoly
from .series import OrderMismatch, SeriesX, naive_series_mul, series_mul

__all__ = [
    "FreeWordSeries",
    "LaurentPoly",
    "MultiPoly",
    "OrderMismatch",
    "SeriesX",
    "freeword_left_quotient",
    "freeword_mul",
    "laurent_bar",
    "laurent_mul",
    "naive_series_mul",
    "series_mul",
]
