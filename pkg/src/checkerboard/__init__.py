"""Checkerboard triangulations and d-dissections of convex polygons.

Weight Laurent polynomials ``w_{d,n}`` computed by enumeration, recursion,
fixed-point iteration and closed binomial sums, together with exact checks of
the identities, differential equations and ideal certificates they satisfy.
"""

from .enumeration import (
    ColourStats,
    DissectionTree,
    GuardExceeded,
    boundary_word,
    colour_stats,
    enum_trees,
    eulerian_count_enum,
    fair_count_enum,
    lattice_path_count,
    noncomm_N,
    tree_at,
    w_enum,
)
from .exactalg import FreeWordSeries, LaurentPoly, MultiPoly, OrderMismatch, SeriesX
from .genfun import (
    ArrayA,
    CheckResult,
    WeightTable,
    algebraic_residual,
    closed_table,
    coeffid_check,
    eulerian_formula,
    extremal_AB,
    fair_formula,
    positivity_suite,
    row_col_series,
    specialization_check,
    t_dn,
    w_closed,
    w_closed_d,
    w_fixedpoint,
    w_recursion,
    wprime_series,
)

__version__ = "0.1.0"
