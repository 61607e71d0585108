"""Exact q-Fibonacci polynomials, the q-golden ratio, and related identities."""

from qgolden.combinatorics import binomial, catalan, catalan_closed, fibonacci
from qgolden.golden import (
    check_reciprocal_form,
    check_theorem,
    golden_ratio_numeric,
    phi_reciprocal_series,
    phi_series,
    ratio_series,
)
from qgolden.qfib import qfib_at_one, qfib_closed, qfib_recursive
from qgolden.qseries import IntPoly, TruncatedSeries
from qgolden.report import VerificationReport
from qgolden.sw_identity import (
    HypothesisError,
    check_sw,
    compositions,
    sw_geometric,
    sw_gf_coefficient,
    sw_lhs,
    sw_rhs,
)

__version__ = "0.1.0"

__all__ = [
    "HypothesisError",
    "IntPoly",
    "TruncatedSeries",
    "VerificationReport",
    "binomial",
    "catalan",
    "catalan_closed",
    "check_reciprocal_form",
    "check_sw",
    "check_theorem",
    "compositions",
    "fibonacci",
    "golden_ratio_numeric",
    "phi_reciprocal_series",
    "phi_series",
    "qfib_at_one",
    "qfib_closed",
    "qfib_recursive",
    "ratio_series",
    "sw_geometric",
    "sw_gf_coefficient",
    "sw_lhs",
    "sw_rhs",
]
