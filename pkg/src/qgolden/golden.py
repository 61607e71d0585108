"""The q-golden ratio (1 + sqrt(1 + 4q)) / 2 as an exact truncated series.

Both the ratio and its reciprocal are assembled from Catalan numbers, so no
formal square root is ever taken:

    phi(q)     = 1 + sum_{k>=1} (-1)^(k-1) C_{k-1} q^k
    1 / phi(q) = sum_{k>=0} (-1)^k C_k q^k
"""

from __future__ import annotations

from decimal import Decimal

from qgolden.combinatorics import catalan, fibonacci
from qgolden.qfib import qfib_recursive
from qgolden.qseries import TruncatedSeries, series_div, to_series
from qgolden.report import VerificationReport, compare_coefficients


def _check_order(order: int) -> None:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")


def phi_series(order: int) -> TruncatedSeries:
    _check_order(order)
    coeffs = [1] + [(-1) ** (k - 1) * catalan(k - 1) for k in range(1, order)]
    return TruncatedSeries(tuple(coeffs), order)


def phi_reciprocal_series(order: int) -> TruncatedSeries:
    _check_order(order)
    return TruncatedSeries(tuple((-1) ** k * catalan(k) for k in range(order)), order)


def ratio_series(n: int, order: int) -> TruncatedSeries:
    """F_{n+1}(q) / F_n(q) modulo q**order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _check_order(order)
    return series_div(to_series(qfib_recursive(n + 1), order), to_series(qfib_recursive(n), order))


def check_theorem(n: int) -> VerificationReport:
    """F_{n+1}/F_n agrees with phi(q) through q^n."""
    lhs = ratio_series(n, n + 1)
    rhs = phi_series(n + 1)
    return compare_coefficients("theorem", {"n": n}, lhs.coeffs, rhs.coeffs)


def check_reciprocal_form(n: int) -> VerificationReport:
    """F_n/F_{n+1} agrees with the signed Catalan series through q^n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    order = n + 1
    lhs = series_div(to_series(qfib_recursive(n), order), to_series(qfib_recursive(n + 1), order))
    rhs = phi_reciprocal_series(order)
    return compare_coefficients("corollary", {"n": n}, lhs.coeffs, rhs.coeffs)


def check_theorem_step(n: int) -> VerificationReport:
    """The inductive step F_{n+1}/F_n = 1 + q F_{n-1}/F_n, as series mod q^(n+1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    order = n + 1
    tail = series_div(to_series(qfib_recursive(n - 1), order), to_series(qfib_recursive(n), order))
    lhs = ratio_series(n, order)
    rhs = TruncatedSeries.one(order) + tail.shift(1)
    return compare_coefficients("theorem-step", {"n": n}, lhs.coeffs, rhs.coeffs)


def theorem_agreement(n: int, order: int) -> int | None:
    """First index below ``order`` where F_{n+1}/F_n and phi(q) differ.

    Only indices up to n are guaranteed to agree; anything past that is
    reported as found, not asserted.
    """
    return ratio_series(n, order).first_difference(phi_series(order))


def golden_ratio_numeric(n: int, digits: int = 30) -> Decimal:
    """F_{n+1} / F_n to ``digits`` fractional digits (truncated, not rounded)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if digits < 15:
        raise ValueError(f"need at least 15 fractional digits, got {digits}")
    scaled = fibonacci(n + 1) * 10**digits // fibonacci(n)
    return Decimal(f"{scaled}E-{digits}")
