"""q-Fibonacci polynomials F_n(q), with F_0 = F_1 = 1 and F_n = F_{n-1} + q F_{n-2}."""

from __future__ import annotations

from qgolden.combinatorics import binomial
from qgolden.qseries import IntPoly, eval_at_one, poly_add, poly_shift


def qfib_recursive(n: int) -> IntPoly:
    """Build F_n(q) by iterating the defining recurrence."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prev = cur = IntPoly.one()
    for _ in range(n - 1):
        prev, cur = cur, poly_add(cur, poly_shift(prev, 1))
    return cur


def qfib_closed(n: int) -> IntPoly:
    """F_n(q) as sum over k <= n // 2 of C(n - k, k) q^k."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return IntPoly(tuple(binomial(n - k, k) for k in range(n // 2 + 1)))


def qfib_at_one(n: int) -> int:
    """F_n(1) from the closed form; equals the (F_0 = 1) Fibonacci number."""
    return eval_at_one(qfib_closed(n))
