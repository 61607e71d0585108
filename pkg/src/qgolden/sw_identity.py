"""The alternating composition-sum identity and the routes that prove it.

For 1 <= m <= n,

    sum over compositions (m_1, ..., m_t) of m of
        (-1)^t C(n - m_1, m_1 - 1) C(n - m_2, m_2) ... C(n - m_t, m_t)
    = (-1)^m C_{m-1}

Three independent computations of the left side are kept side by side: the
direct sum over compositions, the q^m coefficient of -q F_{n-1}/F_n by series
division, and the same coefficient through the geometric expansion of 1/F_n.
"""

from __future__ import annotations

from typing import Iterator

from qgolden.combinatorics import binomial, catalan
from qgolden.qfib import qfib_closed
from qgolden.qseries import IntPoly, poly_mul, poly_shift, poly_truncate, series_div, to_series
from qgolden.report import VerificationReport

Composition = tuple[int, ...]


class HypothesisError(ValueError):
    """Raised when the identity is requested outside 1 <= m <= n."""


def compositions(m: int) -> Iterator[Composition]:
    """Yield every composition of m once, in lexicographic order.

    >>> list(compositions(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    parts = [1] * m
    while True:
        yield tuple(parts)
        if len(parts) == 1:
            return
        last = parts.pop()
        parts[-1] += 1
        parts.extend([1] * (last - 1))


def _check_args(n: int, m: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")


def sw_lhs(n: int, m: int) -> int:
    """Direct alternating sum over all 2^(m-1) compositions of m.

    Defined for any n, m >= 1; the identity itself only claims anything for
    m <= n.
    """
    _check_args(n, m)
    # binomial(n - k, .) needs n - k >= 0; parts larger than n contribute 0
    first = [0] + [binomial(n - k, k - 1) if k <= n else 0 for k in range(1, m + 1)]
    rest = [0] + [binomial(n - k, k) if k <= n else 0 for k in range(1, m + 1)]
    total = 0
    for comp in compositions(m):
        term = first[comp[0]]
        for part in comp[1:]:
            if not term:
                break
            term *= rest[part]
        if term:
            total += -term if len(comp) % 2 else term
    return total


def sw_rhs(m: int) -> int:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return (-1) ** m * catalan(m - 1)


def sw_gf_coefficient(n: int, m: int) -> int:
    """q^m coefficient of -q F_{n-1}(q) / F_n(q), by exact series division."""
    _check_args(n, m)
    order = m + 1
    ratio = series_div(to_series(qfib_closed(n - 1), order), to_series(qfib_closed(n), order))
    return -ratio.shift(1)[m]


def sw_geometric(n: int, m: int) -> int:
    """q^m coefficient of -q F_{n-1} (1 - (F_n - 1) + (F_n - 1)^2 - ...).

    F_n - 1 has no constant term, so powers past the m-th cannot reach q^m and
    the expansion is cut there.
    """
    _check_args(n, m)
    tail = qfib_closed(n) - IntPoly.one()
    neg_tail = poly_truncate(-tail, m)
    power = IntPoly.one()
    geometric = IntPoly.one()
    for _ in range(m):
        power = poly_truncate(poly_mul(power, neg_tail), m)
        if power.is_zero():
            break
        geometric = geometric + power
    numerator = poly_shift(qfib_closed(n - 1), 1)
    return -poly_mul(poly_truncate(numerator, m), geometric)[m]


def reindexed_numerator(n: int) -> IntPoly:
    """sum_k C(n - k, k - 1) q^k, the polynomial that equals q F_{n-1}(q)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return IntPoly((0,) + tuple(binomial(n - k, k - 1) for k in range(1, (n + 1) // 2 + 1)))


def check_sw(n: int, m: int) -> VerificationReport:
    """Four-way agreement of the identity at (n, m); requires 1 <= m <= n."""
    _check_args(n, m)
    if m > n:
        raise HypothesisError(f"identity requires m <= n, got n={n}, m={m}")
    lhs = sw_lhs(n, m)
    rhs = sw_rhs(m)
    routes = {"series_division": sw_gf_coefficient(n, m), "geometric": sw_geometric(n, m)}
    values = {"lhs": lhs, **routes, "rhs": rhs}
    passed = len(set(values.values())) == 1
    detail = "" if passed else "disagreement: " + ", ".join(f"{k}={v}" for k, v in values.items())
    return VerificationReport("sw", {"n": n, "m": m}, lhs, rhs, passed, detail, routes)
