"""Binomial coefficients, Catalan numbers and Fibonacci numbers over exact ints."""

from __future__ import annotations

import threading

_catalan_table: list[int] = [1]
_catalan_lock = threading.Lock()


def binomial(a: int, b: int) -> int:
    """Return C(a, b), with C(a, b) = 0 whenever b < 0 or b > a.

    Uses the multiplicative row formula; every intermediate division is exact.
    """
    if a < 0:
        raise ValueError(f"binomial upper index must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    result = 1
    for i in range(1, b + 1):
        # result == C(a - b + i - 1, i - 1) here, so the product is divisible by i
        result = result * (a - b + i) // i
    return result


def catalan(k: int) -> int:
    """Catalan number C_k from the convolution recurrence, memoized."""
    if k < 0:
        raise ValueError(f"catalan index must be >= 0, got {k}")
    table = _catalan_table
    if k < len(table):
        return table[k]
    with _catalan_lock:
        # readers only ever see fully computed prefixes
        while len(table) <= k:
            j = len(table) - 1
            table.append(sum(table[i] * table[j - i] for i in range(j + 1)))
        return table[k]


def catalan_closed(k: int) -> int:
    """C(2k, k) / (k + 1). Independent of :func:`catalan`."""
    if k < 0:
        raise ValueError(f"catalan index must be >= 0, got {k}")
    q, r = divmod(binomial(2 * k, k), k + 1)
    if r:
        raise ArithmeticError(f"C(2k, k) not divisible by k+1 at k={k}")
    return q


def fibonacci(n: int) -> int:
    """Fibonacci numbers indexed so that F_0 = F_1 = 1."""
    if n < 0:
        raise ValueError(f"fibonacci index must be >= 0, got {n}")
    prev, cur = 1, 1
    for _ in range(n - 1):
        prev, cur = cur, prev + cur
    return cur
