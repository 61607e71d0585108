"""Dense integer polynomials in q and truncated power series mod q^N.

The zero polynomial is the empty coefficient tuple. Series carry their
truncation order explicitly; mixed-order operations work at the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _canonical(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _convolve(a: Sequence[int], b: Sequence[int], limit: int | None = None) -> list[int]:
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit)
    out = [0] * size
    for i, ai in enumerate(a):
        if i >= size:
            break
        if ai == 0:
            continue
        for j in range(min(len(b), size - i)):
            out[i + j] += ai * b[j]
    return out


@dataclass(frozen=True)
class IntPoly:
    """Polynomial sum(coeffs[k] * q**k), kept without trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _canonical(self.coeffs))

    @classmethod
    def zero(cls) -> IntPoly:
        return cls(())

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: IntPoly) -> IntPoly:
        return poly_add(self, other)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return poly_add(self, -other)

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: IntPoly) -> IntPoly:
        return poly_mul(self, other)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_add(p: IntPoly, r: IntPoly) -> IntPoly:
    a, b = p.coeffs, r.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(tuple(out))


def poly_mul(p: IntPoly, r: IntPoly) -> IntPoly:
    return IntPoly(tuple(_convolve(p.coeffs, r.coeffs)))


def poly_shift(p: IntPoly, s: int) -> IntPoly:
    """Multiply by q**s."""
    if s < 0:
        raise ValueError(f"shift must be >= 0, got {s}")
    if p.is_zero():
        return p
    return IntPoly((0,) * s + p.coeffs)


def poly_truncate(p: IntPoly, degree: int) -> IntPoly:
    """Drop every term above q**degree."""
    return IntPoly(p.coeffs[: max(degree + 1, 0)])


def eval_at_one(p: IntPoly) -> int:
    return sum(p.coeffs)


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Power series known modulo q**order.

    Two series compare equal when they agree on every coefficient below the
    smaller of their two orders.
    """

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"series order must be >= 1, got {self.order}")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.order:
            raise ValueError(f"expected {self.order} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> TruncatedSeries:
        return cls(tuple(coeffs), len(coeffs))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls((1,) + (0,) * (order - 1), order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: int = 1) -> TruncatedSeries:
        c = [0] * order
        if k < order:
            c[k] = coeff
        return cls(tuple(c), order)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order], order)

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient q^{k} unknown at order {self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])), n)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_div(self, other)

    def shift(self, s: int) -> TruncatedSeries:
        """Multiply by q**s, keeping the order."""
        if s < 0:
            raise ValueError(f"shift must be >= 0, got {s}")
        return TruncatedSeries(((0,) * s + self.coeffs)[: self.order], self.order)

    def first_difference(self, other: TruncatedSeries) -> int | None:
        """Lowest index where the two series differ, or None if they agree."""
        n = min(self.order, other.order)
        for k in range(n):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def to_series(p: IntPoly, order: int) -> TruncatedSeries:
    c = p.coeffs[:order]
    return TruncatedSeries(c + (0,) * (order - len(c)), order)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    out = _convolve(a.coeffs[:n], b.coeffs[:n], limit=n)
    return TruncatedSeries(tuple(out + [0] * (n - len(out))), n)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise ValueError(f"constant term {a0} is not a unit over the integers")
    ac = a.coeffs
    # 1/a0 == a0 for a0 in {1, -1}
    b = [a0]
    for k in range(1, a.order):
        b.append(-a0 * sum(ac[j] * b[k - j] for j in range(1, k + 1)))
    return TruncatedSeries(tuple(b), a.order)


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    n = min(num.order, den.order)
    return series_mul(num.truncate(n), series_inverse(den.truncate(n)))
