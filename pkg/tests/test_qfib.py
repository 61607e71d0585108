import pytest

from qgolden.combinatorics import binomial, fibonacci
from qgolden.qfib import qfib_at_one, qfib_closed, qfib_recursive
from qgolden.qseries import IntPoly


@pytest.mark.parametrize(
    "n, coeffs",
    [(0, (1,)), (1, (1,)), (2, (1, 1)), (4, (1, 3, 1)), (5, (1, 4, 3)), (6, (1, 5, 6, 1))],
)
def test_both_generators_on_examples(n, coeffs):
    assert qfib_recursive(n) == IntPoly(coeffs)
    assert qfib_closed(n) == IntPoly(coeffs)


def test_at_one_examples():
    assert qfib_at_one(4) == 5
    assert qfib_at_one(0) == 1
    assert qfib_at_one(9) == 1 + 8 + 21 + 20 + 5 == 55


def test_generators_agree_to_300():
    for n in range(301):
        assert qfib_recursive(n) == qfib_closed(n)


def test_at_one_is_fibonacci():
    for n in range(301):
        assert qfib_at_one(n) == fibonacci(n)


def test_degree_and_positive_coefficients():
    for n in range(301):
        p = qfib_closed(n)
        assert p.degree == n // 2
        assert p.coeffs[-1] == binomial(n - n // 2, n // 2) >= 1
        assert all(c > 0 for c in p.coeffs)


def test_rejects_negative():
    with pytest.raises(ValueError):
        qfib_recursive(-1)
    with pytest.raises(ValueError):
        qfib_closed(-1)
