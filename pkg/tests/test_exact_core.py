from fractions import Fraction
from itertools import combinations
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from bngp.exact_core import (
    Partition,
    add_vertical_strip,
    binomial,
    inv_factorial,
    vandermonde_det,
)


def test_inv_factorial():
    assert inv_factorial(0) == 1
    assert inv_factorial(4) == Fraction(1, 24)
    assert inv_factorial(-2) == 0


def test_binomial():
    assert binomial(6, 2) == 15
    assert binomial(2 * 2 + 2, 2) == 15
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


def test_det_small():
    assert vandermonde_det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert vandermonde_det([[1, 1], [1, 2]]) == 1
    a = (2, 1)
    m = [[inv_factorial(a[j] + l - 1) for l in (1, 2)] for j in (0, 1)]
    assert vandermonde_det(m) == Fraction(1, 12)


def test_det_needs_pivoting():
    assert vandermonde_det([[0, 1], [1, 0]]) == -1
    assert vandermonde_det([[0, 0], [1, 0]]) == 0


def test_det_not_square():
    with pytest.raises(ValueError):
        vandermonde_det([[1, 2]])


@pytest.mark.parametrize("m", range(1, 6))
def test_reciprocal_factorial_identity(m):
    # det(1/(a_j+l-1)!) = prod_{j>l}(a_l-a_j) / prod_j (a_j+m-1)!
    for combo in combinations(range(12, -1, -1), m):
        a = combo
        mat = [[inv_factorial(a[j] + l - 1) for l in range(1, m + 1)] for j in range(m)]
        num = prod(a[l] - a[j] for l in range(m) for j in range(l + 1, m))
        den = prod(factorial(x + m - 1) for x in a)
        assert vandermonde_det(mat) == Fraction(num, den)


def test_partition_strips_zeros():
    assert Partition((2, 1, 0)) == Partition((2, 1))
    assert hash(Partition((2, 1, 0, 0))) == hash(Partition((2, 1)))
    assert Partition((2, 1)).padded(4) == (2, 1, 0, 0)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 1)).padded(1)


def test_vertical_strip():
    assert sorted(add_vertical_strip(Partition((1,)), 1, 3)) == [(1, 1), (2,)]
    assert add_vertical_strip(Partition((1, 1)), 1, 2) == [Partition((2, 1))]
    assert add_vertical_strip(Partition(), 3, 2) == []


fracs = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 10**6)


@given(fracs, fracs, fracs)
def test_rational_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b).denominator > 0
