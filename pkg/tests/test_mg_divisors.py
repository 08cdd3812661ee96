from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bngp.mg_divisors import (
    UNKNOWN,
    Exact,
    LowerBound,
    MgDivisorClass,
    Unknown,
    bn_pencil_class,
    pair,
    registry,
    registry_names,
    slope,
    test_curve as curve,
)


def test_slope_examples():
    assert slope(MgDivisorClass(5, 33, [4, 15, 21]) * 4) == Fraction(33, 4)
    assert slope(registry("K10")) == 7
    D = MgDivisorClass(5, 148, [18, 68, LowerBound(68)])
    assert slope(D) == Fraction(74, 9)


def test_slope_errors():
    with pytest.raises(ValueError, match="ambiguous"):
        slope(MgDivisorClass(5, 8, [1, 4, UNKNOWN]))
    with pytest.raises(ValueError, match="ambiguous"):
        slope(MgDivisorClass(5, 8, [2, 4, LowerBound(1)]))
    with pytest.raises(ValueError, match="effective-normal"):
        slope(MgDivisorClass(5, 8, [1, -4, 6]))
    assert slope(MgDivisorClass(5, 8, [1, 4, UNKNOWN]), assume_delta0_minimal=True) == 8


def test_slope_takes_minimum_when_exact():
    assert slope(MgDivisorClass(4, 10, [2, 1, 3])) == 10


def test_index_range():
    with pytest.raises(ValueError):
        MgDivisorClass(5, 1, [1, 1, 1, 1])
    assert len(MgDivisorClass(7, 1, []).delta) == 4


def test_knowledge_states():
    L = MgDivisorClass(5, 1, [1, 1, LowerBound(2)])
    assert (L * 3).delta[2] == LowerBound(6)
    assert (L * -1).delta[2] == UNKNOWN
    assert (L * 0).delta[2] == Exact(0)
    assert (L + L).delta[2] == LowerBound(4)
    assert (L - L).delta[2] == UNKNOWN
    assert (L + MgDivisorClass(5, 1, [1, 1, UNKNOWN])).delta[2] == UNKNOWN


def test_test_curves():
    c0 = curve("C0", 5)
    assert (c0.dot_lambda, c0.dot_delta) == (0, (-8, 1, 0))
    c1 = curve("C1", 5)
    assert (c1.dot_lambda, c1.dot_delta) == (0, (0, -6, 0))
    R = curve("R", 9)
    assert (R.dot_lambda, R.dot_delta[:2]) == (1, (12, -1))
    assert curve("Cj", 8, 3).dot_delta[3] == -4
    with pytest.raises(ValueError):
        curve("Cj", 5, 3)


def test_pair_examples():
    D = registry("GP_5_4")
    assert D.printed() == (148, 18, 68, 96)
    assert pair(D, curve("C1", 5)) == 408
    assert pair(D, curve("C0", 5)) == 76
    assert pair(D, curve("R", 5)) == 0


def test_pair_needs_exact():
    D = MgDivisorClass(5, 8, [1, UNKNOWN, 6])
    with pytest.raises(ValueError):
        pair(D, curve("C1", 5))
    assert pair(D, curve("Cj", 5, 2)) == 12


coef = st.fractions(min_value=-50, max_value=50, max_denominator=7)


@given(st.integers(3, 12), coef, coef, coef)
def test_pairing_identities(g, a, b0, b1):
    D = MgDivisorClass(g, a, [b0, b1])
    assert pair(D, curve("R", g)) == a - 12 * b0 + b1
    assert pair(D, curve("C0", g)) == (2 * g - 2) * b0 - b1
    assert pair(D, curve("C1", g)) == (2 * g - 4) * b1


def test_registry():
    assert registry("M1_3_2").printed() == (9, 1, 3)
    assert registry("GP_4_3").printed() == (34, 4, 14, 18)
    assert registry("M1_7_4").printed() == (15, 2, 9, 15, 18)
    assert registry("GP_7_5").printed() == (804, 104, 444, 708, 792)
    assert registry("GP10_5_4").printed() == (132, 16, 60, 84)
    assert slope(registry("Diaz_4"), assume_delta0_minimal=True) == Fraction(44, 5)
    with pytest.raises(KeyError):
        registry("nope")
    assert "K10" in registry_names()


def test_registry_slopes():
    want = {"M1_3_2": 9, "GP_4_3": Fraction(17, 2), "M1_5_3": 8, "M1_7_4": Fraction(15, 2), "K10": 7}
    for name, v in want.items():
        assert slope(registry(name)) == v


def test_bn_pencil_class():
    assert bn_pencil_class(2).printed(2) == (8, 1, 4)
    assert isinstance(bn_pencil_class(2).delta[2], Unknown)
    assert bn_pencil_class(3).printed(2) == (15, 2, 9)
    assert bn_pencil_class(3).printed(2) == registry("M1_7_4").printed(2)
    for s in range(2, 13):
        assert slope(bn_pencil_class(s), assume_delta0_minimal=True) == 6 + Fraction(12, 2 * s + 2)
