from fractions import Fraction

import pytest

from bngp.pencils import (
    PRINTED_TABLE,
    family_numbers,
    gonality_threshold,
    hirzebruch,
    hirzebruch_system,
    k3,
    k3_system,
    member_genus,
    plane,
    plane_system,
    segre_delta_printed,
    segre_family,
    self_intersection,
    slope_table,
)


def test_noether_on_surfaces():
    for S in [plane(0), plane(7), plane(26), hirzebruch(0), hirzebruch(2), k3()]:
        assert 12 * S.chiO == S.K_squared + S.c2


def test_member_genus():
    assert member_genus(hirzebruch(1), hirzebruch_system(3, 5)) == 5
    assert member_genus(hirzebruch(2), hirzebruch_system(3, 6)) == 4
    assert self_intersection(hirzebruch(2), hirzebruch_system(3, 6)) == 18
    assert member_genus(plane(6), plane_system(7, (3, 2, 2, 2, 2, 2))) == 7
    with pytest.raises(ValueError):
        member_genus(plane(2), plane_system(4, (1,)))


def test_family_numbers():
    f = family_numbers(hirzebruch(1), hirzebruch_system(3, 5))
    assert (f.dot_lambda, f.dot_delta) == (5, 41)
    f = family_numbers(hirzebruch(2), hirzebruch_system(3, 6))
    assert (f.dot_lambda, f.dot_delta) == (4, 34)
    f = family_numbers(plane(7), plane_system(7, (2,) * 7))
    assert (f.g, f.dot_lambda, f.dot_delta, f.base_points) == (8, 8, 59, 21)
    f = family_numbers(hirzebruch(0), hirzebruch_system(2, 4))
    assert (f.g, f.ratio) == (3, Fraction(28, 3))
    f = family_numbers(k3(), k3_system(11))
    assert (f.dot_lambda, f.dot_delta) == (12, 84)
    assert family_numbers(k3(), k3_system(10)).ratio == Fraction(78, 11)
    with pytest.raises(ValueError, match="no pencil"):
        family_numbers(hirzebruch(2), hirzebruch_system(1, 0))


def test_segre_examples():
    f = segre_family(7, 4)
    assert (f.n, f.nodes, f.base_points, f.dot_lambda, f.dot_delta) == (7, 5, 20, 7, 53)
    assert segre_family(8, 5).dot_delta == 57
    for g in range(6, 21):
        assert segre_family(g, 3).dot_delta == 7 * g + 6


def test_segre_erratum():
    f = segre_family(7, 4)
    assert segre_delta_printed(7, 4, f.n) != f.dot_delta


def test_segre_base_points():
    for g in range(6, 40):
        for k in (3, 4, 5):
            f = segre_family(g, k)
            assert f.base_points == f.n ** 2 - (f.n - k) ** 2 - 4 * f.nodes
            assert 2 * f.n >= g + k + 2


def test_segre_missing():
    with pytest.raises(ValueError, match="does not exist"):
        segre_family(0, 5)
    with pytest.raises(ValueError):
        segre_family(10, 6)


def test_thresholds():
    assert gonality_threshold(8, 4) == Fraction(15, 2)
    assert gonality_threshold(7, 4) == Fraction(53, 7)
    assert gonality_threshold(9, 5) == Fraction(64, 9)
    for g in range(6, 61):
        for k in (4, 5):
            assert gonality_threshold(g, k) == segre_family(g, k).ratio
        assert segre_family(g, 3).ratio == 7 + Fraction(6, g)


def test_slope_table():
    rows = slope_table()
    assert [r.g for r in rows] == list(range(3, 12))
    for r in rows:
        assert (r.s, r.lo, r.hi) == PRINTED_TABLE[r.g]
    assert [r.g for r in rows if r.lo_open] == [9]
