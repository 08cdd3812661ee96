import random
from fractions import Fraction

import pytest

from bngp.ambient_ring import AmbientClass, BNParams
from bngp.bn_numbers import (
    count_grd,
    elementary_to_schur,
    eval_schur_det,
    eval_schur_product,
    eval_schur_theta,
    genus_wrd,
    genus_wrd_pencil,
    integrate,
    monomial_table,
)
from bngp.exact_core import Partition, binomial


def partitions_of(n, max_parts, max_part=None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, max_parts - 1, first):
            yield (first,) + rest


def top_degree_cases(r):
    for t in range(r + 2):
        for lam in partitions_of(r + 1 - t, r + 1):
            yield Partition(lam), t


def test_count_grd():
    assert count_grd(BNParams(1, 2)) == 2
    assert count_grd(BNParams(1, 3)) == 5
    assert count_grd(BNParams(2, 2)) == 5


def test_eval_examples():
    p = BNParams(1, 2)
    assert eval_schur_theta(p, (1, 1), 0) == 2
    assert eval_schur_theta(p, (), 2) == 12
    assert eval_schur_theta(p, (2,), 0) == 3


def test_eval_not_top_degree():
    with pytest.raises(ValueError, match="not top degree"):
        eval_schur_theta(BNParams(1, 2), (3,), 0)


def test_det_equals_product_grid():
    n = 0
    for r in range(1, 6):
        for s in range(2, 7):
            p = BNParams(r, s)
            for lam, t in top_degree_cases(r):
                assert eval_schur_det(p, lam, t) == eval_schur_product(p, lam, t)
                n += 1
    assert n == 360


def test_det_equals_product_random():
    rnd = random.Random(20261016)
    for _ in range(200):
        r, s = rnd.randint(1, 8), rnd.randint(2, 12)
        cases = list(top_degree_cases(r))
        lam, t = rnd.choice(cases)
        p = BNParams(r, s)
        assert eval_schur_det(p, lam, t) == eval_schur_product(p, lam, t)


def test_top_column_is_count():
    for r in range(1, 6):
        for s in range(2, 7):
            p = BNParams(r, s)
            assert eval_schur_theta(p, (1,) * (r + 1), 0) == count_grd(p)


def test_theta_squared_pencils():
    for s in range(2, 13):
        p = BNParams(1, s)
        assert eval_schur_theta(p, (), 2) == s * (s + 1) * count_grd(p)


def as_dict(xs):
    return {tuple(m): v for m, v in xs}


def col(n):
    return (1,) * n


def test_pieri_examples():
    for r in range(1, 6):
        assert as_dict(elementary_to_schur([r, 1], r + 1)) == {col(r + 1): 1, (2,) + col(r - 1): 1}
    assert as_dict(elementary_to_schur([1, 1], 2)) == {(1, 1): 1, (2,): 1}
    assert as_dict(elementary_to_schur([5], 3)) == {}


@pytest.mark.parametrize("r", range(1, 6))
def test_intersection_expansions(r):
    n = r + 1

    def expect(*pairs):
        out = {}
        for lam, v in pairs:
            out[lam] = out.get(lam, 0) + v
        return out

    def hook(a, k):
        return None if k < 0 else (a,) + col(k)

    def two_two(k):
        return None if k < 0 else (2, 2) + col(k)

    def build(*pairs):
        # the generic identity applies once every listed shape exists
        if any(l is None for l, _ in pairs):
            return None
        return expect(*pairs)

    def check(factors, *pairs):
        want = build(*pairs)
        if want is not None:
            assert as_dict(elementary_to_schur(factors, n)) == want, factors

    check([r + 1], (col(r + 1), 1))
    check([r, 1], (col(r + 1), 1), (hook(2, r - 1), 1))
    check([r - 1, 2], (col(r + 1), 1), (hook(2, r - 1), 1), (two_two(r - 3), 1))
    check([r - 1, 1, 1], (col(r + 1), 1), (hook(2, r - 1), 2), (two_two(r - 3), 1), (hook(3, r - 2), 1))
    # theta rows live in degree r and r-1 on W
    check([r], (col(r), 1))
    check([r - 1, 1], (col(r), 1), (hook(2, r - 2), 1))
    check([r - 2, 2], (col(r), 1), (hook(2, r - 2), 1), (two_two(r - 4), 1))
    check([r - 2, 1, 1], (col(r), 1), (hook(2, r - 2), 2), (two_two(r - 4), 1), (hook(3, r - 3), 1))
    check([r - 1], (col(r - 1), 1))
    check([r - 2, 1], (col(r - 1), 1), (hook(2, r - 3), 1))


def test_integrate_examples():
    p = BNParams(1, 2)
    eta, gam, th = AmbientClass.eta(p), AmbientClass.gamma(p), AmbientClass.theta(p)
    c1 = AmbientClass.chern(p, 1)
    assert integrate(p, eta * th * th) == 12
    assert integrate(p, gam * th * c1) == 0
    assert integrate(p, th * th * th) == 0
    assert integrate(p, eta * c1 * c1) == 2 + 3
    with pytest.raises(ValueError):
        integrate(p, eta * th)
    with pytest.raises(ValueError):
        integrate(p, eta * th + th)


def test_monomial_table_examples():
    rows = {r["name"]: r for r in monomial_table(BNParams(2, 2))}
    assert rows["x1...x_r theta"]["direct"] == 30
    rows = {r["name"]: r for r in monomial_table(BNParams(1, 3))}
    row = rows["x1...x_{r-1} theta^2"]
    assert (row["direct"], row["printed"], row["status"]) == (60, 40, "misprint")
    p = BNParams(3, 2)
    rows = {r["name"]: r for r in monomial_table(p)}
    assert rows["x1...x_{r+1}"]["direct"] == count_grd(p)


def test_monomial_table_only_theta_squared_misprinted():
    seen = set()
    for r in range(1, 6):
        for s in range(2, 7):
            for row in monomial_table(BNParams(r, s)):
                assert row["status"] != "mismatch", (r, s, row)
                if row["status"] == "misprint":
                    seen.add(row["name"])
    assert seen == {"x1...x_{r-1} theta^2"}


def test_monomial_table_skips_small_r():
    names = {r["name"] for r in monomial_table(BNParams(1, 2))}
    assert "x1^2 x2^2 x3...x_{r-1}" not in names
    assert "x1...x_{r-2} theta^3" not in names


def test_genus_wrd():
    assert genus_wrd((1, 1)) == 3
    assert genus_wrd(BNParams(1, 2)) == 11
    assert genus_wrd(BNParams(1, 3)) == 43
    for r in range(1, 5):
        for s in range(2, 9):
            assert genus_wrd(BNParams(r, s)).denominator == 1
    for s in range(2, 31):
        assert genus_wrd(BNParams(1, s)) == genus_wrd_pencil(s)
    assert genus_wrd_pencil(1) == 3
