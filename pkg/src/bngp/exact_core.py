"""Rational and combinatorial primitives.

Everything is exact. Rationals are ``fractions.Fraction``, which already
keeps numerator and denominator coprime with a positive denominator.
"""

from fractions import Fraction
from math import comb, factorial

Rational = Fraction


def inv_factorial(n):
    """Return 1/n! as a Fraction, and 0 for negative n."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def binomial(n, k):
    """Binomial coefficient, 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def vandermonde_det(entries):
    """Exact determinant of a square matrix by Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in entries]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for i in range(col + 1, n):
            f = m[i][col] / p
            if f:
                row, prow = m[i], m[col]
                for j in range(col, n):
                    row[j] -= f * prow[j]
    return det


class Partition(tuple):
    """Non-increasing tuple of positive parts; trailing zeros are dropped."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError("negative part in %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts not non-increasing: %r" % (parts,))
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def padded(self, n):
        if len(self) > n:
            raise ValueError("%r has more than %d parts" % (self, n))
        return tuple(self) + (0,) * (n - len(self))

    def is_column(self):
        return all(x == 1 for x in self)

    def __repr__(self):
        return "Partition(%s)" % (tuple(self),)


def column(k):
    """The one-column partition (1^k), i.e. the label of e_k."""
    return Partition((1,) * k)


def add_vertical_strip(lam, k, nvars):
    """Partitions obtained from lam by adding a vertical strip of k boxes,
    keeping only those with at most nvars parts."""
    rows = len(lam) + k
    base = list(lam) + [0] * k
    out = []

    def rec(i, left, cur):
        if i == rows:
            if left == 0:
                mu = Partition(cur)
                if len(mu) <= nvars:
                    out.append(mu)
            return
        for add in (0, 1):
            if add > left:
                break
            v = base[i] + add
            if i and v > cur[-1]:
                continue
            rec(i + 1, left - add, cur + [v])

    if k < 0:
        return []
    rec(0, k, [])
    return out
