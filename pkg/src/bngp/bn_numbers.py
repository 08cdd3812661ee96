"""Intersection numbers on W^r_d(C) for a general curve C of genus rs+s.

Schur-indexed classes s_lambda (in the Chern roots of M^dual) paired with
powers of theta are evaluated with the Harris-Tu determinant, normalised
by the integral of theta^g over the Jacobian being g!.
"""

from collections import Counter
from fractions import Fraction
from math import factorial, prod

from .ambient_ring import AmbientClass, BNParams
from .exact_core import (
    Partition,
    add_vertical_strip,
    binomial,
    inv_factorial,
    vandermonde_det,
)


def count_grd(p):
    """C_{r+1}: the number of g^r_d's on a general curve of genus rs+s."""
    r, s = p.r, p.s
    num = factorial(r * s + s) * prod(factorial(i) for i in range(r + 1))
    den = prod(factorial(s + i) for i in range(r + 1))
    assert num % den == 0, "C_{r+1} not integral at %r" % (p,)
    return Fraction(num // den)


def _check_top(p, lam, t):
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if len(lam) > p.nvars:
        raise ValueError("too many parts: %r for r=%d" % (tuple(lam), p.r))
    if t < 0 or lam.size + t != p.r + 1:
        raise ValueError("not top degree: |lambda|+t = %d, need %d" % (lam.size + t, p.r + 1))
    return lam


def eval_schur_product(p, lam, t):
    """Product form of the Harris-Tu evaluation."""
    lam = _check_top(p, lam, t)
    r, s = p.r, p.s
    i = lam.padded(r + 1)
    num = 1
    for l in range(r + 1):
        for j in range(l + 1, r + 1):
            num *= i[l] - i[j] + j - l
    # 0-based j, so (s+r+i_j-j) reads s+r+i[j]-(j+1)
    den = prod(factorial(s + r + i[j] - j - 1) for j in range(r + 1))
    return Fraction(num * factorial(p.gC), den)


def eval_schur_det(p, lam, t):
    """Determinant form: gC! * det(1/(s+i_j-j+l-1)!), j, l = 1..r+1."""
    lam = _check_top(p, lam, t)
    r, s = p.r, p.s
    i = lam.padded(r + 1)
    n = r + 1
    mat = [[inv_factorial(s + i[j - 1] - j + l - 1) for l in range(1, n + 1)]
           for j in range(1, n + 1)]
    return vandermonde_det(mat) * factorial(p.gC)


def eval_schur_theta(p, lam, t):
    """Integral over W^r_d(C) of s_lambda * theta^t, |lambda| + t = r+1."""
    a = eval_schur_product(p, lam, t)
    b = eval_schur_det(p, lam, t)
    if a != b:
        raise AssertionError("determinant and product forms disagree at %r %r %d" % (p, lam, t))
    return a


def elementary_to_schur(factors, nvars):
    """Schur expansion of a product of elementary classes e_k, by dual Pieri.

    Returns a list of (Partition, int) sorted by partition."""
    cur = Counter({Partition(): 1})
    for k in factors:
        if k < 0 or k > nvars:
            return []
        nxt = Counter()
        for lam, v in cur.items():
            for mu in add_vertical_strip(lam, k, nvars):
                nxt[mu] += v
        cur = nxt
    return sorted(((m, v) for m, v in cur.items() if v), key=lambda kv: tuple(kv[0]))


def integrate(p, cls):
    """Integral over C x W^r_d(C) of a class of total degree r+2."""
    if not isinstance(cls, AmbientClass):
        raise TypeError("expected an AmbientClass")
    deg = cls.degree()
    if deg is None:
        return Fraction(0)
    if deg != p.r + 2:
        raise ValueError("class has degree %d, need %d" % (deg, p.r + 2))
    total = Fraction(0)
    for (e, c, t, m), v in cls.terms.items():
        if c or not e:
            continue
        total += v * eval_schur_theta(p, m, t)
    return total


# Rows of the table of top intersection numbers. Each row gives the Schur
# partition as a function of r (None when the row needs more variables),
# the theta power, and the printed closed form as a function of (r, s, C).

def _col(n):
    return None if n < 0 else (1,) * n


def _hook(first, n):
    return None if n < 0 else (first,) + (1,) * n


def _two_two(n):
    return None if n < 0 else (2, 2) + (1,) * n


def _row5(r, s, C):
    return (r + 1) * s * C


def _row9(r, s, C):
    return Fraction(r * (r + 1) * s * (s + 1), 2) * C


MONOMIAL_ROWS = [
    ("x1...x_{r+1}", lambda r: _col(r + 1), 0,
     lambda r, s, C: C, None),
    ("x1^2 x2^2 x3...x_{r-1}", lambda r: _two_two(r - 3), 0,
     lambda r, s, C: Fraction(s * (s + 1) * (r + 1) ** 2 * (r - 2) * (r + 2),
                              4 * (s + r) * (s + r + 1)) * C, None),
    ("x1^2 x2...x_r", lambda r: _hook(2, r - 1), 0,
     lambda r, s, C: Fraction(r * (r + 2) * s, s + r + 1) * C, None),
    ("x1^3 x2...x_{r-1}", lambda r: _hook(3, r - 2), 0,
     lambda r, s, C: Fraction(r * (r - 1) * (r + 2) * (r + 3) * s * (s + 1),
                              4 * (s + r + 1) * (s + r + 2)) * C, None),
    ("x1...x_r theta", lambda r: _col(r), 1, _row5, None),
    ("x1^2 x2...x_{r-1} theta", lambda r: _hook(2, r - 2), 1,
     lambda r, s, C: Fraction((s + 1) * (r - 1) * (r + 2), 2 * (s + r + 1)) * _row5(r, s, C), None),
    ("x1^2 x2^2 x3...x_{r-2} theta", lambda r: _two_two(r - 4), 1,
     lambda r, s, C: Fraction((r - 3) * (r + 1) * (r + 2) * r * (s + 1) * (s + 2),
                              12 * (s + r + 1) * (s + r)) * _row5(r, s, C), None),
    ("x1^3 x2...x_{r-2} theta", lambda r: _hook(3, r - 3), 1,
     lambda r, s, C: Fraction((r + 2) * (r + 3) * (r - 1) * (r - 2) * (s + 1) * (s + 2),
                              12 * (s + r + 1) * (s + r + 2)) * _row5(r, s, C), None),
    # printed with /s; the printed form is kept alongside for the flag
    ("x1...x_{r-1} theta^2", lambda r: _col(r - 1), 2, _row9,
     lambda r, s, C: Fraction(r * (r + 1) * s * (s + 1), s) * C),
    ("x1^2 x2...x_{r-2} theta^2", lambda r: _hook(2, r - 3), 2,
     lambda r, s, C: Fraction((r + 2) * (r - 2) * (s + 2), 3 * (s + r + 1)) * _row9(r, s, C), None),
    ("x1...x_{r-2} theta^3", lambda r: _col(r - 2), 3,
     lambda r, s, C: Fraction((r + 1) * r * (r - 1) * (s + 2) * (s + 1) * s, 6) * C, None),
]


def monomial_table(p):
    """Evaluate every applicable row directly and by its closed form.

    Each entry is a dict with keys name, partition, theta, direct, closed,
    printed, status. status is "ok", "misprint" (the corrected closed
    form matches but the printed one does not) or "mismatch"."""
    r, s = p.r, p.s
    C = count_grd(p)
    rows = []
    for name, part, t, closed, printed in MONOMIAL_ROWS:
        lam = part(r)
        if lam is None:
            continue
        lam = Partition(lam)
        if len(lam) > p.nvars or lam.size + t != r + 1:
            continue
        direct = eval_schur_theta(p, lam, t)
        cval = Fraction(closed(r, s, C))
        pval = Fraction(printed(r, s, C)) if printed else cval
        if direct != cval:
            status = "mismatch"
        elif pval != direct:
            status = "misprint"
        else:
            status = "ok"
        rows.append(dict(name=name, partition=lam, theta=t, direct=direct,
                         closed=cval, printed=pval, status=status))
    return rows


def genus_wrd(p):
    """Genus of the curve W^r_d(C) for C general of genus g = rs+s+1.

    p is a BNParams or an (r, s) pair; s = 1 is allowed here."""
    r, s = (p.r, p.s) if isinstance(p, BNParams) else p
    g = r * s + s + 1
    val = 1 + Fraction(factorial(g) * s * (r + 1), s + r + 1) * prod(
        Fraction(factorial(i), factorial(s + i)) for i in range(r + 1))
    assert val.denominator == 1, "genus not integral at r=%d s=%d" % (r, s)
    return val


def genus_wrd_pencil(s):
    """The r = 1 specialisation 1 + s/(s+1) * binom(2s+2, s)."""
    return 1 + Fraction(s, s + 1) * binomial(2 * s + 2, s)
