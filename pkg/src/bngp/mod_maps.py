"""Divisor arithmetic for two maps out of moduli of curves.

phi: M_{2s+1} --> M_{g'} sends C to the curve W^1_{s+2}(C), of genus
g' = genus_wrd(1, s). nu: M_5 --> R_6 is the Prym-related map of genus 5
curves with their two trigonal-type pencils.
"""

from dataclasses import dataclass, replace
from fractions import Fraction

from .ambient_ring import BNParams
from .bn_numbers import count_grd
from .gp_pipeline import gp_closed_form
from .mg_divisors import (
    UNKNOWN,
    Exact,
    LowerBound,
    MgDivisorClass,
    Unknown,
    pair,
    registry,
    slope,
    test_curve,
)

GENERATORS = ("lambda", "delta0", "delta1", "deltaj")


def n0(s):
    return count_grd(BNParams(1, s))


def pushforward_numbers(s, curve):
    """Degrees of phi_*(T) on (lambda', delta'_0, delta'_1, delta'_j for j >= 2)."""
    n = n0(s)
    gp = gp_closed_form(BNParams(1, s))
    g = 2 * s + 1
    if curve == "R":
        return (n, 12 * n, -n, Fraction(0))
    if curve == "C1":
        lam = n * Fraction(2 * s * (s - 1) * (6 * s * s + 10 * s + 1), s + 2)
        d0 = pair(gp.cls, test_curve("C1", g))
        return (lam, d0, -n * (4 * s - 2), Fraction(0))
    if curve == "C0":
        lam = n * Fraction(s * (s - 1) * (2 * s * s + 4 * s + 1), s + 2)
        d0 = pair(gp.cls, test_curve("C0", g)) - 4 * n * s
        return (lam, d0, n, Fraction(0))
    raise ValueError("unknown test curve %r" % curve)


def pushforward_gp_pairings(s):
    """The closed forms of C^1.GP and C^0.GP in s."""
    n = n0(s)
    c1 = 4 * n * Fraction(s * (s - 1) * (12 * s * s + 23 * s + 8), s + 2)
    c0 = 2 * n * Fraction(s * (s - 1) * (4 * s * s + 9 * s + 4), s + 2)
    return c1, c0


def phi_pullback(s, gen):
    """phi^* of a generator of Pic(M_{g'}-bar), as a class on M_{2s+1}-bar."""
    if s < 2:
        raise ValueError("need s >= 2")
    g = 2 * s + 1
    n = n0(s)
    rest = g // 2 - 1
    if gen == "lambda":
        lam = n * Fraction(6 * s**4 + 20 * s**3 - s * s - 20 * s - 2, (s + 2) * (2 * s - 1))
        b0 = n * Fraction(s * (s * s - 1), 2 * s - 1)
        b1 = n * Fraction(2 * s * (s - 1) * (6 * s * s + 10 * s + 1), (s + 2) * (4 * s - 2))
        return MgDivisorClass(g, lam, [b0, b1] + [LowerBound(b0)] * rest)
    if gen == "delta0":
        gp = gp_closed_form(BNParams(1, s)).cls
        return gp + MgDivisorClass(g, 0, [-n] + [0] * (rest + 1))
    if gen == "delta1":
        return MgDivisorClass(g, 0, [0, -n] + [0] * rest)
    if gen == "deltaj":
        return MgDivisorClass(g, 0, [0] * (rest + 2))
    raise ValueError("unknown generator %r" % gen)


def _domain(s, c):
    c = Fraction(c)
    D = direct_pullback(s, c)
    den = c * s * s - 4 * s * s - c - s + 6
    if D.delta[0].value <= 0 or den == 0:
        raise ValueError("outside slope-c cone: c=%s at s=%d" % (c, s))
    return c


def direct_pullback(s, c):
    """phi^*(c lambda' - delta'_0 - delta'_1)."""
    return (phi_pullback(s, "lambda") * Fraction(c)
            - phi_pullback(s, "delta0") - phi_pullback(s, "delta1"))


def phi_slope_closed(s, c):
    c = _domain(s, c)
    num = 8 * s**3 * (c - 4) + 5 * c * s * s - 30 * s * s + 20 * s - 8 * c * s - 2 * c + 24
    den = s * (s + 2) * (c * s * s - 4 * s * s - c - s + 6)
    return 6 + num / den


def phi_slope_direct(s, c):
    """a / b_0 of the pullback; only lambda and delta_0 enter."""
    c = _domain(s, c)
    D = direct_pullback(s, c)
    return D.lam / D.delta[0].value


def phi_c_min(s):
    """The pullback's delta_0 coefficient is positive exactly for c > phi_c_min(s)."""
    L, Z = phi_pullback(s, "lambda"), phi_pullback(s, "delta0")
    return (Z.delta[0].value + phi_pullback(s, "delta1").delta[0].value) / L.delta[0].value


def asy_bound(s):
    g = 2 * s + 1
    return 6 + Fraction(16, g - 1)


# -- Prym side --------------------------------------------------------------

@dataclass(frozen=True)
class PrymClass:
    """kappa1 * pi^*(kappa_1) + lam * lambda + d0p delta'_0 + d0pp delta''_0
    + d0r delta^r_0, plus boundary terms that are not tracked.

    Coefficients are signed as they appear in the class."""
    lam: Fraction = Fraction(0)
    d0p: Fraction = Fraction(0)
    d0pp: Fraction = Fraction(0)
    d0r: Fraction = Fraction(0)
    kappa1: Fraction = Fraction(0)
    higher_boundary: object = None

    def __add__(self, o):
        return PrymClass(self.lam + o.lam, self.d0p + o.d0p, self.d0pp + o.d0pp,
                         self.d0r + o.d0r, self.kappa1 + o.kappa1,
                         UNKNOWN if (self.higher_boundary or o.higher_boundary) else None)

    def __mul__(self, k):
        k = Fraction(k)
        return PrymClass(k * self.lam, k * self.d0p, k * self.d0pp, k * self.d0r,
                         k * self.kappa1, self.higher_boundary)

    __rmul__ = __mul__

    def __sub__(self, o):
        return self + o * -1

    def substitute_kappa(self):
        """Use kappa_1 = 12 lambda - delta and pi^* delta_0 = delta'_0 + delta''_0 + 2 delta^r_0.

        The other boundary components of pi^* delta are left untracked."""
        k = self.kappa1
        return PrymClass(self.lam + 12 * k, self.d0p - k, self.d0pp - k, self.d0r - 2 * k,
                         Fraction(0), UNKNOWN if k else self.higher_boundary)


def prym_taut_c1(i):
    """c_1(E_i) = binom(i,2) kappa_1 + lambda - (i^2/4) delta^r_0."""
    if i < 1:
        raise ValueError("need i >= 1")
    return PrymClass(lam=Fraction(1), d0r=Fraction(-i * i, 4), kappa1=Fraction(i * (i - 1) // 2))


def prym_ramification_raw(g):
    """c_1(E_2) - c_1(Sym^2 E_1), before substituting kappa_1; rank E_1 = g-1."""
    if g < 2:
        raise ValueError("need g >= 2")
    return prym_taut_c1(2) - prym_taut_c1(1) * g


def prym_ramification_class(g):
    return prym_ramification_raw(g).substitute_kappa()


_NU = {
    "lambda": lambda: MgDivisorClass(5, 34, [4, 15, UNKNOWN], note="delta_2 printed as (?)"),
    "delta0p": lambda: MgDivisorClass(5, 0, [-1, 0, 0]),
    "delta0pp": lambda: registry("M1_5_3"),
    "delta0r": lambda: registry("GP10_5_4"),
}


def nu_pullback(gen):
    try:
        return _NU[gen]()
    except KeyError:
        raise ValueError("unknown Prym generator %r" % gen)


def nu_ramification_pullback():
    """nu^* of 7 lambda - delta'_0 - delta''_0 - (3/2) delta^r_0.

    Returns (class, slope, a_1) with a_1 the delta_1 coefficient over 4."""
    R = prym_ramification_class(6)
    D = (nu_pullback("lambda") * R.lam + nu_pullback("delta0p") * R.d0p
         + nu_pullback("delta0pp") * R.d0pp + nu_pullback("delta0r") * R.d0r)
    s = D.lam / D.delta[0].value
    return D, s, D.delta[1].value / 4
