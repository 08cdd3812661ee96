"""The Gieseker-Petri divisor on M_g-bar, g = rs+s+1, d = rs+r+1.

Two routes to the coefficients: the closed forms, and a symbolic
re-derivation of b_1 and b_0 from Chern classes on the surfaces X and Y
inside C x W^r_d(C).
"""

from dataclasses import dataclass
from fractions import Fraction

from .ambient_ring import (
    AmbientClass,
    BNParams,
    chern_jet_difference,
    chern_node_difference,
)
from .bn_numbers import count_grd, integrate
from .exact_core import binomial
from .mg_divisors import LowerBound, MgDivisorClass, bn_pencil_class, slope


def _prefactor(p):
    r, s = p.r, p.s
    return count_grd(p) * Fraction((s - 1) * r,
                                   2 * (r + s + 1) * (s + r) * (r + s + 2) * (r * s + s - 1))


def _a_poly(r, s):
    return (2 * s**3 * (s + 1) * r**5
            + s**2 * (2 * s**3 + 14 * s**2 + 33 * s + 25) * r**4
            + s * (10 * s**4 + 59 * s**3 + 162 * s**2 + 179 * s + 54) * r**3
            + (18 * s**5 + 138 * s**4 + 387 * s**3 + 491 * s**2 + 244 * s + 24) * r**2
            + (14 * s**5 + 145 * s**4 + 464 * s**3 + 627 * s**2 + 378 * s + 72) * r
            + 4 * s**5 + 54 * s**4 + 208 * s**3 + 314 * s**2 + 212 * s + 48)


def _b0_poly(r, s):
    return Fraction((r + 2) * (s + 1) * (s + r + 1) * (2 * r * s + 2 * s + 1)
                    * (r * s + s + 2) * (r * s + s + 6), 6)


def _b1_inner(r, s, misprint=False):
    k = 9 * s if misprint else 9
    return (2 * s**2 * (s + 1) * r**4
            + s * (2 * s**3 + 12 * s**2 + 23 * s + k) * r**3
            + (8 * s**4 + 39 * s**3 + 75 * s**2 + 46 * s + 10) * r**2
            + (10 * s**4 + 59 * s**3 + 108 * s**2 + 89 * s + 26) * r
            + 4 * s**4 + 30 * s**3 + 64 * s**2 + 58 * s + 12)


def _b1_poly(r, s, misprint=False):
    return (r + 1) * s * _b1_inner(r, s, misprint)


@dataclass(frozen=True)
class GPClass:
    a: Fraction
    b0: Fraction
    b1: Fraction
    cls: MgDivisorClass

    def __iter__(self):
        return iter((self.a, self.b0, self.b1))


def gp_closed_form(p, misprint=False):
    """(a, b_0, b_1) and the class; b_j >= b_1 is all that is known for j >= 2.

    misprint=True uses the variant with 9s in place of 9 in b_1, which
    breaks a - 12 b_0 + b_1 = 0; it is kept for the negative test."""
    k = _prefactor(p)
    a = k * _a_poly(p.r, p.s)
    b0 = k * _b0_poly(p.r, p.s)
    b1 = k * _b1_poly(p.r, p.s, misprint)
    g = p.gGP
    delta = [b0, b1] + [LowerBound(b1)] * (g // 2 - 1)
    return GPClass(a, b0, b1, MgDivisorClass(g, a, delta, note="Gieseker-Petri divisor"))


def gp_b1_theorem(p):
    """b_1 in the form with prefactor rs(r+1)(s-1)C/(2(s+r+1)(s+r)(s+r+2)(rs+s-1))."""
    r, s = p.r, p.s
    k = count_grd(p) * Fraction(r * s * (r + 1) * (s - 1),
                                2 * (s + r + 1) * (s + r) * (s + r + 2) * (r * s + s - 1))
    poly = ((2 * s**2 + 2 * s**3) * r**4 + (2 * s**4 + 12 * s**3 + 23 * s**2 + 9 * s) * r**3
            + (8 * s**4 + 39 * s**3 + 75 * s**2 + 46 * s + 10) * r**2
            + (10 * s**4 + 59 * s**3 + 108 * s**2 + 89 * s + 26) * r
            + 4 * s**4 + 30 * s**3 + 64 * s**2 + 58 * s + 12)
    return k * poly


def gp_b0_theorem(p):
    r, s = p.r, p.s
    return count_grd(p) * Fraction(
        r * (r + 2) * (s - 1) * (s + 1) * (2 * r * s + 2 * s + 1) * (r * s + s + 2) * (r * s + s + 6),
        12 * (r * s + s - 1) * (s + r + 2) * (s + r))


def gp_slope(p):
    r, s = p.r, p.s
    g = p.gGP
    return (6 + Fraction(12, g + 1)
            + Fraction(24 * s * (r + 1) * (r + s) * (s + r + 2) * (r * s + s - 1),
                       (r + 2) * (s + 1) * (s + r + 1) * (2 * r * s + 2 * s + 1)
                       * (r * s + s + 2) * (r * s + s + 6)))


def gp_slope_rho0(r, s):
    """Slope of the Gieseker-Petri divisor when rho = 0: g = rs+s, d = rs+r."""
    g = r * s + s
    return (6 + Fraction(12, g + 1)
            + Fraction(6 * (s + r + 1) * (r * s + s - 2) * (r * s + s - 1),
                       s * (s + 1) * (r + 1) * (r + 2) * (r * s + s + 4) * (r * s + s + 1)))


def gp_bpf_class(s):
    """The divisor of curves whose Petri map fails on a base point free
    pencil: GP(1, s) minus (2s-2) copies of the pencil divisor.

    Returns (class, slope); only lambda, delta_0, delta_1 are exact."""
    gp = gp_closed_form(BNParams(1, s))
    bn = bn_pencil_class(s)
    k = 2 * s - 2
    a = gp.a - k * bn.lam
    b0 = gp.b0 - k * bn.delta[0].value
    b1 = gp.b1 - k * bn.delta[1].value
    D = MgDivisorClass(2 * s + 1, a, [b0, b1], note="base point free Gieseker-Petri divisor")
    return D, slope(D, assume_delta0_minimal=True)


def gp_bpf_slope_closed(s):
    g = 2 * s + 1
    return 6 + Fraction(12, g + 1) + Fraction(2 * s - 1, (s + 1) * (s + 2))


# -- symbolic route ---------------------------------------------------------

@dataclass(frozen=True)
class RankedChern:
    rank: int
    c1: object
    c2: object


def tensor_chern(E, F):
    """c_1, c_2 of E (x) F from those of E and F (splitting principle)."""
    m, n = E.rank, F.rank
    c1 = n * E.c1 + m * F.c1
    # power sums: p2(E (x) F) = n p2(E) + m p2(F) + 2 c1(E) c1(F)
    p2 = n * (E.c1 * E.c1 - 2 * E.c2) + m * (F.c1 * F.c1 - 2 * F.c2) + 2 * E.c1 * F.c1
    c2 = (c1 * c1 - p2) * Fraction(1, 2)
    return RankedChern(m * n, c1, c2)


class KernelPoly:
    """Polynomial in u = c_1(kernel line bundle dual) with ambient coefficients."""

    __slots__ = ("p", "coefs")

    def __init__(self, p, coefs):
        self.p = p
        self.coefs = {k: v for k, v in coefs.items() if v}

    @classmethod
    def const(cls, p, a):
        if not isinstance(a, AmbientClass):
            a = AmbientClass.scalar(p, a)
        return cls(p, {0: a})

    @classmethod
    def u(cls, p):
        return cls(p, {1: AmbientClass.scalar(p, 1)})

    def _lift(self, other):
        return other if isinstance(other, KernelPoly) else KernelPoly.const(self.p, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coefs)
        for k, v in other.coefs.items():
            out[k] = out[k] + v if k in out else v
        return KernelPoly(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return KernelPoly(self.p, {k: -v for k, v in self.coefs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return KernelPoly(self.p, {k: v * other for k, v in self.coefs.items()})
        other = self._lift(other)
        out = {}
        for i, a in self.coefs.items():
            for j, b in other.coefs.items():
                out[i + j] = out[i + j] + a * b if i + j in out else a * b
        return KernelPoly(self.p, out)

    __rmul__ = __mul__

    def coefficient(self, k):
        return self.coefs.get(k, AmbientClass(self.p))


def _surface_integral(p, poly, difference):
    """Integrate a degree-2 class on the surface: u^k pairs with c_{r+k}."""
    if any(k > 2 for k in poly.coefs):
        raise ValueError("kernel-line power above 2")
    total = Fraction(0)
    for k, cls in poly.coefs.items():
        if cls.degree() not in (None, 2 - k):
            raise ValueError("degree bookkeeping failed: u^%d coefficient has degree %s" % (k, cls.degree()))
        total += integrate(p, cls * difference(p, p.r + k))
    return total


def petri_integrand(p, e_c1):
    """c_2(E - F (x) N) on X or Y as a polynomial in u, where E has c_1 = e_c1
    and c_2 = 0, F has c_i(F^dual) = c_i and N sits in 0 -> R^dual -> N -> U -> 0."""
    A = lambda x: KernelPoly.const(p, x)
    r, s = p.r, p.s
    c1, c2 = A(AmbientClass.chern(p, 1)), A(AmbientClass.chern(p, 2))
    theta = A(AmbientClass.theta(p))
    u = KernelPoly.u(p)
    F = RankedChern(r + 1, -1 * c1, c2)
    N = RankedChern(s, -1 * theta + c1 - u,
                    c2 - theta * c1 + theta * theta * Fraction(1, 2) + (theta - c1) * u)
    FN = tensor_chern(F, N)
    e1 = A(e_c1)
    # c_2(E - V) = c_2(E) - c_1(E) c_1(V) + c_1(V)^2 - c_2(V), with c_2(E) = 0
    return -1 * e1 * FN.c1 + FN.c1 * FN.c1 - FN.c2


def b1_integral(p):
    """The undivided degree of c_2 on the pullback of the test curve C^1."""
    eta = AmbientClass.eta(p)
    poly = petri_integrand(p, -(2 * p.gGP - 4) * eta)
    return _surface_integral(p, poly, chern_jet_difference)


def b0_integral(p):
    """The undivided degree on the pullback of C^0, equal to (2g-2)b_0 - b_1."""
    eta = AmbientClass.eta(p)
    # c_1 of the twisted Hodge bundle on a test curve T is (T.delta_1) eta:
    # -(2g-4) eta on C^1 and +eta on C^0.
    poly = petri_integrand(p, eta)
    return _surface_integral(p, poly, chern_node_difference)


def symbolic_b1(p):
    return b1_integral(p) / (2 * p.gGP - 4)


def symbolic_b0(p):
    return (b0_integral(p) + symbolic_b1(p)) / (2 * p.gGP - 2)


def canonical_surface_classes(p):
    """Ambient parts of K_X and K_Y, plus the coefficient r-1 of the
    kernel-line term c_1(Ker^dual), which is kept symbolic."""
    r, s = p.r, p.s
    th, c1 = AmbientClass.theta(p), AmbientClass.chern(p, 1)
    eta, gam = AmbientClass.eta(p), AmbientClass.gamma(p)
    KX = (r + 1) * th + (s - r - 1) * c1 + 2 * gam + (6 * r * s + 2 * r + 4 * s - 2) * eta
    KY = (r + 1) * th + (s - r - 1) * c1 + gam + (3 * r * s + r + 2 * s - 2) * eta
    return KX, KY, r - 1
