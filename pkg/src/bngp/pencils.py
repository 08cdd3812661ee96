"""Families of curves from Lefschetz pencils on surfaces, their degrees on
lambda and delta, Segre plane models of k-gonal curves, and the slope
table for small genus.

For a pencil in |L| on S, blow up the L^2 base points to get X fibred over
P^1. Then F.lambda = chi(O_X) + g - 1 and F.delta = c_2(X) + 4(g-1) with
c_2(X) = c_2(S) + L^2. The points blown up on S are assumed general.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .ambient_ring import BNParams
from .gp_pipeline import gp_bpf_class, gp_closed_form, gp_slope_rho0
from .mg_divisors import CITED_SLOPES, registry, slope


@dataclass(frozen=True)
class SurfaceSpec:
    """kind is "plane" (P^2 blown up at len(points) general points, the
    multiplicities living on the linear system), "hirzebruch" (F_e) or
    "k3"."""
    kind: str
    npoints: int = 0
    e: int = 0

    def __post_init__(self):
        if self.kind not in ("plane", "hirzebruch", "k3"):
            raise ValueError("unknown surface kind %r" % self.kind)
        if 12 * self.chiO != self.K_squared + self.c2:
            raise AssertionError("Noether's formula fails for %r" % (self,))

    @property
    def chiO(self):
        return 2 if self.kind == "k3" else 1

    @property
    def K_squared(self):
        return {"plane": 9 - self.npoints, "hirzebruch": 8, "k3": 0}[self.kind]

    @property
    def c2(self):
        return {"plane": 3 + self.npoints, "hirzebruch": 4, "k3": 24}[self.kind]


def plane(n_points):
    return SurfaceSpec("plane", npoints=n_points)


def hirzebruch(e):
    if e < 0:
        raise ValueError("need e >= 0")
    return SurfaceSpec("hirzebruch", e=e)


def k3():
    return SurfaceSpec("k3")


@dataclass(frozen=True)
class LinearSystemClass:
    """plane: n h - sum m_i E_i; hirzebruch: a C_0 + b f; k3: a class of
    the given self-intersection (K is trivial)."""
    n: int = 0
    mult: tuple = field(default_factory=tuple)
    a: int = 0
    b: int = 0
    self_int: int = 0


def plane_system(n, mult):
    return LinearSystemClass(n=n, mult=tuple(mult))


def hirzebruch_system(a, b):
    return LinearSystemClass(a=a, b=b)


def k3_system(genus):
    return LinearSystemClass(self_int=2 * genus - 2)


def _check(S, L):
    if S.kind == "plane" and len(L.mult) != S.npoints:
        raise ValueError("need %d multiplicities, got %d" % (S.npoints, len(L.mult)))


def self_intersection(S, L):
    _check(S, L)
    if S.kind == "plane":
        return L.n ** 2 - sum(m * m for m in L.mult)
    if S.kind == "hirzebruch":
        # C_0^2 = -e, C_0.f = 1, f^2 = 0
        return -S.e * L.a ** 2 + 2 * L.a * L.b
    return L.self_int


def dot_canonical(S, L):
    _check(S, L)
    if S.kind == "plane":
        # K = -3h + sum E_i
        return -3 * L.n + sum(L.mult)
    if S.kind == "hirzebruch":
        # K = -2 C_0 - (2+e) f
        return S.e * L.a - 2 * L.a - 2 * L.b
    return 0


def member_genus(S, L):
    twice = self_intersection(S, L) + dot_canonical(S, L)
    if twice % 2:
        raise ValueError("non-reduced or wrong class: L^2 + L.K odd")
    return 1 + twice // 2


@dataclass(frozen=True)
class FamilyNumbers:
    g: int
    base_points: int
    dot_lambda: int
    dot_delta: int

    @property
    def ratio(self):
        return Fraction(self.dot_delta, self.dot_lambda)


def family_numbers(S, L):
    """F.lambda and F.delta, computed two ways and compared."""
    L2 = self_intersection(S, L)
    if L2 < 0:
        raise ValueError("no pencil: L^2 = %d" % L2)
    g = member_genus(S, L)
    lam = S.chiO + g - 1
    c2X = S.c2 + L2
    delta = c2X + 4 * (g - 1)
    # second route: Noether on X and the relative canonical class
    K2X = S.K_squared - L2
    K2rel = K2X + 8 * (g - 1)
    if delta != 12 * lam - K2rel or 12 * S.chiO != K2X + c2X:
        raise AssertionError("Noether cross-check failed for %r %r" % (S, L))
    return FamilyNumbers(g, L2, lam, delta)


@dataclass(frozen=True)
class SegreFamily:
    g: int
    k: int
    n: int
    nodes: int
    base_points: int
    dot_lambda: int
    dot_delta: int

    @property
    def ratio(self):
        return Fraction(self.dot_delta, self.dot_lambda)


def segre_degree(g, k):
    """Least n with n >= (g+k+2)/2."""
    return (g + k + 3) // 2


def segre_family(g, k):
    """Pencil of plane models of degree n with an (n-k)-fold point and nodes."""
    if not 3 <= k <= 5:
        raise ValueError("k must be 3, 4 or 5")
    n = segre_degree(g, k)
    nodes = comb(n - 1, 2) - comb(max(n - k, 0), 2) - g
    if n < k or nodes < 0:
        raise ValueError("Segre model does not exist for g=%d, k=%d" % (g, k))
    S = plane(1 + nodes)
    L = plane_system(n, (n - k,) + (2,) * nodes)
    fam = family_numbers(S, L)
    if fam.g != g:
        raise AssertionError("Segre model has genus %d, expected %d" % (fam.g, g))
    base = n * n - (n - k) ** 2 - 4 * nodes
    assert base == fam.base_points
    closed = (3 - k) * n + 7 * g + k * (k + 3) // 2 - 3
    assert closed == fam.dot_delta, (g, k, closed, fam.dot_delta)
    return SegreFamily(g, k, n, nodes, base, fam.dot_lambda, fam.dot_delta)


def segre_delta_printed(g, k, n):
    """The delta-degree formula with the transposed term (3-n)k."""
    return (3 - n) * k + 7 * g + k * (k + 3) // 2 - 3


def gonality_threshold(g, k):
    segre_family(g, k)
    if k == 4:
        return Fraction((13 * g + 16) // 2, g)
    if k == 5:
        return Fraction(5 * g + 9 + 2 * ((g + 1) // 2), g)
    if k == 3:
        return 7 + Fraction(6, g)
    raise ValueError("k must be 3, 4 or 5")


# -- the small genus table ---------------------------------------------------

def _bn_slope(g):
    return 6 + Fraction(12, g + 1)


def _witnesses():
    F = lambda S, L: family_numbers(S, L).ratio
    return {
        3: (slope(registry("M1_3_2")),
            F(hirzebruch(0), hirzebruch_system(2, 4)), None),
        4: (slope(registry("GP_4_3")),
            F(hirzebruch(2), hirzebruch_system(3, 6)),
            slope(registry("Diaz_4"), assume_delta0_minimal=True)),
        5: (slope(registry("M1_5_3")),
            F(hirzebruch(1), hirzebruch_system(3, 5)),
            gp_bpf_class(2)[1]),
        6: (gp_slope_rho0(1, 3), gp_slope_rho0(1, 3), CITED_SLOPES["GP_6_5"][1]),
        7: (slope(registry("M1_7_4")), segre_family(7, 4).ratio,
            slope(registry("GP_7_5"))),
        8: (_bn_slope(8), F(plane(7), plane_system(7, (2,) * 7)), gp_slope_rho0(1, 4)),
        9: (_bn_slope(9), _bn_slope(9), gp_slope_rho0(2, 3)),
        10: (slope(registry("K10")), F(k3(), k3_system(10)), gp_slope_rho0(1, 5)),
        # the K3 pencil covers M_11 and is contracted by the map to the K3
        # moduli space, so it pins both slopes
        11: (F(k3(), k3_system(11)), F(k3(), k3_system(11)), None),
    }


@dataclass(frozen=True)
class SlopeRow:
    g: int
    s: Fraction
    lo: Fraction
    hi: Fraction
    lo_open: bool = False


def slope_table():
    """Rows g = 3..11: s(M_g-bar) and the interval for the moving slope."""
    rows = []
    for g, (s, lo, hi) in sorted(_witnesses().items()):
        rows.append(SlopeRow(g, s, lo, lo if hi is None else hi, lo_open=(g == 9)))
    return rows


PRINTED_TABLE = {
    3: (Fraction(9), Fraction(28, 3), Fraction(28, 3)),
    4: (Fraction(17, 2), Fraction(17, 2), Fraction(44, 5)),
    5: (Fraction(8), Fraction(41, 5), Fraction(33, 4)),
    6: (Fraction(47, 6), Fraction(47, 6), Fraction(65, 8)),
    7: (Fraction(15, 2), Fraction(53, 7), Fraction(201, 26)),
    8: (Fraction(22, 3), Fraction(59, 8), Fraction(149, 20)),
    9: (Fraction(36, 5), Fraction(36, 5), Fraction(95, 13)),
    10: (Fraction(7), Fraction(78, 11), Fraction(36, 5)),
    11: (Fraction(7), Fraction(7), Fraction(7)),
}
