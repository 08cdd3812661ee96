"""Divisor classes a*lambda - sum b_j delta_j on the moduli space of
stable genus-g curves, test curves, slopes, and the named classes.

Each boundary coefficient carries a knowledge state: Exact, LowerBound
(the true b_j is at least the value) or Unknown.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Exact:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def __str__(self):
        return _fmt(self.value)


@dataclass(frozen=True)
class LowerBound:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def __str__(self):
        return ">=" + _fmt(self.value)


@dataclass(frozen=True)
class Unknown:
    def __str__(self):
        return "?"


UNKNOWN = Unknown()


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _coef(x):
    if isinstance(x, (Exact, LowerBound, Unknown)):
        return x
    return Exact(x)


def _scale(k, x):
    k = Fraction(k)
    if isinstance(x, Exact):
        return Exact(k * x.value)
    if k == 0:
        return Exact(0)
    if isinstance(x, LowerBound) and k > 0:
        return LowerBound(k * x.value)
    return UNKNOWN


def _add(x, y):
    if isinstance(x, Unknown) or isinstance(y, Unknown):
        return UNKNOWN
    if isinstance(x, Exact) and isinstance(y, Exact):
        return Exact(x.value + y.value)
    return LowerBound(x.value + y.value)


class MgDivisorClass:
    """The class lambda_coef * lambda - sum delta[j] * delta_j on M_g-bar."""

    __slots__ = ("g", "lam", "delta", "note")

    def __init__(self, g, lam, delta, note=""):
        if g < 2:
            raise ValueError("need g >= 2")
        delta = [_coef(x) for x in delta]
        n = g // 2 + 1
        if len(delta) > n:
            raise ValueError("genus %d has only delta_0..delta_%d" % (g, g // 2))
        delta += [UNKNOWN] * (n - len(delta))
        self.g = g
        self.lam = Fraction(lam)
        self.delta = tuple(delta)
        self.note = note

    @property
    def a(self):
        return self.lam

    def b(self, j):
        return self.delta[j]

    def __add__(self, other):
        if other.g != self.g:
            raise ValueError("genus mismatch")
        return MgDivisorClass(self.g, self.lam + other.lam,
                              [_add(x, y) for x, y in zip(self.delta, other.delta)])

    def __mul__(self, k):
        return MgDivisorClass(self.g, Fraction(k) * self.lam, [_scale(k, x) for x in self.delta])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, MgDivisorClass) and self.g == other.g
                and self.lam == other.lam and self.delta == other.delta)

    def __hash__(self):
        return hash((self.g, self.lam, self.delta))

    def printed(self, upto=None):
        """(a, b_0, b_1, ...) as Fractions, for Exact entries up to index upto."""
        upto = len(self.delta) if upto is None else upto
        out = [self.lam]
        for x in self.delta[:upto]:
            if not isinstance(x, Exact):
                raise ValueError("coefficient %s is not exact" % x)
            out.append(x.value)
        return tuple(out)

    def __repr__(self):
        return "MgDivisorClass(g=%d, %s)" % (self.g, self)

    def __str__(self):
        parts = [_fmt(self.lam) + "*lambda"]
        for j, x in enumerate(self.delta):
            parts.append("(%s)*delta_%d" % (x, j))
        return " - ".join(parts)


def slope(D, assume_delta0_minimal=False):
    """a / min_j b_j; for every class in use the minimum is b_0.

    With assume_delta0_minimal, Unknown coefficients are taken to be at
    least b_0 (the convention used where only lambda, delta_0, delta_1 are
    printed)."""
    if D.lam <= 0:
        raise ValueError("not of effective-normal form: lambda coefficient %s" % _fmt(D.lam))
    b0 = D.delta[0]
    if not isinstance(b0, Exact):
        raise ValueError("minimum coefficient ambiguous: delta_0 is %s" % b0)
    if b0.value <= 0:
        raise ValueError("not of effective-normal form: b_0 = %s" % _fmt(b0.value))
    exact = [x.value for x in D.delta if isinstance(x, Exact)]
    if min(exact) <= 0:
        raise ValueError("not of effective-normal form: some b_j <= 0")
    low = min(exact)
    for j, x in enumerate(D.delta):
        if isinstance(x, Unknown) and not assume_delta0_minimal:
            raise ValueError("minimum coefficient ambiguous: delta_%d unknown" % j)
        if isinstance(x, LowerBound) and x.value < low:
            raise ValueError("minimum coefficient ambiguous: delta_%d bound below minimum" % j)
    return D.lam / low


@dataclass(frozen=True)
class TestCurveVector:
    g: int
    dot_lambda: Fraction
    dot_delta: tuple
    name: str = ""


def test_curve(name, g, j=None):
    """Intersection numbers of the standard test curves with lambda, delta_j."""
    n = g // 2 + 1
    dd = [Fraction(0)] * n
    lam = Fraction(0)
    if name == "C0":
        dd[0] = Fraction(-2 * g + 2)
        dd[1] = Fraction(1)
    elif name == "C1":
        dd[1] = Fraction(-2 * g + 4)
    elif name == "Cj":
        if j is None or not 0 <= j < n:
            raise ValueError("invalid j=%r for genus %d" % (j, g))
        dd[j] = Fraction(-2 * j + 2)
        name = "C%d" % j
    elif name == "R":
        lam = Fraction(1)
        dd[0] = Fraction(12)
        dd[1] = Fraction(-1)
    else:
        raise ValueError("unknown test curve %r" % name)
    return TestCurveVector(g, lam, tuple(dd), name)


def pair(D, T):
    """Degree of the class D on the curve T."""
    if D.g != T.g:
        raise ValueError("genus mismatch: %d vs %d" % (D.g, T.g))
    total = T.dot_lambda * D.lam
    for j, (x, t) in enumerate(zip(D.delta, T.dot_delta)):
        if t == 0:
            continue
        if not isinstance(x, Exact):
            raise ValueError("delta_%d coefficient %s is not exact" % (j, x))
        total -= t * x.value
    return total


def bn_pencil_class(s):
    """Class of the pencil Brill-Noether divisor on M_{2s+1}-bar."""
    if s < 2:
        raise ValueError("need s >= 2")
    from math import factorial
    k = Fraction(factorial(2 * s - 2), factorial(s + 1) * factorial(s - 1))
    return MgDivisorClass(2 * s + 1, 6 * (s + 2) * k, [(s + 1) * k, 6 * s * k],
                          note="pencil Brill-Noether divisor")


def _cls(g, a, *b, scale=1, note=""):
    D = MgDivisorClass(g, a, list(b)) * scale
    D.note = note
    return D


def _gp_5_4():
    D = _cls(5, 8, 1, 4, 6, scale=2) + _cls(5, 33, 4, 15, 21, scale=4)
    D.note = "derived: 2*M1_5_3 + GP10_5_4"
    return D


_REGISTRY = {
    "M1_3_2": lambda: _cls(3, 9, 1, 3, note="hyperelliptic locus"),
    "GP_4_3": lambda: _cls(4, 34, 4, 14, 18, note="Gieseker-Petri divisor, genus 4"),
    "Diaz_4": lambda: _cls(4, 44, 5, UNKNOWN, UNKNOWN, note="slope only is printed"),
    "M1_5_3": lambda: _cls(5, 8, 1, 4, 6, note="trigonal locus"),
    "GP10_5_4": lambda: _cls(5, 33, 4, 15, 21, scale=4, note="base point free Gieseker-Petri divisor, genus 5"),
    "GP_5_4": _gp_5_4,
    "M1_7_4": lambda: _cls(7, 15, 2, 9, 15, 18, note="tetragonal locus"),
    "GP_7_5": lambda: _cls(7, 201, 26, 111, 177, 198, scale=4, note="Gieseker-Petri divisor, genus 7"),
    "K10": lambda: _cls(10, 7, 1, 5, 9, 12, 14, 15, note="K3 divisor"),
}

# Slopes quoted from the literature, with no class to recompute them from.
CITED_SLOPES = {
    "GP_6_5": (6, Fraction(65, 8)),
}


def registry(name):
    try:
        D = _REGISTRY[name]()
    except KeyError:
        raise KeyError("unknown divisor %r; known: %s" % (name, ", ".join(sorted(_REGISTRY))))
    return D


def registry_names():
    return sorted(_REGISTRY)
