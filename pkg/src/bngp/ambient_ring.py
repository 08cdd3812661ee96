"""The graded ring of C x Pic^d(C) generated by eta, gamma, theta and the
Chern classes of the tautological bundle on W^r_d(C).

A monomial is a key (e, c, t, m): eta^e gamma^c theta^t s_m, where s_m is
the Schur class of the partition m in the Chern roots of M^dual. The
elementary class c_k is s_{(1^k)}. Relations: eta^2 = 0, gamma*eta = 0,
gamma^2 = -2 eta theta (hence gamma^3 = 0).
"""

from dataclasses import dataclass
from fractions import Fraction

from .exact_core import Partition, add_vertical_strip, column


@dataclass(frozen=True)
class BNParams:
    r: int
    s: int

    def __post_init__(self):
        if not isinstance(self.r, int) or not isinstance(self.s, int):
            raise TypeError("r and s must be integers")
        if self.r < 1:
            raise ValueError("need r >= 1, got r=%d" % self.r)
        if self.s < 2:
            raise ValueError("need s >= 2, got s=%d" % self.s)

    @property
    def gC(self):
        return self.r * self.s + self.s

    @property
    def d(self):
        return self.r * self.s + self.r + 1

    @property
    def gGP(self):
        return self.r * self.s + self.s + 1

    @property
    def dimW(self):
        return self.r + 1

    @property
    def nvars(self):
        return self.r + 1


def _reduce_key(e, c, t, coef):
    # gamma^2 -> -2 eta theta
    while c >= 2:
        c -= 2
        e += 1
        t += 1
        coef *= -2
    if e >= 2 or (e and c):
        return None
    return (e, c, t), coef


class AmbientClass:
    """An element of the ring in normal form. Immutable."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms=None):
        self.p = p
        clean = {}
        for key, v in (terms or {}).items():
            if v:
                clean[key] = Fraction(v)
        self.terms = clean

    # -- construction -----------------------------------------------------

    @classmethod
    def make(cls, p, parts):
        """Build from (e, c, t, m, coefficient) tuples, reducing."""
        acc = {}
        for e, c, t, m, coef in parts:
            m = m if isinstance(m, Partition) else Partition(m)
            if len(m) > p.nvars:
                raise ValueError("too many parts: %r for r=%d" % (m, p.r))
            red = _reduce_key(e, c, t, Fraction(coef))
            if red is None:
                continue
            (e2, c2, t2), v = red
            key = (e2, c2, t2, m)
            acc[key] = acc.get(key, 0) + v
        return cls(p, acc)

    @classmethod
    def scalar(cls, p, x):
        return cls.make(p, [(0, 0, 0, (), x)])

    @classmethod
    def eta(cls, p):
        return cls.make(p, [(1, 0, 0, (), 1)])

    @classmethod
    def gamma(cls, p):
        return cls.make(p, [(0, 1, 0, (), 1)])

    @classmethod
    def theta(cls, p):
        return cls.make(p, [(0, 0, 1, (), 1)])

    @classmethod
    def chern(cls, p, k):
        """pi_2^*(c_k), zero outside 0 <= k <= r+1."""
        if k < 0 or k > p.nvars:
            return cls(p)
        return cls.make(p, [(0, 0, 0, column(k), 1)])

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AmbientClass):
            if other.p != self.p:
                raise ValueError("classes over different BNParams")
            return other
        return AmbientClass.scalar(self.p, other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return AmbientClass(self.p, acc)

    __radd__ = __add__

    def __neg__(self):
        return AmbientClass(self.p, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, AmbientClass):
            x = Fraction(other)
            return AmbientClass(self.p, {k: v * x for k, v in self.terms.items()})
        other = self._coerce(other)
        nvars = self.p.nvars
        acc = {}
        for (e1, c1, t1, m1), v1 in self.terms.items():
            for (e2, c2, t2, m2), v2 in other.terms.items():
                red = _reduce_key(e1 + e2, c1 + c2, t1 + t2, v1 * v2)
                if red is None:
                    continue
                (e, c, t), v = red
                for m in _schur_times(m1, m2, nvars):
                    key = (e, c, t, m)
                    acc[key] = acc.get(key, 0) + v
        return AmbientClass(self.p, acc)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        out = AmbientClass.scalar(self.p, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AmbientClass):
            try:
                other = AmbientClass.scalar(self.p, other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------

    def degrees(self):
        return {e + c + t + m.size for (e, c, t, m) in self.terms}

    def degree(self):
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("class is not homogeneous: degrees %s" % sorted(degs))
        return degs.pop() if degs else None

    def coefficient(self, e=0, c=0, t=0, m=()):
        return self.terms.get((e, c, t, Partition(m)), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for (e, c, t, m), v in sorted(self.terms.items(), key=lambda kv: (kv[0][:3], tuple(kv[0][3]))):
            f = []
            if e:
                f.append("eta")
            if c:
                f.append("gamma")
            if t:
                f.append("theta" if t == 1 else "theta^%d" % t)
            if m:
                f.append("s%s" % (tuple(m),))
            out.append("%s%s" % (v, "*" + "*".join(f) if f else ""))
        return " + ".join(out)


def _schur_times(m1, m2, nvars):
    """Multiply two Schur keys, one of which must be a single column."""
    if m2.is_column():
        return add_vertical_strip(m1, len(m2), nvars)
    if m1.is_column():
        return add_vertical_strip(m2, len(m1), nvars)
    raise ValueError("expand via Pieri first: %r * %r" % (m1, m2))


def make_class(p, parts):
    return AmbientClass.make(p, parts)


def mul(a, b):
    return a * b


def _difference_class(p, k, A, B):
    # c_k(M^dual - J) = c_k - B c_{k-2} eta theta + A c_{k-1}, with c_{r+2} = 0
    if k not in (p.r, p.r + 1, p.r + 2):
        raise ValueError("k must be one of r, r+1, r+2; got %d" % k)
    ch = lambda j: AmbientClass.chern(p, j)
    eta, theta = AmbientClass.eta(p), AmbientClass.theta(p)
    return ch(k) - B * ch(k - 2) * eta * theta + A * ch(k - 1)


def jet_twist(p):
    """(4rs+2r+2s) eta + 2 gamma."""
    r, s = p.r, p.s
    return (4 * r * s + 2 * r + 2 * s) * AmbientClass.eta(p) + 2 * AmbientClass.gamma(p)


def node_twist(p):
    """(rs+r) eta + gamma, i.e. (d-1) eta + gamma."""
    return (p.r * p.s + p.r) * AmbientClass.eta(p) + AmbientClass.gamma(p)


def chern_jet_difference(p, k):
    """c_k(pi_2^* M^dual - J_1(P)^dual); k = r gives the class of X."""
    return _difference_class(p, k, jet_twist(p), 6)


def chern_node_difference(p, k):
    """c_k(pi_2^* M^dual - B^dual); k = r gives the class of Y."""
    return _difference_class(p, k, node_twist(p), 2)


def canonical_class_W(p):
    """Coefficients (of theta, of c_1) in K of W^r_d(C)."""
    return Fraction(p.r + 1), Fraction(p.s - p.r - 2)
