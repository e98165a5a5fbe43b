"""Truncated multi-variable Iwasawa algebras and arithmetic points.

IwasawaElement lives in O[[T_1..T_r]] / (p^M, (T_1..T_r)^d), with coefficients
stored as PadicNumber on monomials of total degree < d.  Arithmetic points send
T_i to (1+p)^{k_i} zeta_i - 1; the topological generator of 1+pZ_p is fixed as
gamma_0 = 1+p throughout (any other choice rescales T).

Tail bound used for specialization precision: an element assembled from
group-like generators (1+T)^s has implicit tail sum_{j>=d} binom(s,j) T^j; at a
point with v(T-value) = vt >= 1/(p-1) the omitted terms have valuation at least
min_{j>=d} (j*vt - v_p(j!)), which is attained within j < d + 4p since
v_p(j!) < j/(p-1) and the objective grows in j afterwards.
"""

from fractions import Fraction

from .padic import PadicNumber, plog, _vp
from .cyclo import CycloPadic
from ..errors import DomainError, PrecisionError


def _vp_fact(j, p):
    # valuation of j!
    s = 0
    q = p
    while q <= j:
        s += j // q
        q *= p
    return s


def tail_valuation(d, vt, p):
    """Lower bound for v_p of the discarded tail sum_{j>=d} binom(s,j) t^j,
    for s in Z_p and v_p(t) = vt (a Fraction, >= 1/(p-1))."""
    vt = Fraction(vt)
    best = None
    for j in range(d, d + 4 * p + 1):
        cand = j * vt - _vp_fact(j, p)
        if best is None or cand < best:
            best = cand
    return best


class IwasawaElement:

    __slots__ = ("p", "r", "d", "M", "coeffs")

    def __init__(self, p, r, d, M, coeffs=None):
        self.p = p
        self.r = r
        self.d = d
        self.M = M
        self.coeffs = {}
        if coeffs:
            for mono, c in coeffs.items():
                if sum(mono) < d and not c.is_zero():
                    self.coeffs[tuple(mono)] = c

    @classmethod
    def zero(cls, p, r, d, M):
        return cls(p, r, d, M)

    @classmethod
    def one(cls, p, r, d, M):
        return cls.constant(PadicNumber.one(p, M), r, d)

    @classmethod
    def constant(cls, c, r, d):
        x = cls(c.p, r, d, c.M)
        if not c.is_zero():
            x.coeffs[(0,) * r] = c
        return x

    @classmethod
    def variable(cls, p, i, r, d, M):
        """The variable T_i (0-based index i)."""
        x = cls(p, r, d, M)
        mono = [0] * r
        mono[i] = 1
        x.coeffs[tuple(mono)] = PadicNumber.one(p, M)
        return x

    def _coerce(self, other):
        if isinstance(other, IwasawaElement):
            if (other.p, other.r, other.d) != (self.p, self.r, self.d):
                raise DomainError("incompatible Iwasawa algebra parameters")
            return other
        if isinstance(other, PadicNumber):
            return IwasawaElement.constant(other, self.r, self.d)
        if isinstance(other, (int, Fraction)):
            c = PadicNumber.from_fraction(Fraction(other), self.p, self.M)
            return IwasawaElement.constant(c, self.r, self.d)
        return None

    def coefficient(self, mono):
        mono = tuple(mono)
        return self.coeffs.get(mono, PadicNumber.zero(self.p, self.M))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        M = min(self.M, other.M)
        out = IwasawaElement(self.p, self.r, self.d, M)
        for mono in set(self.coeffs) | set(other.coeffs):
            c = self.coefficient(mono) + other.coefficient(mono)
            c = c.with_precision(M)
            if not c.is_zero():
                out.coeffs[mono] = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = IwasawaElement(self.p, self.r, self.d, self.M)
        out.coeffs = {m: -c for m, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        M = min(self.M, other.M)
        out = IwasawaElement(self.p, self.r, self.d, M)
        acc = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                if sum(mono) >= self.d:
                    continue
                prod = c1 * c2
                if mono in acc:
                    acc[mono] = acc[mono] + prod
                else:
                    acc[mono] = prod
        for mono, c in acc.items():
            c = c.with_precision(M)
            if not c.is_zero():
                out.coeffs[mono] = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = IwasawaElement.one(self.p, self.r, self.d, self.M)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs.values())

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("IwasawaElement compares modulo precision; not hashable")

    def with_precision(self, M):
        out = IwasawaElement(self.p, self.r, self.d, min(M, self.M))
        for m, c in self.coeffs.items():
            c2 = c.with_precision(out.M)
            if not c2.is_zero():
                out.coeffs[m] = c2
        return out

    def constant_term(self):
        return self.coefficient((0,) * self.r)

    def is_unit(self):
        return self.constant_term().is_unit()

    def inverse(self):
        """Inverse modulo (p^M, T^d); requires unit constant term."""
        c0 = self.constant_term()
        if not c0.is_unit():
            raise DomainError("constant term is not a unit")
        inv0 = c0.inverse()
        # x = c0 (1 - y) with y in (T) + small; invert by geometric series
        one = IwasawaElement.one(self.p, self.r, self.d, self.M)
        y = one - self * inv0
        acc = one
        power = y
        # y has no constant term mod units... y's constant term is 0 exactly
        for _ in range(self.d - 1):
            acc = acc + power
            power = power * y
        return acc * inv0

    def to_json(self):
        return {
            "p": self.p, "r": self.r, "d": self.d, "M": self.M,
            "coeffs": [[list(m), c.to_json()] for m, c in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json(cls, obj):
        out = cls(obj["p"], obj["r"], obj["d"], obj["M"])
        for m, cj in obj["coeffs"]:
            out.coeffs[tuple(m)] = PadicNumber.from_json(cj)
        return out

    def __repr__(self):
        terms = []
        for m, c in sorted(self.coeffs.items()):
            mono = "*".join("T%d^%d" % (i + 1, e)
                            for i, e in enumerate(m) if e) or "1"
            terms.append("(%r)*%s" % (c, mono))
        return "Iw[r=%d,d=%d](%s)" % (self.r, self.d, " + ".join(terms) or "0")


class ArithmeticPoint:
    """Per-variable data (k_i, t_i, a_i): weight k_i and finite part
    zeta = zeta_{p^{t_i}}^{a_i}, so T_i maps to (1+p)^{k_i} zeta - 1."""

    def __init__(self, p, components):
        self.p = p
        self.components = []
        for comp in components:
            if len(comp) == 1:
                k, t, a = comp[0], 0, 0
            elif len(comp) == 2:
                k, t = comp
                a = 1 if t else 0
            else:
                k, t, a = comp
            if t and a % p ** t == 0:
                t, a = 0, 0
            self.components.append((k, t, a))

    @classmethod
    def single(cls, p, k, t=0, a=0):
        return cls(p, [(k, t, a)])

    @property
    def r(self):
        return len(self.components)

    def weight(self, i=0):
        return self.components[i][0]

    def is_arithmetic(self):
        return all(k >= 2 for (k, t, a) in self.components)

    def t_value(self, i, M):
        """(1+p)^k zeta - 1 for variable i, as CycloPadic."""
        p = self.p
        k, t, a = self.components[i]
        base = PadicNumber.from_fraction(Fraction(1 + p) ** k, p, M)
        z = CycloPadic.zeta(p, t, M, a) if t else CycloPadic.from_scalar(
            PadicNumber.one(p, M))
        return z * base - 1

    def t_valuation(self, i):
        """v_p of the T_i-value, as a Fraction (None means the value is 0)."""
        p = self.p
        k, t, a = self.components[i]
        if t > 0:
            # (1+p)^k zeta - 1 = (zeta - 1) + zeta((1+p)^k - 1):
            # v(zeta-1) = 1/phi(p^t) < 1 dominates
            return Fraction(1, (p - 1) * p ** (t - 1))
        if k == 0:
            return None
        return Fraction(1 + _vp(k, p))

    def eval_group_like(self, z, i, M):
        """Value z^k * eps(z) of the group-like <z> at this point; eps sends
        1+p to zeta."""
        p = self.p
        k, t, a = self.components[i]
        zp = z if isinstance(z, PadicNumber) else \
            PadicNumber.from_fraction(Fraction(z), p, M)
        s = plog(zp) / plog(PadicNumber.from_int(1 + p, p, M + 2))
        zk = zp ** k
        if t == 0:
            return CycloPadic.from_scalar(zk)
        # eps(z) = zeta^(s mod p^t) with s = log z / log(1+p)
        e = (s.residue(t) * a) % p ** t
        return CycloPadic.zeta(p, t, zk.M, e) * zk


def binomial_series_coeffs(s, d):
    """binom(s, j) for j < d, s a PadicNumber."""
    out = [PadicNumber.one(s.p, s.M)]
    c = out[0]
    for j in range(1, d):
        c = c * (s - (j - 1)) / j
        out.append(c)
    return out


def group_like(z, i, r, d, M, p=None):
    """(1 + T_i)^s truncated, s = log z / log(1+p); specializes to z^k eps(z)."""
    if not isinstance(z, PadicNumber):
        if p is None:
            raise DomainError("prime required for non-PadicNumber input")
        z = PadicNumber.from_fraction(Fraction(z), p, M + 4)
    p = z.p
    zm1 = z - 1
    if not (zm1.is_zero() or zm1.v >= 1):
        raise DomainError("group-like elements require z in 1 + pZ_p")
    s = plog(z) / plog(PadicNumber.from_int(1 + p, p, z.M))
    coeffs = binomial_series_coeffs(s, d)
    out = IwasawaElement(p, r, d, M)
    for j, c in enumerate(coeffs):
        c = c.with_precision(M)
        if c.is_zero():
            continue
        mono = [0] * r
        mono[i] = j
        out.coeffs[tuple(mono)] = c
    return out


def specialize(x, point, require=None):
    """Evaluate an IwasawaElement at an ArithmeticPoint (one component per
    variable).  Returns a CycloPadic whose precision is min(M, tail bound).

    require: minimum output precision; PrecisionError if not achievable."""
    if isinstance(point, (list, tuple)):
        comps = []
        for pt in point:
            comps.extend(pt.components)
        point = ArithmeticPoint(x.p, comps)
    if point.r != x.r:
        raise DomainError("point has %d components, element has %d variables"
                          % (point.r, x.r))
    p = x.p
    vts = [point.t_valuation(i) for i in range(x.r)]
    vt_min = None
    for vt in vts:
        if vt is not None and (vt_min is None or vt < vt_min):
            vt_min = vt
    if vt_min is None:
        tail = x.M
    else:
        tb = tail_valuation(x.d, vt_min, p)
        tail = max(0, int(tb))  # floor of the Fraction bound
    prec = min(x.M, tail)
    if require is not None and prec < require:
        raise PrecisionError(
            "degree bound d=%d gives only precision %d at this point"
            % (x.d, prec), achievable=prec)
    tmax = max((t for (_, t, _) in point.components), default=0)
    tvals = [point.t_value(i, x.M).promote(tmax) for i in range(x.r)]
    acc = CycloPadic.from_scalar(PadicNumber.zero(p, x.M), tmax)
    for mono, c in x.coeffs.items():
        term = CycloPadic.from_scalar(c, tmax)
        for i, e in enumerate(mono):
            for _ in range(e):
                term = term * tvals[i]
        acc = acc + term
    return CycloPadic(p, acc.t, [cc.with_precision(prec) for cc in acc.coeffs])
