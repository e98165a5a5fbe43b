"""Precision-tracked elements of Q_p.

A PadicNumber stores (p, v, unit, M): the value is p^v * unit, known modulo p^M.
Precision propagates as: prec(a+b) = min(M_a, M_b), prec(a*b) = min(M_a + v_b,
M_b + v_a).  "Zero to precision M" is stored with unit = 0 and v = M.
"""

from fractions import Fraction

from ..errors import DomainError


def _vp(n, p):
    # valuation of a nonzero integer
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicNumber:

    __slots__ = ("p", "v", "unit", "M")

    def __init__(self, p, v, unit, M, _normalized=False):
        if _normalized:
            self.p, self.v, self.unit, self.M = p, v, unit, M
            return
        if M <= v or unit == 0:
            self.p, self.v, self.unit, self.M = p, M, 0, M
            return
        unit %= p ** (M - v)
        if unit == 0:
            self.p, self.v, self.unit, self.M = p, M, 0, M
            return
        shift = _vp(unit, p)
        v += shift
        if v >= M:
            self.p, self.v, self.unit, self.M = p, M, 0, M
            return
        unit = (unit // p ** shift) % p ** (M - v)
        self.p, self.v, self.unit, self.M = p, v, unit, M

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n, p, M):
        return cls(p, 0, n, M)

    @classmethod
    def from_fraction(cls, fr, p, M):
        fr = Fraction(fr)
        num, den = fr.numerator, fr.denominator
        if num == 0:
            return cls.zero(p, M)
        vden = _vp(den, p)
        den //= p ** vden
        vnum = _vp(num, p) if num else 0
        num //= p ** vnum
        v = vnum - vden
        # enough working modulus for the unit part
        mod = p ** max(M - v, 1)
        unit = (num * pow(den, -1, mod)) % mod
        return cls(p, v, unit, M)

    @classmethod
    def zero(cls, p, M):
        return cls(p, M, 0, M, _normalized=True)

    @classmethod
    def one(cls, p, M):
        return cls(p, 0, 1, M, _normalized=True)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        """Zero to the stored precision."""
        return self.unit == 0

    def is_unit(self):
        return self.unit != 0 and self.v == 0

    def valuation(self):
        # for a value that is zero to precision M this is a lower bound M
        return self.v

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.p != self.p:
                raise DomainError("mixed primes %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return PadicNumber.from_int(other, self.p, self.M)
        if isinstance(other, Fraction):
            return PadicNumber.from_fraction(other, self.p, self.M)
        return None

    def residue(self, k=None):
        """Integer representative mod p^k (k defaults to M); requires v >= 0."""
        if k is None:
            k = self.M
        k = min(k, self.M)
        if self.unit == 0:
            return 0
        if self.v < 0:
            raise DomainError("negative valuation has no integer residue")
        return (self.p ** self.v * self.unit) % self.p ** k

    def to_fraction_guess(self):
        """Exact rational p^v * unit with the stored unit representative."""
        if self.unit == 0:
            return Fraction(0)
        return Fraction(self.p) ** self.v * self.unit

    def with_precision(self, M):
        """Re-truncate to absolute precision M (may only lower it)."""
        M = min(M, self.M)
        return PadicNumber(self.p, self.v, self.unit, M)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.p
        M = min(self.M, other.M)
        if self.unit == 0 and other.unit == 0:
            return PadicNumber.zero(p, M)
        v0 = min(self.v, other.v, M)
        k = M - v0
        a = self.unit * p ** (self.v - v0) if self.unit else 0
        b = other.unit * p ** (other.v - v0) if other.unit else 0
        return PadicNumber(p, v0, (a + b) % p ** k, M)

    __radd__ = __add__

    def __neg__(self):
        if self.unit == 0:
            return self
        return PadicNumber(self.p, self.v, -self.unit, self.M)

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
        p = self.p
        M = min(self.M + other.v, other.M + self.v)
        if self.unit == 0 or other.unit == 0:
            return PadicNumber.zero(p, M)
        v = self.v + other.v
        if M <= v:
            return PadicNumber.zero(p, M)
        unit = (self.unit * other.unit) % p ** (M - v)
        return PadicNumber(p, v, unit, M)

    __rmul__ = __mul__

    def inverse(self):
        if self.unit == 0:
            raise DomainError("division by a value indistinguishable from zero "
                              "at precision %d" % self.M)
        rel = self.M - self.v
        unit = pow(self.unit, -1, self.p ** rel)
        return PadicNumber(self.p, -self.v, unit, rel - self.v)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = PadicNumber.one(self.p, self.M + abs(self.v) * (n + 1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("PadicNumber compares modulo precision; not hashable")

    def __repr__(self):
        if self.unit == 0:
            return "O(%d^%d)" % (self.p, self.M)
        return "%d^%d * %d + O(%d^%d)" % (self.p, self.v, self.unit, self.p, self.M)

    # -- serialization -----------------------------------------------------

    def to_json(self):
        digits = []
        u = self.unit
        while u:
            u, r = divmod(u, self.p)
            digits.append(r)
        return {"p": self.p, "val": self.v, "unit_digits": digits, "prec": self.M}

    @classmethod
    def from_json(cls, obj):
        unit = 0
        for d in reversed(obj["unit_digits"]):
            unit = unit * obj["p"] + d
        return cls(obj["p"], obj["val"], unit, obj["prec"])


def teichmuller(a, p, M):
    """The (p-1)-th root of unity congruent to a mod p, to precision M."""
    if p == 2:
        raise DomainError("p must be odd")
    if a % p == 0:
        raise DomainError("Teichmuller lift of a residue divisible by p")
    mod = p ** M
    x = a % mod
    while True:
        y = pow(x, p, mod)
        if y == x:
            break
        x = y
    return PadicNumber(p, 0, x, M)


def plog(x):
    """p-adic logarithm on 1 + pZ_p."""
    p, M = x.p, x.M
    t = x - 1
    if not (t.is_zero() or t.v >= 1):
        raise DomainError("p-adic log requires argument in 1 + pZ_p")
    if t.is_zero():
        return PadicNumber.zero(p, M)
    # sum_{n>=1} (-1)^(n+1) t^n / n, term valuation >= n - v_p(n)
    nmax = 1
    while nmax - _vp_bound(nmax, p) < M:
        nmax += 1
    # t^n is known mod p^(M + (n-1) v(t)); dividing by n costs v_p(n), which
    # the product/inverse precision rules account for automatically
    acc = PadicNumber.zero(p, M)
    power = t
    for n in range(1, nmax + 1):
        term = power / n
        if n % 2 == 0:
            term = -term
        acc = acc + term.with_precision(M)
        power = power * t
    return acc


def _vp_bound(n, p):
    # max p-valuation of integers <= n
    b = 0
    q = p
    while q <= n:
        b += 1
        q *= p
    return b


def psqrt(x, p=None, M=None):
    """Hensel square root of a unit square; picks the root whose unit
    representative lies in [1, p^rel / 2)."""
    if not isinstance(x, PadicNumber):
        x = PadicNumber.from_fraction(Fraction(x), p, M)
    if x.is_zero():
        return x
    if x.v % 2 != 0:
        raise DomainError("odd valuation: not a square")
    p = x.p
    rel = x.M - x.v
    u = x.unit
    r = None
    for c in range(1, p):
        if (c * c - u) % p == 0:
            r = c
            break
    if r is None:
        raise DomainError("unit part is not a quadratic residue mod %d" % p)
    k = 1
    while k < rel:
        k = min(2 * k, rel)
        mod = p ** k
        r = (r - (r * r - u) * pow(2 * r, -1, mod)) % mod
    root = r % p ** rel
    if root >= p ** rel / 2:
        root = p ** rel - root
    return PadicNumber(p, x.v // 2, root, x.M - x.v // 2)


def sqrt_onepz(x):
    """Square root in 1 + pZ_p of a square in 1 + pZ_p (the paper's
    epsilon^{1/2} convention: the root taking value in 1 + pZ_p)."""
    r = psqrt(x)
    if (r - 1).is_zero() or (r - 1).v >= 1:
        return r
    r = -r
    if not ((r - 1).is_zero() or (r - 1).v >= 1):
        raise DomainError("no square root in 1 + pZ_p")
    return r
