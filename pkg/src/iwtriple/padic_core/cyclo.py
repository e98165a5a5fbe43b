"""p-power roots of unity adjoined to Q_p as formal symbols.

CycloPadic represents an element of Q_p(zeta_{p^t}) as a polynomial in zeta of
degree < phi(p^t) with PadicNumber coefficients, reduced via the cyclotomic
relation Phi_{p^t}(zeta) = sum_{k<p} zeta^{k p^(t-1)} = 0.  No floating point
approximations of roots of unity are ever used.
"""

from .padic import PadicNumber
from ..errors import DomainError


class CycloPadic:

    __slots__ = ("p", "t", "coeffs")

    def __init__(self, p, t, coeffs):
        self.p = p
        self.t = t
        deg = self.degree(p, t)
        if len(coeffs) != deg:
            raise ValueError("expected %d coefficients" % deg)
        self.coeffs = list(coeffs)

    @staticmethod
    def degree(p, t):
        return 1 if t == 0 else (p - 1) * p ** (t - 1)

    @classmethod
    def from_scalar(cls, x, t=0):
        if isinstance(x, CycloPadic):
            return x.promote(max(t, x.t))
        coeffs = [x] + [PadicNumber.zero(x.p, x.M)] * (cls.degree(x.p, t) - 1)
        return cls(x.p, t, coeffs)

    @classmethod
    def zeta(cls, p, t, M, exponent=1):
        """zeta_{p^t}^exponent as an element of Q_p(zeta_{p^t})."""
        deg = cls.degree(p, t)
        coeffs = [PadicNumber.zero(p, M) for _ in range(deg)]
        obj = cls(p, t, coeffs)
        return obj._add_monomial(exponent % (p ** t), PadicNumber.one(p, M))

    def _add_monomial(self, e, c):
        """self + c * zeta^e with cyclotomic reduction; returns a new element."""
        p, t = self.p, self.t
        out = list(self.coeffs)
        stack = [(e % (p ** t if t else 1), c)]
        deg = self.degree(p, t)
        while stack:
            e, c = stack.pop()
            if t == 0:
                out[0] = out[0] + c
                continue
            if e < deg:
                out[e] = out[e] + c
                continue
            # e = (p-1) p^(t-1) + r with 0 <= r < p^(t-1):
            # zeta^e = -sum_{k=0}^{p-2} zeta^(k p^(t-1) + r)
            r = e - deg
            for k in range(p - 1):
                stack.append((k * p ** (t - 1) + r, -c))
        res = CycloPadic(p, t, out)
        return res

    def promote(self, t):
        """Embed into Q_p(zeta_{p^t}) via zeta_{p^s} = zeta_{p^t}^(p^(t-s))."""
        if t == self.t:
            return self
        if t < self.t:
            raise DomainError("cannot demote cyclotomic level")
        p = self.p
        M = self._prec()
        deg = self.degree(p, t)
        out = CycloPadic(p, t, [PadicNumber.zero(p, M)] * deg)
        step = p ** (t - self.t)
        for e, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out._add_monomial(e * step, c)
        return out

    def _prec(self):
        return min(c.M for c in self.coeffs)

    def _pair(self, other):
        if isinstance(other, CycloPadic):
            t = max(self.t, other.t)
            return self.promote(t), other.promote(t)
        if isinstance(other, PadicNumber):
            return self, CycloPadic.from_scalar(other, self.t)
        if isinstance(other, int):
            other = PadicNumber.from_int(other, self.p, self._prec())
            return self, CycloPadic.from_scalar(other, self.t)
        return None, None

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycloPadic(a.p, a.t, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloPadic(self.p, self.t, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        p, t = a.p, a.t
        M = min(a._prec(), b._prec())
        out = CycloPadic(p, t, [PadicNumber.zero(p, M)] * self.degree(p, t))
        for i, ci in enumerate(a.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(b.coeffs):
                if cj.is_zero():
                    continue
                out = out._add_monomial(i + j, ci * cj)
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = CycloPadic.from_scalar(
            PadicNumber.one(self.p, self._prec()), self.t)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return (a - b).is_zero()

    def __hash__(self):
        raise TypeError("CycloPadic compares modulo precision; not hashable")

    def scalar_part(self):
        """The constant coefficient; raises if the element is not scalar."""
        for c in self.coeffs[1:]:
            if not c.is_zero():
                raise DomainError("element is not in Q_p")
        return self.coeffs[0]

    def __repr__(self):
        terms = [("(%r)*z^%d" % (c, e)) for e, c in enumerate(self.coeffs)
                 if not c.is_zero()]
        body = " + ".join(terms) if terms else "0"
        return "CycloPadic[p=%d,t=%d](%s)" % (self.p, self.t, body)
