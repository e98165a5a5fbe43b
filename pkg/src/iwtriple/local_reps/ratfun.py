"""Rational functions of t = l^(-s) with exact Cyc coefficients.

A RatSeries is a Laurent polynomial numerator together with a denominator
kept in factored form prod_i (1 - alpha_i t)^(k_i), alpha_i in Cyc.  This
shape is closed under sum and product, supports exact Taylor coefficients,
evaluation with pole-zero cancellation, the substitutions t -> c*t and
t -> 1/t, and exact tail sums of coefficient sequences via partial
fractions.  All L-factors, gamma-factors and Kirillov generating series
in this package are RatSeries or Factored objects.
"""

from fractions import Fraction

from .scalars import Cyc
from ..errors import DomainError


def _as_cyc(x):
    if isinstance(x, Cyc):
        return x
    return Cyc.rational(Fraction(x))


def _poly_mul(a, b):
    out = {}
    for i, ci in a.items():
        if ci.is_zero():
            continue
        for j, cj in b.items():
            k = i + j
            v = ci * cj
            if k in out:
                out[k] = out[k] + v
            else:
                out[k] = v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _poly_add(a, b):
    out = dict(a)
    for k, v in b.items():
        if k in out:
            out[k] = out[k] + v
        else:
            out[k] = v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _poly_scale(a, c):
    if c.is_zero():
        return {}
    return {k: v * c for k, v in a.items()}


def _poly_eval(a, c):
    # c must be nonzero if negative exponents occur
    total = Cyc.zero()
    cinv = None
    for k, v in a.items():
        if k >= 0:
            total = total + v * (c ** k)
        else:
            if cinv is None:
                cinv = c.inv()
            total = total + v * (cinv ** (-k))
    return total


def _linear_factor(alpha):
    # the polynomial 1 - alpha*t
    return {0: Cyc.one(), 1: -alpha}


def _poly_divide_linear(a, alpha):
    """Divide the Laurent polynomial a by (1 - alpha*t); the division must
    be exact (a(1/alpha) = 0)."""
    if not a:
        return {}
    lo = min(a.keys())
    hi = max(a.keys())
    # a = (1 - alpha t) * q ; q_k = a_k + alpha * q_{k-1}
    q = {}
    prev = Cyc.zero()
    for k in range(lo, hi + 1):
        ck = a.get(k, Cyc.zero()) + alpha * prev
        if not ck.is_zero():
            q[k] = ck
        prev = ck
    if not prev.is_zero():
        raise DomainError("inexact division by linear factor")
    return q


class RatSeries:
    """num(t) / prod (1 - alpha_i t)^(k_i) with num a Laurent polynomial."""

    def __init__(self, num, den=()):
        self.num = {k: _as_cyc(v) for k, v in dict(num).items()
                    if not _as_cyc(v).is_zero()}
        merged = []
        for alpha, mult in den:
            alpha = _as_cyc(alpha)
            if mult == 0 or alpha.is_zero():
                continue
            for i, (b, m) in enumerate(merged):
                if b == alpha:
                    merged[i] = (b, m + mult)
                    break
            else:
                merged.append((alpha, mult))
        self.den = [(a, m) for a, m in merged if m > 0]
        if any(m < 0 for _, m in merged):
            raise DomainError("negative denominator multiplicity")
        self._denpoly = None
        self._coeffs = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({0: Cyc.one()})

    @classmethod
    def monomial(cls, coef, power=0):
        return cls({power: coef})

    @classmethod
    def geometric(cls, alpha):
        """1/(1 - alpha t) = sum_m alpha^m t^m."""
        return cls({0: Cyc.one()}, [(alpha, 1)])

    # -- basic structure ----------------------------------------------

    def den_poly(self):
        if self._denpoly is None:
            p = {0: Cyc.one()}
            for alpha, mult in self.den:
                f = _linear_factor(alpha)
                for _ in range(mult):
                    p = _poly_mul(p, f)
            self._denpoly = p
        return self._denpoly

    def is_zero(self):
        return not self.num

    def support_min(self):
        """Smallest exponent with a (possibly) nonzero coefficient."""
        if not self.num:
            return 0
        return min(self.num.keys())

    def num_degree(self):
        if not self.num:
            return 0
        return max(self.num.keys())

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            other = RatSeries({0: _as_cyc(other)})
        if not isinstance(other, RatSeries):
            return NotImplemented
        # common denominator: for each root take the max multiplicity
        common = []
        for alpha, m in self.den:
            common.append([alpha, m])
        for alpha, m in other.den:
            for item in common:
                if item[0] == alpha:
                    item[1] = max(item[1], m)
                    break
            else:
                common.append([alpha, m])
        a = dict(self.num)
        for alpha, m in common:
            have = next((k for b, k in self.den if b == alpha), 0)
            for _ in range(m - have):
                a = _poly_mul(a, _linear_factor(alpha))
        b = dict(other.num)
        for alpha, m in common:
            have = next((k for c, k in other.den if c == alpha), 0)
            for _ in range(m - have):
                b = _poly_mul(b, _linear_factor(alpha))
        return RatSeries(_poly_add(a, b), [(a0, m) for a0, m in common])

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RatSeries({k: -v for k, v in self.num.items()}, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            other = RatSeries({0: _as_cyc(other)})
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return (self.__neg__()).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return RatSeries(_poly_scale(self.num, _as_cyc(other)), self.den)
        if isinstance(other, RatSeries):
            return RatSeries(_poly_mul(self.num, other.num),
                             list(self.den) + list(other.den))
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def shift(self, k):
        """Multiply by t^k (k may be negative)."""
        return RatSeries({e + k: v for e, v in self.num.items()}, self.den)

    def scale_var(self, c):
        """Substitute t -> c*t."""
        c = _as_cyc(c)
        num = {}
        cinv = None
        for e, v in self.num.items():
            if e >= 0:
                num[e] = v * c ** e
            else:
                if cinv is None:
                    cinv = c.inv()
                num[e] = v * cinv ** (-e)
        return RatSeries(num, [(a * c, m) for a, m in self.den])

    def invert_variable(self):
        """Substitute t -> 1/t, returning again a RatSeries.

        1/(1 - alpha/t)^k = t^k (-alpha)^(-k) / (1 - t/alpha)^k, so each
        denominator root alpha must be invertible in Cyc.
        """
        num = {-e: v for e, v in self.num.items()}
        den = []
        shift = 0
        scale = Cyc.one()
        for alpha, m in self.den:
            den.append((alpha.inv(), m))
            shift += m
            scale = scale * (-alpha).inv() ** m
        out = RatSeries(num, den)
        return out.shift(shift) * scale

    # -- coefficients ---------------------------------------------------

    def coefficient(self, m):
        lo = self.support_min()
        if m < lo:
            return Cyc.zero()
        coeffs = self._coeffs
        if coeffs is None or len(coeffs) <= m - lo:
            d = self.den_poly()
            dmax = max(d.keys())
            n = m - lo + 1
            out = []
            for k in range(lo, lo + n):
                c = self.num.get(k, Cyc.zero())
                for i in range(1, min(dmax, k - lo) + 1):
                    di = d.get(i)
                    if di is not None:
                        c = c - di * out[k - lo - i]
                out.append(c)
            self._coeffs = out
            coeffs = out
        return coeffs[m - lo]

    def coefficients(self, lo, hi):
        return [self.coefficient(m) for m in range(lo, hi + 1)]

    # -- evaluation ------------------------------------------------------

    def evaluate(self, c):
        """Exact value at t = c, cancelling removable pole factors."""
        c = _as_cyc(c)
        num = dict(self.num)
        denval = Cyc.one()
        for alpha, mult in self.den:
            fval = Cyc.one() - alpha * c
            if fval.is_zero():
                for _ in range(mult):
                    # removable only if the numerator vanishes at c too
                    if not _poly_eval(num, c).is_zero():
                        raise DomainError("pole at evaluation point")
                    num = _poly_divide_linear(num, alpha)
            else:
                denval = denval * fval ** mult
        return _poly_eval(num, c) * denval.inv()

    def sum_all(self):
        """Analytic continuation of sum_m coeff_m, i.e. the value at t=1."""
        return self.evaluate(Cyc.one())

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            other = RatSeries({0: _as_cyc(other)})
        if not isinstance(other, RatSeries):
            return NotImplemented
        a = _poly_mul(self.num, other.den_poly())
        b = _poly_mul(other.num, self.den_poly())
        diff = _poly_add(a, _poly_scale(b, -Cyc.one()))
        return not diff

    # -- partial fractions ----------------------------------------------

    def closed_form(self):
        """Write the coefficient sequence in closed form.

        Returns (shift, poly, terms) such that for every m,
          coeff(m) = poly.get(m, 0)
                     + sum over (alpha, j, c) in terms of
                       c * binom(m - shift + j - 1, j - 1) * alpha^(m - shift)
        where the binomial terms contribute only for m >= shift.
        """
        shift = self.support_min()
        num = {e - shift: v for e, v in self.num.items()}  # ordinary poly
        den = self.den
        if not den:
            return shift, {e + shift: v for e, v in num.items()}, []
        denp = self.den_poly()
        ddeg = max(denp.keys())
        # polynomial division: num = q * denp + r with deg r < ddeg
        q = {}
        rem = dict(num)
        lead = denp[ddeg]
        lead_inv = lead.inv()
        while rem and max(rem.keys()) >= ddeg:
            e = max(rem.keys())
            c = rem[e] * lead_inv
            q[e - ddeg] = c
            for i, di in denp.items():
                k = e - ddeg + i
                v = rem.get(k, Cyc.zero()) - c * di
                if v.is_zero():
                    rem.pop(k, None)
                else:
                    rem[k] = v
        terms = []
        for idx, (alpha, k) in enumerate(den):
            # Taylor expansion of rem / prod_{other}(1 - beta t)^m at t=1/alpha
            u = alpha.inv()
            series = _taylor_shift(rem, u, k)          # rem(u+h) to order k-1
            rest = {0: Cyc.one()}
            for jdx, (beta, m) in enumerate(den):
                if jdx == idx:
                    continue
                f = _taylor_shift(_linear_factor(beta), u, k)
                for _ in range(m):
                    rest = _series_mul(rest, f, k)
            rest_inv = _series_inv(rest, k)
            g = _series_mul(series, rest_inv, k)       # b_r coefficients
            malpha_k = (-alpha) ** k
            malpha_k_inv = malpha_k.inv()
            for j in range(1, k + 1):
                r = k - j
                br = g.get(r, Cyc.zero())
                if br.is_zero():
                    continue
                coef = br * malpha_k_inv * ((-alpha) ** j)
                terms.append((alpha, j, coef))
        poly = {e + shift: v for e, v in q.items()}
        return shift, poly, terms


def _taylor_shift(poly, u, order):
    """Coefficients of poly(u + h) in h, up to h^(order-1)."""
    out = {}
    for e, v in poly.items():
        if e < 0:
            raise DomainError("negative exponent in taylor shift")
        # (u + h)^e expanded
        for r in range(0, min(e, order - 1) + 1):
            # binom(e, r) u^(e-r) h^r
            coef = Cyc.rational(_binom(e, r)) * (u ** (e - r))
            out[r] = out.get(r, Cyc.zero()) + v * coef
    return {k: v for k, v in out.items() if not v.is_zero()}


def _series_mul(a, b, order):
    out = {}
    for i, ci in a.items():
        if i >= order:
            continue
        for j, cj in b.items():
            if i + j >= order:
                continue
            out[i + j] = out.get(i + j, Cyc.zero()) + ci * cj
    return out


def _series_inv(a, order):
    c0 = a.get(0, Cyc.zero())
    inv0 = c0.inv()
    out = {0: inv0}
    for k in range(1, order):
        s = Cyc.zero()
        for i in range(1, k + 1):
            ai = a.get(i)
            if ai is not None:
                s = s + ai * out.get(k - i, Cyc.zero())
        out[k] = -inv0 * s
    return out


def _binom(n, r):
    out = Fraction(1)
    for i in range(r):
        out *= Fraction(n - i, i + 1)
    return out


_STIRLING2 = {}


def _stirling2(n, k):
    if (n, k) in _STIRLING2:
        return _STIRLING2[(n, k)]
    if n == k:
        v = 1
    elif k == 0 or k > n:
        v = 0
    else:
        v = k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)
    _STIRLING2[(n, k)] = v
    return v


def _sum_power_geometric(e, gamma):
    """sum_{m >= 0} m^e gamma^m, by analytic continuation."""
    one_minus = Cyc.one() - gamma
    if one_minus.is_zero():
        raise DomainError("divergent series: ratio 1 at t = 1")
    inv = one_minus.inv()
    if e == 0:
        return inv
    total = Cyc.zero()
    fact = 1
    gpow = Cyc.one()
    for j in range(1, e + 1):
        fact *= j
        gpow = gpow * gamma
        s2 = _stirling2(e, j)
        if s2:
            total = total + Cyc.rational(Fraction(s2 * fact)) * gpow * \
                inv ** (j + 1)
    return total


def _binom_poly(offset, j):
    """Coefficients in m of binom(m + offset + j - 1, j - 1) as a dict
    {power: Fraction} (a polynomial of degree j - 1 in m)."""
    # product over i = 1..j-1 of (m + offset + j - i) / (j - 1)!
    poly = {0: Fraction(1)}
    for i in range(1, j):
        const = Fraction(offset + j - i)
        new = {}
        for e, c in poly.items():
            new[e + 1] = new.get(e + 1, Fraction(0)) + c
            new[e] = new.get(e, Fraction(0)) + c * const
        poly = new
    denom = Fraction(1)
    for i in range(1, j):
        denom *= i
    return {e: c / denom for e, c in poly.items()}


def pairing_sum(A, B):
    """Exact sum over all m of coeff_A(m) * coeff_B(m), by analytic
    continuation of the tail geometric series.

    Raises DomainError when the continued tail has a pole (divergent
    parameters)."""
    sa, pa, ta = A.closed_form()
    sb, pb, tb = B.closed_form()
    lo = min(A.support_min(), B.support_min())
    poly_hi = 0
    if pa:
        poly_hi = max(poly_hi, max(pa.keys()))
    if pb:
        poly_hi = max(poly_hi, max(pb.keys()))
    M = max(sa, sb, poly_hi, 0) + 1
    total = Cyc.zero()
    for m in range(lo, M):
        ca = A.coefficient(m)
        if ca.is_zero():
            continue
        cb = B.coefficient(m)
        if cb.is_zero():
            continue
        total = total + ca * cb
    # tail: for m >= M both sequences are pure binomial-geometric sums
    for alpha, j, cja in ta:
        for beta, k, ckb in tb:
            gamma = alpha * beta
            coefpoly = {}
            paj = _binom_poly(-sa, j)
            pbk = _binom_poly(-sb, k)
            for e1, c1 in paj.items():
                for e2, c2 in pbk.items():
                    coefpoly[e1 + e2] = coefpoly.get(e1 + e2, Fraction(0)) + \
                        c1 * c2
            # alpha^(m-sa) beta^(m-sb) = gamma^m * alpha^(-sa) beta^(-sb)
            gshift = (alpha.inv() ** sa if sa >= 0 else alpha ** (-sa)) * \
                (beta.inv() ** sb if sb >= 0 else beta ** (-sb))
            tail = Cyc.zero()
            for e, c in coefpoly.items():
                if c == 0:
                    continue
                full = _sum_power_geometric(e, gamma)
                prefix = Cyc.zero()
                gpow = Cyc.one()
                for m in range(0, M):
                    if m > 0:
                        gpow = gpow * gamma
                    prefix = prefix + Cyc.rational(Fraction(m ** e)) * gpow
                tail = tail + Cyc.rational(c) * (full - prefix)
            total = total + cja * ckb * gshift * tail
    return total


class Factored:
    """A monomial times a product of factors (1 - alpha t)^e with e in Z.

    Closed under multiplication and inversion; used for gamma-factors and
    epsilon-factors, which are units in the field of rational functions.
    """

    def __init__(self, coef, tpow=0, factors=()):
        self.coef = _as_cyc(coef)
        self.tpow = tpow
        merged = []
        for alpha, e in factors:
            alpha = _as_cyc(alpha)
            if e == 0 or alpha.is_zero():
                continue
            for item in merged:
                if item[0] == alpha:
                    item[1] += e
                    break
            else:
                merged.append([alpha, e])
        self.factors = [(a, e) for a, e in merged if e != 0]

    @classmethod
    def one(cls):
        return cls(Cyc.one())

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return Factored(self.coef * _as_cyc(other), self.tpow,
                            self.factors)
        if isinstance(other, Factored):
            return Factored(self.coef * other.coef, self.tpow + other.tpow,
                            list(self.factors) + list(other.factors))
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def inv(self):
        return Factored(self.coef.inv(), -self.tpow,
                        [(a, -e) for a, e in self.factors])

    def scale_var(self, c):
        c = _as_cyc(c)
        cpow = c ** self.tpow if self.tpow >= 0 else c.inv() ** (-self.tpow)
        return Factored(self.coef * cpow, self.tpow,
                        [(a * c, e) for a, e in self.factors])

    def apply(self, R):
        """Multiply a RatSeries by this factored rational function."""
        num = _poly_scale(self.num_poly(), self.coef)
        out = RatSeries(_poly_mul(R.num, num),
                        list(R.den) + [(a, -e) for a, e in self.factors
                                       if e < 0])
        return out

    def num_poly(self):
        p = {self.tpow: Cyc.one()}
        for alpha, e in self.factors:
            if e > 0:
                f = _linear_factor(alpha)
                for _ in range(e):
                    p = _poly_mul(p, f)
        return p

    def to_ratseries(self):
        num = _poly_scale(self.num_poly(), self.coef)
        den = [(a, -e) for a, e in self.factors if e < 0]
        return RatSeries(num, den)

    def evaluate(self, c):
        return self.to_ratseries().evaluate(c)

    def __eq__(self, other):
        if isinstance(other, Factored):
            other = other.to_ratseries()
        if isinstance(other, (int, Fraction, Cyc)):
            other = RatSeries({0: _as_cyc(other)})
        return self.to_ratseries() == other

    def __repr__(self):
        return "Factored(%r, t^%d, %r)" % (self.coef, self.tpow, self.factors)
