"""Characters of Q_l^x and Z_l^x with exact Cyc values, plus the standard
additive character and unit-shell Gauss integrals.

Conventions (Section 2.3.1 measure table):
  psi is the additive character of Q_l with conductor Z_l given by
  psi(x) = e(frac_l(x)), frac_l the l-adic fractional part;
  d^x u gives Z_l^x volume 1.
"""

from fractions import Fraction
from math import gcd

from .scalars import Cyc
from ..errors import DomainError


def vell(x, ell):
    """l-adic valuation of a nonzero Fraction."""
    x = Fraction(x)
    if x == 0:
        raise DomainError("valuation of zero")
    v = 0
    n = x.numerator
    d = x.denominator
    while n % ell == 0:
        n //= ell
        v += 1
    while d % ell == 0:
        d //= ell
        v -= 1
    return v


def unit_residue(x, ell, k):
    """The unit part of x modulo ell^k (x a nonzero Fraction)."""
    x = Fraction(x)
    v = vell(x, ell)
    u = x / Fraction(ell) ** v
    mod = ell ** k
    num = u.numerator % mod
    den = u.denominator % mod
    return (num * pow(den, -1, mod)) % mod


def additive_char(ell, x):
    """psi(x) = e(l-adic fractional part of x), conductor Z_l."""
    x = Fraction(x)
    if x == 0:
        return Cyc.one()
    v = vell(x, ell)
    if v >= 0:
        return Cyc.one()
    k = -v
    u = unit_residue(x, ell, k)
    return Cyc.root_of_unity(ell ** k, u)


class UnitCharacter:
    """Finite-order character of Z_l^x, stored by a value table modulo l^c."""

    def __init__(self, ell, c, table):
        self.ell = ell
        self.c = c  # values factor through (Z/l^c)^x; may exceed the conductor
        self.table = dict(table)

    @classmethod
    def trivial(cls, ell):
        return cls(ell, 0, {})

    @classmethod
    def from_values_on_generators(cls, ell, c, assignments):
        """assignments: dict {generator: Cyc value}; table built by closure."""
        mod = ell ** c
        table = {1 % mod: Cyc.one()}
        frontier = [1 % mod]
        while frontier:
            new = []
            for u in frontier:
                for g, val in assignments.items():
                    w = (u * g) % mod
                    if w not in table:
                        table[w] = table[u] * val
                        new.append(w)
            frontier = new
        expected = sum(1 for u in range(1, mod) if gcd(u, ell) == 1)
        if len(table) != expected:
            raise DomainError("generators do not generate (Z/%d)^x" % mod)
        return cls(ell, c, table)

    @classmethod
    def quadratic(cls, ell):
        """The quadratic residue character mod l (l odd)."""
        if ell == 2:
            raise DomainError("use an explicit table for l = 2")
        table = {}
        squares = {pow(a, 2, ell) for a in range(1, ell)}
        for u in range(1, ell):
            table[u] = Cyc.one() if u in squares else -Cyc.one()
        return cls(ell, 1, table)

    @classmethod
    def of_order(cls, ell, c, order):
        """A character of exact order `order` and level l^c (l odd)."""
        mod = ell ** c
        g = _primitive_root(ell, c)
        group_order = (ell - 1) * ell ** (c - 1)
        if group_order % order != 0:
            raise DomainError("no character of order %d at level %d^%d"
                              % (order, ell, c))
        val = Cyc.root_of_unity(order)
        return cls.from_values_on_generators(ell, c, {g: val})

    def __call__(self, u):
        if self.c == 0:
            return Cyc.one()
        mod = self.ell ** self.c
        if isinstance(u, Fraction):
            u = unit_residue(u, self.ell, self.c)
        u = int(u) % mod
        if gcd(u, self.ell) != 1:
            raise DomainError("argument is not a unit")
        return self.table[u]

    def conductor_exponent(self):
        """Exact conductor exponent a(chi)."""
        for cc in range(self.c + 1):
            if self._factors_mod(cc):
                return cc
        return self.c

    def _factors_mod(self, cc):
        mod_small = self.ell ** cc
        mod = self.ell ** self.c
        for u in range(1, mod):
            if gcd(u, self.ell) != 1:
                continue
            if mod_small <= 1 or u % mod_small == 1 % mod_small:
                if not (self(u) == Cyc.one()):
                    return False
        return True

    def primitive(self):
        """Re-tabulate at the exact conductor."""
        c0 = self.conductor_exponent()
        if c0 == self.c:
            return self
        mod0 = self.ell ** c0
        table = {}
        mod = self.ell ** self.c
        for u in range(1, max(mod, 2)):
            if gcd(u, self.ell) != 1:
                continue
            table.setdefault(u % mod0, self(u))
        return UnitCharacter(self.ell, c0, table)

    def __mul__(self, other):
        if not isinstance(other, UnitCharacter):
            return NotImplemented
        c = max(self.c, other.c)
        mod = self.ell ** c
        table = {}
        for u in range(1, max(mod, 2)):
            if gcd(u, self.ell) != 1:
                continue
            table[u % mod] = self(u) * other(u)
        return UnitCharacter(self.ell, c, table).primitive()

    def inv(self):
        mod = self.ell ** self.c
        table = {}
        for u in range(1, max(mod, 2)):
            if gcd(u, self.ell) != 1:
                continue
            table[u % mod] = self(pow(u, -1, mod) if mod > 1 else 1)
        return UnitCharacter(self.ell, self.c, table)

    def is_trivial(self):
        return self.conductor_exponent() == 0

    def value_at_minus_one(self):
        return self(-1) if self.c else Cyc.one()

    def __eq__(self, other):
        if not isinstance(other, UnitCharacter):
            return NotImplemented
        if self.ell != other.ell:
            return False
        c = max(self.c, other.c)
        mod = self.ell ** c
        for u in range(1, max(mod, 2)):
            if gcd(u, self.ell) != 1:
                continue
            if not (self(u) == other(u)):
                return False
        return True

    def __repr__(self):
        return "UnitCharacter(l=%d, level=%d)" % (self.ell, self.c)


def _primitive_root(ell, c):
    mod = ell ** c
    group_order = (ell - 1) * ell ** (c - 1)
    for g in range(2, mod):
        if gcd(g, ell) != 1:
            continue
        ok = True
        for q in _prime_factors(group_order):
            if pow(g, group_order // q, mod) == 1:
                ok = False
                break
        if ok:
            return g
    raise DomainError("no primitive root found")


def _prime_factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


class MultChar:
    """Character of Q_l^x: an unramified part (value at l) times a
    UnitCharacter."""

    def __init__(self, ell, at_ell, unit=None):
        self.ell = ell
        self.at_ell = at_ell if isinstance(at_ell, Cyc) else Cyc.rational(at_ell)
        self.unit = unit if unit is not None else UnitCharacter.trivial(ell)
        self._powers = {0: Cyc.one(), 1: self.at_ell}

    def _pow_at_ell(self, v):
        out = self._powers.get(v)
        if out is None:
            out = self.at_ell ** v if v >= 0 else self.at_ell.inv() ** (-v)
            self._powers[v] = out
        return out

    @classmethod
    def unramified(cls, ell, value):
        return cls(ell, value)

    @classmethod
    def abs_power_half(cls, ell, n_half):
        """|.|^(n_half/2): value at l is l^(-n_half/2)."""
        return cls(ell, Cyc.ell_power_half(ell, -n_half))

    @classmethod
    def trivial(cls, ell):
        return cls(ell, Cyc.one())

    def __call__(self, x):
        x = Fraction(x)
        if x == 0:
            return Cyc.zero()
        v = vell(x, self.ell)
        val = self._pow_at_ell(v)
        if self.unit.c:
            val = val * self.unit(unit_residue(x, self.ell, self.unit.c))
        return val

    def at_unit(self, u):
        return self.unit(u) if self.unit.c else Cyc.one()

    def conductor_exponent(self):
        return self.unit.conductor_exponent()

    def is_unramified(self):
        return self.unit.is_trivial()

    def __mul__(self, other):
        if not isinstance(other, MultChar):
            return NotImplemented
        return MultChar(self.ell, self.at_ell * other.at_ell,
                        self.unit * other.unit)

    def inv(self):
        return MultChar(self.ell, self.at_ell.inv(), self.unit.inv())

    def times_abs_power_half(self, n_half):
        return self * MultChar.abs_power_half(self.ell, n_half)

    def value_at_minus_one(self):
        return self.unit.value_at_minus_one()

    def __eq__(self, other):
        if not isinstance(other, MultChar):
            return NotImplemented
        return self.ell == other.ell and self.at_ell == other.at_ell and \
            self.unit == other.unit

    def __repr__(self):
        return "MultChar(l=%d, at_l=%r, unit=%r)" % (self.ell, self.at_ell,
                                                     self.unit)


def gauss_sum(chi, shift=None):
    """g(chi) = sum_{u mod l^c} chi(u) psi(u l^(-c)) for chi of conductor l^c;
    with `shift` = r the additive character is psi(u l^r) instead."""
    chi = chi.primitive()
    ell, c = chi.ell, chi.c
    r = -c if shift is None else shift
    mod = ell ** max(c, -r, 1)
    total = Cyc.zero()
    for u in range(1, mod):
        if gcd(u, ell) != 1:
            continue
        total = total + chi(u) * additive_char(ell, Fraction(u * ell ** r)
                                               if r >= 0 else
                                               Fraction(u, ell ** (-r)))
    return total


def unit_shell_integral(chi, r):
    """int_{Z_l^x} chi(u) psi(l^r u) d^x u with vol(Z_l^x) = 1.

    Exact evaluation by averaging over units modulo l^k,
    k = max(level(chi), -r)."""
    ell = chi.ell
    k = max(chi.c, -r, 0)
    if k == 0:
        return Cyc.one()
    mod = ell ** k
    total = Cyc.zero()
    count = 0
    for u in range(1, mod):
        if gcd(u, ell) != 1:
            continue
        count += 1
        total = total + chi(u) * additive_char(ell, Fraction(u * ell ** r)
                                               if r >= 0 else
                                               Fraction(u, ell ** (-r)))
    return total * Fraction(1, count)
