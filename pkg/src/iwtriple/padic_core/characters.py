"""Dirichlet characters with values embedded in O = Z_p[zeta_{(p-1)p^t}].

Values of order dividing p-1 are stored through the Teichmuller embedding as
PadicNumber units; p-power-order parts use CycloPadic.  A character knows its
modulus N p^t and exposes the unique decomposition chi = chi^{(p)} chi_{(p)}
into its prime-to-p and p-power parts.
"""

from math import gcd

from .padic import PadicNumber, teichmuller
from .cyclo import CycloPadic
from ..errors import DomainError


def kronecker_symbol(a, n):
    """Kronecker symbol (a/n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    # factor out 2s from n
    t2 = 0
    while n % 2 == 0:
        n //= 2
        t2 += 1
    if t2:
        if a % 2 == 0:
            return 0
        if t2 % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol (a/n) for odd n > 0
    result = sign
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


class DirichletCharacter:

    def __init__(self, p, M, modulus, table):
        """table: dict residue (coprime to modulus) -> CycloPadic value."""
        self.p = p
        self.M = M
        self.modulus = modulus
        self.table = dict(table)

    # -- constructors ------------------------------------------------------

    @classmethod
    def trivial(cls, p, M, modulus=1):
        one = CycloPadic.from_scalar(PadicNumber.one(p, M))
        table = {r: one for r in range(1, max(modulus, 2))
                 if gcd(r, modulus) == 1}
        if modulus == 1:
            table = {0: one, 1: one}
        return cls(p, M, modulus, table)

    @classmethod
    def teichmuller_char(cls, p, M, power=1):
        """omega^power, modulus p (trivial if power = 0 mod p-1)."""
        power %= (p - 1)
        if power == 0:
            return cls.trivial(p, M, 1)
        table = {}
        for r in range(1, p):
            w = teichmuller(r, p, M) ** power
            table[r] = CycloPadic.from_scalar(w.with_precision(M))
        return cls(p, M, p, table)

    @classmethod
    def quadratic(cls, p, M, D):
        """The Kronecker character n -> (D/n), modulus |D|."""
        modulus = abs(D)
        one = PadicNumber.one(p, M)
        table = {}
        for r in range(1, modulus + 1):
            if gcd(r, modulus) != 1:
                continue
            s = kronecker_symbol(D, r)
            table[r % modulus] = CycloPadic.from_scalar(one if s == 1 else -one)
        return cls(p, M, modulus, table)

    @classmethod
    def from_zeta_exponents(cls, p, M, modulus, t, exps):
        """Character with values zeta_{p^t}^{exps[r]}."""
        table = {r: CycloPadic.zeta(p, t, M, e) for r, e in exps.items()}
        return cls(p, M, modulus, table)

    # -- evaluation --------------------------------------------------------

    def __call__(self, n):
        n = int(n)
        if self.modulus == 1:
            return CycloPadic.from_scalar(PadicNumber.one(self.p, self.M))
        if gcd(n, self.modulus) != 1:
            return CycloPadic.from_scalar(PadicNumber.zero(self.p, self.M))
        return self.table[n % self.modulus]

    def scalar(self, n):
        """Value as a PadicNumber (requires trivial p-power-order part)."""
        return self(n).scalar_part()

    def parity(self):
        """chi(-1) as +1 or -1."""
        v = self(-1)
        one = PadicNumber.one(self.p, self.M)
        if v == CycloPadic.from_scalar(one):
            return 1
        return -1

    def is_even(self):
        return self.parity() == 1

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        modulus = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        M = min(self.M, other.M)
        table = {}
        for r in range(1, max(modulus + 1, 2)):
            if gcd(r, modulus) != 1:
                continue
            table[r % modulus] = self(r) * other(r)
        return DirichletCharacter(self.p, M, modulus, table)

    def inverse(self):
        table = {}
        for r in range(1, max(self.modulus + 1, 2)):
            if gcd(r, self.modulus) != 1:
                continue
            # the inverse value is the value at the inverse residue
            rinv = pow(r, -1, self.modulus) if self.modulus > 1 else 1
            table[r % self.modulus] = self(rinv)
        return DirichletCharacter(self.p, self.M, self.modulus, table)

    def conductor(self):
        """Smallest modulus through which the character factors."""
        best = self.modulus
        for f in _divisors(self.modulus):
            if f >= best:
                continue
            if self._factors_through(f):
                best = f
        return best

    def _factors_through(self, f):
        for r in range(1, self.modulus + 1):
            if gcd(r, self.modulus) != 1:
                continue
            if r % f == 1 % max(f, 1):
                one = CycloPadic.from_scalar(PadicNumber.one(self.p, self.M))
                if not (self(r) == one):
                    return False
        return True

    def decompose_p(self):
        """(chi^{(p)}, chi_{(p)}): the prime-to-p and p-power parts."""
        p = self.p
        n0 = self.modulus
        pt = 1
        while n0 % p == 0:
            n0 //= p
            pt *= p
        if pt == 1:
            return self, DirichletCharacter.trivial(p, self.M, 1)
        if n0 == 1:
            return DirichletCharacter.trivial(p, self.M, 1), self
        # CRT: chi_(p)(n) = chi(m), m = n mod p^t, m = 1 mod n0
        tab_p, tab_0 = {}, {}
        for r in range(1, pt + 1):
            if r % p == 0:
                continue
            m = _crt(r, pt, 1, n0)
            tab_p[r] = self(m)
        for r in range(1, n0 + 1):
            if gcd(r, n0) != 1:
                continue
            m = _crt(1, pt, r, n0)
            tab_0[r % n0] = self(m)
        return (DirichletCharacter(p, self.M, n0, tab_0),
                DirichletCharacter(p, self.M, pt, tab_p))

    def __repr__(self):
        return "DirichletCharacter(mod %d, p=%d)" % (self.modulus, self.p)


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _crt(a1, n1, a2, n2):
    m = pow(n1, -1, n2)
    return (a1 + n1 * ((a2 - a1) * m % n2)) % (n1 * n2)
