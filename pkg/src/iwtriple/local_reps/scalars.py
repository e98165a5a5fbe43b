"""Exact scalars for the local theory: Q(roots of unity)[sqrt(l)].

A Cyc is a Q-linear combination of monomials zeta * prod sqrt(l_i), where zeta
is a root of unity in canonical cyclotomic-basis form and the sqrt factors are
formal square roots of primes (sqrt(l)^2 = l).  All cell values of the
truncated local integrals are computed here exactly; floating point enters only
through the final high-precision complex embedding used to compare a truncated
oracle value against a closed form within its reported tail bound.

Canonical form of the root-of-unity part: a sorted tuple of components
(p, e, i) meaning zeta_{p^e}^i with e >= 1, 0 < i < phi(p^e), and p not
dividing i unless lowering e is impossible; this maps injectively into the
standard tensor-product basis of Q(zeta_n), so zero-testing is exact.
"""

from fractions import Fraction

from ..errors import DomainError


def _phi_pk(p, e):
    return (p - 1) * p ** (e - 1)


def _reduce_component(p, e, i):
    """Reduce zeta_{p^e}^i to canonical components.

    Returns a list of (component_or_None, sign) where component is (p, e', i')
    canonical and None means the trivial root of unity."""
    i %= p ** e
    # strip common p-powers
    while e > 0 and i % p == 0:
        if i == 0:
            return [(None, 1)]
        i //= p
        e -= 1
    if e == 0:
        return [(None, 1)]
    phi = _phi_pk(p, e)
    if i < phi:
        return [((p, e, i), 1)]
    # zeta^{phi + r} = -sum_{k=0}^{p-2} zeta^{k p^(e-1) + r}
    r = i - phi
    out = []
    for k in range(p - 1):
        out.extend((c, -s) for c, s in _reduce_component(p, e, k * p ** (e - 1) + r))
    return out


def _mul_components(comp1, comp2):
    """Multiply two canonical components of the same prime p.

    Returns list of (component_or_None, sign)."""
    p, e1, i1 = comp1
    _, e2, i2 = comp2
    e = max(e1, e2)
    i = (i1 * p ** (e - e1) + i2 * p ** (e - e2)) % p ** e
    return _reduce_component(p, e, i)


class Cyc:

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict {(cyc_components tuple, sqrt_primes frozenset): Fraction}
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = self.terms.get(mono, Fraction(0)) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, q):
        q = Fraction(q)
        if q == 0:
            return cls()
        return cls({((), frozenset()): q})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.rational(1)

    @classmethod
    def root_of_unity(cls, n, k=1):
        """e(k/n) = exp(2 pi i k / n)."""
        k %= n
        if n <= 0:
            raise DomainError("order must be positive")
        # split k/n into prime power parts via CRT
        parts = []
        m = n
        p = 2
        rem = m
        factors = {}
        while p * p <= rem:
            while rem % p == 0:
                factors[p] = factors.get(p, 0) + 1
                rem //= p
            p += 1
        if rem > 1:
            factors[rem] = factors.get(rem, 0) + 1
        out = cls.one()
        for p, e in factors.items():
            pe = p ** e
            # component exponent: k * (n/pe)^{-1} mod pe
            cof = n // pe
            ip = (k * pow(cof, -1, pe)) % pe
            comp_terms = _reduce_component(p, e, ip)
            factor = cls()
            for comp, sign in comp_terms:
                mono = ((), frozenset()) if comp is None else ((comp,), frozenset())
                factor.terms[mono] = factor.terms.get(mono, Fraction(0)) + sign
            factor = cls(factor.terms)
            out = out * factor
        return out

    @classmethod
    def sqrt_prime(cls, ell):
        return cls({((), frozenset([ell])): Fraction(1)})

    @classmethod
    def ell_power_half(cls, ell, half_exponent):
        """ell^(half_exponent/2) for an integer half_exponent (of either sign)."""
        q, r = divmod(half_exponent, 2)
        out = cls.rational(Fraction(ell) ** q)
        if r:
            out = out * cls.sqrt_prime(ell)
        return out

    # -- basic ring ops ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Cyc(out)

    __radd__ = __add__

    def __neg__(self):
        return Cyc({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for (cyc1, sq1), c1 in self.terms.items():
            for (cyc2, sq2), c2 in other.terms.items():
                coeff = c1 * c2
                # sqrt(l)^2 = l on the overlap
                common = sq1 & sq2
                for ell in common:
                    coeff *= ell
                sq = (sq1 | sq2) - common
                # merge cyclotomic parts prime by prime
                d1 = {comp[0]: comp for comp in cyc1}
                pieces = [({}, 1)]
                merged_primes = set()
                for comp2 in cyc2:
                    p = comp2[0]
                    merged_primes.add(p)
                    if p in d1:
                        expansion = _mul_components(d1[p], comp2)
                    else:
                        expansion = [(comp2, 1)]
                    new_pieces = []
                    for base, sgn in pieces:
                        for comp, s2 in expansion:
                            nb = dict(base)
                            if comp is not None:
                                nb[p] = comp
                            new_pieces.append((nb, sgn * s2))
                    pieces = new_pieces
                for base, sgn in pieces:
                    full = dict(base)
                    for p, comp in d1.items():
                        if p not in merged_primes:
                            full[p] = comp
                    mono = (tuple(sorted(full.values())), frozenset(sq))
                    out[mono] = out.get(mono, Fraction(0)) + coeff * sgn
        return Cyc(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = Cyc.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset((m, c) for m, c in self.terms.items()))

    def is_rational(self):
        return all(m == ((), frozenset()) for m in self.terms)

    def as_rational(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_rational():
            raise DomainError("value is not rational: %r" % self)
        return self.terms[((), frozenset())]

    def conjugate(self):
        """Complex conjugation: inverts every root of unity, fixes sqrt(l)."""
        out = {}
        for (cyc, sq), c in self.terms.items():
            new = []
            pieces = [((), 1)]
            for (p, e, i) in cyc:
                expansion = _reduce_component(p, e, p ** e - i)
                new_pieces = []
                for base, sgn in pieces:
                    for comp, s2 in expansion:
                        nb = base + ((comp,) if comp is not None else ())
                        new_pieces.append((nb, sgn * s2))
                pieces = new_pieces
            for base, sgn in pieces:
                mono = (tuple(sorted(base)), sq)
                out[mono] = out.get(mono, Fraction(0)) + c * sgn
        return Cyc(out)

    # -- division ----------------------------------------------------------

    def inv(self):
        if self.is_zero():
            raise DomainError("division by zero")
        # fast path: a single monomial -- invert the root of unity by
        # conjugation and sqrt(l) via sqrt(l)/l
        if len(self.terms) == 1:
            (cyc, sq), c = next(iter(self.terms.items()))
            out = Cyc.rational(Fraction(1) / c)
            out = out * Cyc({(cyc, frozenset()): Fraction(1)}).conjugate()
            for ell in sq:
                out = out * Cyc.sqrt_prime(ell) * Fraction(1, ell)
            return out
        # general path: solve x * self = 1 by linear algebra over the basis of
        # the (small) subfield generated by the support
        basis, mult = self._support_algebra()
        n = len(basis)
        # matrix of multiplication by self
        cols = []
        for b in basis:
            prod = self * Cyc({b: Fraction(1)})
            col = [prod.terms.get(bb, Fraction(0)) for bb in basis]
            if any(m not in basis for m in prod.terms):
                # enlarge: product left the tentative span; redo with closure
                return self._inv_with_closure()
            cols.append(col)
        one = Cyc.one()
        rhs = [one.terms.get(bb, Fraction(0)) for bb in basis]
        sol = _solve_linear(cols, rhs, n)
        if sol is None:
            raise DomainError("element is a zero divisor in the formal ring")
        return Cyc({basis[i]: sol[i] for i in range(n)})

    def _support_algebra(self):
        # tentative basis: all monomials with cyclotomic components bounded by
        # the lcm of the support levels and sqrt-sets subsets of the support
        levels = {}
        sqs = set()
        for (cyc, sq), _ in self.terms.items():
            for (p, e, i) in cyc:
                levels[p] = max(levels.get(p, 0), e)
            sqs |= sq
        # full basis of Q(zeta_n): product over p of phi(p^e) monomials
        per_prime = []
        for p, e in sorted(levels.items()):
            opts = [None]
            for ee in range(1, e + 1):
                for i in range(1, _phi_pk(p, ee)):
                    if i % p == 0:
                        continue
                    opts.append((p, ee, i))
            per_prime.append(opts)
        cycs = [()]
        for opts in per_prime:
            cycs = [base + ((o,) if o else ()) for base in cycs for o in opts]
        sq_opts = [frozenset(s) for s in _subsets(sorted(sqs))]
        basis = [(tuple(sorted(cc)), s) for cc in cycs for s in sq_opts]
        return basis, None

    def _inv_with_closure(self):
        raise DomainError("support algebra closure failure (unexpected)")

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        return other * self.inv()

    # -- numeric embedding -------------------------------------------------

    def embed(self, prec=50):
        """Complex value under zeta_n -> exp(2 pi i/n), sqrt(l) -> +sqrt(l)."""
        import mpmath
        with mpmath.workdps(prec):
            total = mpmath.mpc(0)
            for (cyc, sq), c in self.terms.items():
                val = mpmath.mpc(c.numerator) / c.denominator
                for (p, e, i) in cyc:
                    val *= mpmath.e ** (2j * mpmath.pi * i / (p ** e))
                for ell in sq:
                    val *= mpmath.sqrt(ell)
                total += val
            return total

    def abs_embed(self, prec=50):
        import mpmath
        with mpmath.workdps(prec):
            return abs(self.embed(prec))

    def __repr__(self):
        if self.is_zero():
            return "Cyc(0)"
        parts = []
        for (cyc, sq), c in sorted(self.terms.items(),
                                   key=lambda kv: (len(kv[0][0]), str(kv[0]))):
            bits = [str(c)]
            for (p, e, i) in cyc:
                bits.append("z(%d^%d)^%d" % (p, e, i))
            for ell in sorted(sq):
                bits.append("sqrt(%d)" % ell)
            parts.append("*".join(bits))
        return "Cyc(%s)" % " + ".join(parts)


def _coerce(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.rational(x)
    return None


def _subsets(items):
    out = [[]]
    for x in items:
        out += [s + [x] for s in out]
    return out


def _solve_linear(cols, rhs, n):
    """Solve A x = rhs where A's columns are cols; exact over Fraction.
    Returns None if singular."""
    # build augmented rows
    rows = [[cols[j][i] for j in range(n)] + [rhs[i]] for i in range(n)]
    piv = 0
    for col in range(n):
        sel = None
        for r in range(piv, n):
            if rows[r][col] != 0:
                sel = r
                break
        if sel is None:
            return None
        rows[piv], rows[sel] = rows[sel], rows[piv]
        pv = rows[piv][col]
        rows[piv] = [x / pv for x in rows[piv]]
        for r in range(n):
            if r != piv and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv])]
        piv += 1
        if piv == n:
            break
    if piv < n:
        return None
    return [rows[i][n] for i in range(n)]
