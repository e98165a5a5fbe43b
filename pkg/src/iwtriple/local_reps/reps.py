"""Local representations of GL2(Q_l) and their Whittaker/Kirillov data.

A vector W in the Whittaker model is stored through the finite Fourier
expansion of its Kirillov function over characters of Z_l^x:

    C_m(mu) = int_{Z_l^x} W(diag(l^m y, 1)) mu(y) d^x y,

one exact rational generating series sum_m C_m(mu) t^m per character mu.
Values W(diag(y,1) g) for arbitrary g in GL2(Q) are reduced to tables of
the base vector, its Weyl translate and its lower-unipotent translates by
explicit matrix identities; the Weyl translate itself is produced by the
local functional equation with gamma-factors derived from Tate's local
zeta integrals, so no induced model is ever constructed.
"""

import itertools
from fractions import Fraction
from math import gcd

from .scalars import Cyc
from .characters import (UnitCharacter, MultChar, additive_char,
                         unit_shell_integral, vell, unit_residue)
from .ratfun import RatSeries, Factored
from ..errors import DomainError, UnsupportedError


def zeta_ell(ell, k):
    """zeta_l(k) = 1/(1 - l^(-k)) as an exact Cyc scalar."""
    return Cyc.rational(Fraction(1) / (1 - Fraction(1, ell ** k)))


def enumerate_unit_characters(ell, level):
    """All characters of Z_l^x that factor through (Z/l^level)^x,
    each returned primitive."""
    out = [UnitCharacter.trivial(ell)]
    if level == 0:
        return out
    if ell == 2:
        if level == 1:
            return out
        gens = {2 ** level - 1: 2, 5: 2 ** (level - 2)} if level >= 3 \
            else {3: 2}
        # orders: -1 has order 2; 5 has order 2^(level-2)
        keys = list(gens.keys())
        choices = [[Cyc.root_of_unity(gens[g], j) for j in range(gens[g])]
                   for g in keys]
        out = []
        for vals in itertools.product(*choices):
            chi = UnitCharacter.from_values_on_generators(
                ell, level, dict(zip(keys, vals)))
            chi = chi.primitive()
            if not any(chi == c for c in out):
                out.append(chi)
        return out
    from .characters import _primitive_root
    g = _primitive_root(ell, level)
    n = (ell - 1) * ell ** (level - 1)
    out = []
    for j in range(n):
        chi = UnitCharacter.from_values_on_generators(
            ell, level, {g: Cyc.root_of_unity(n, j)})
        chi = chi.primitive()
        if not any(chi == c for c in out):
            out.append(chi)
    return out


# ---------------------------------------------------------------------------
# gamma-factors from Tate's local zeta integrals
# ---------------------------------------------------------------------------

def gamma_gl1(chi):
    """gamma(s, chi) as a Factored rational function of t = l^(-s).

    Derived from Tate's functional equation Z(1-s, chi^{-1}, fhat) =
    gamma(s, chi) Z(s, chi, f) with explicit test functions, so the result
    is convention-free: f = 1_{Z_l} in the unramified case and
    f = 1_{1 + l^a Z_l} (a = c(chi)) in the ramified case.
    """
    ell = chi.ell
    if chi.is_unramified():
        # (1 - chi(l) t) / (1 - chi(l)^{-1} l^{-1} / t)
        b_inv = chi.at_ell * Cyc.rational(ell)     # 1/beta
        return Factored(-b_inv, 1, [(chi.at_ell, 1), (b_inv, -1)])
    chi_p = MultChar(ell, chi.at_ell, chi.unit.primitive())
    c = chi_p.unit.c
    # Z(s) = 1/phi(l^c); Z(1-s) = chi(l)^c U_{-c} t^c with
    # U_{-c} = int_{Z_l^x} psi(l^{-c} u) chi_u^{-1}(u) d^x u
    u = unit_shell_integral(chi_p.unit.inv(), -c)
    phi = (ell - 1) * ell ** (c - 1)
    coef = (chi_p.at_ell ** c) * u * Cyc.rational(Fraction(phi))
    return Factored(coef, c)


def eps_gl1(chi, s_half=2):
    """epsilon(s, chi) at s = s_half/2 (s_half in {0,1,2} for s=0,1/2,1).

    For unramified chi this is 1; for ramified chi, gamma = epsilon since
    both L-factors are trivial."""
    ell = chi.ell
    if chi.is_unramified():
        return Cyc.one()
    g = gamma_gl1(chi)
    t = Cyc.ell_power_half(ell, -s_half)
    return g.evaluate(t)


def _factored_L(alphas):
    """L-factor prod (1 - alpha t)^{-1} as a Factored object."""
    return Factored(Cyc.one(), 0, [(a, -1) for a in alphas])


def _factored_L_one_minus_s(alphas, ell):
    """prod (1 - alpha l^{-1}/t)^{-1} as a Factored object
    (the L-factor at 1-s, written in the variable t = l^(-s))."""
    out = Factored.one()
    for a in alphas:
        beta = a * Cyc.rational(Fraction(1, ell))
        binv = beta.inv()
        # (1 - beta/t)^{-1} = -beta^{-1} t (1 - beta^{-1} t)^{-1}
        out = out * Factored(-binv, 1, [(binv, -1)])
    return out


class LocalRep:
    """Descriptor of an irreducible admissible generic rep of GL2(Q_l)."""

    def __init__(self, ell, kind, chi=None, upsilon=None, sigma=None,
                 c=None, omega=None, dichotomy=None, eps_half=None,
                 minimal=True):
        self.ell = ell
        self.kind = kind
        self.chi = chi
        self.upsilon = upsilon
        self.sigma = sigma
        self._c = c
        self._omega = omega
        self.dichotomy = dichotomy
        self._eps_half = eps_half
        self.minimal = minimal

    @classmethod
    def principal(cls, ell, chi, upsilon):
        ratio = chi * upsilon.inv()
        if ratio.is_unramified():
            v = ratio.at_ell
            if v == Cyc.rational(ell) or v == Cyc.rational(Fraction(1, ell)):
                raise DomainError("principal series requires chi/upsilon "
                                  "!= |.|^{+-1}")
        return cls(ell, "principal", chi=chi, upsilon=upsilon)

    @classmethod
    def special(cls, ell, chi):
        """The special representation chi|.|^{-1/2} St."""
        sigma = chi.times_abs_power_half(-1)
        return cls(ell, "special", chi=chi, sigma=sigma)

    @classmethod
    def supercuspidal(cls, ell, c, omega, dichotomy, eps_half, minimal=True):
        if c < 2:
            raise DomainError("supercuspidal conductor exponent is >= 2")
        if minimal and ((c % 2 == 0) != (dichotomy == 1)):
            raise DomainError("dichotomy type 1 iff even conductor")
        return cls(ell, "supercuspidal", c=c, omega=omega,
                   dichotomy=dichotomy, eps_half=eps_half, minimal=minimal)

    @classmethod
    def unramified(cls, ell, alpha, beta):
        """Unramified principal series with Satake parameters
        (alpha, beta) = (chi(l) l^{-1/2}, upsilon(l) l^{-1/2})."""
        h = Cyc.ell_power_half(ell, 1)
        return cls.principal(ell, MultChar.unramified(ell, alpha * h),
                             MultChar.unramified(ell, beta * h))

    # -- invariants ----------------------------------------------------

    def central_char(self):
        if self.kind == "principal":
            return self.chi * self.upsilon
        if self.kind == "special":
            return self.sigma * self.sigma
        return self._omega

    def conductor_exponent(self, twist=None):
        """c(pi x twist); twist a MultChar (unramified or not)."""
        ell = self.ell
        if self.kind == "principal":
            a = (self.chi * twist if twist else self.chi).conductor_exponent()
            b = (self.upsilon * twist if twist
                 else self.upsilon).conductor_exponent()
            return a + b
        if self.kind == "special":
            s = (self.sigma * twist if twist else self.sigma)
            cs = s.conductor_exponent()
            return max(1, 2 * cs)
        if twist is None or twist.is_unramified():
            return self._c
        if not self.minimal:
            raise UnsupportedError("twisted conductor needs minimality")
        # L:basic1(1)
        cchi = twist.conductor_exponent()
        return self._c if self._c >= 2 * cchi else 2 * cchi

    def is_discrete_series(self):
        return self.kind in ("special", "supercuspidal")

    # -- L, gamma, epsilon ---------------------------------------------

    def gamma_components(self, twist=None):
        """The GL(1) parameters whose gamma-product is gamma(s, pi x twist).

        Valid for principal series and special representations (the
        gamma-factor is insensitive to the monodromy operator)."""
        if self.kind == "principal":
            comps = [self.chi, self.upsilon]
        elif self.kind == "special":
            comps = [self.sigma.times_abs_power_half(1),
                     self.sigma.times_abs_power_half(-1)]
        else:
            raise UnsupportedError("no gamma decomposition for "
                                   "supercuspidal representations")
        if twist is not None:
            comps = [c * twist for c in comps]
        return comps

    def L_alphas(self, twist=None):
        """Inverse roots of L(s, pi x twist)."""
        if self.kind == "supercuspidal":
            if twist is None or twist.is_unramified():
                return []
            return []
        if self.kind == "special":
            s = self.sigma * twist if twist else self.sigma
            s = s.times_abs_power_half(1)
            return [s.at_ell] if s.is_unramified() else []
        return [c.at_ell for c in self.gamma_components(twist)
                if c.is_unramified()]

    def L_factor(self, twist=None):
        return RatSeries({0: Cyc.one()}, [(a, 1) for a in self.L_alphas(twist)])

    def gamma(self, twist=None):
        out = Factored.one()
        for c in self.gamma_components(twist):
            out = out * gamma_gl1(c)
        return out

    def contragredient(self):
        if self.kind == "principal":
            return LocalRep.principal(self.ell, self.chi.inv(),
                                      self.upsilon.inv())
        if self.kind == "special":
            # (sigma St)~ = sigma^{-1} St; chi-parametrization shifts back
            chi_inv = self.sigma.inv().times_abs_power_half(1)
            return LocalRep.special(self.ell, chi_inv)
        om = self._omega.inv()
        return LocalRep.supercuspidal(self.ell, self._c, om, self.dichotomy,
                                      self._eps_half, self.minimal)

    def eps_factored(self, twist=None):
        """epsilon(s, pi x twist) as a Factored monomial in t."""
        if self.kind == "supercuspidal":
            if twist is not None and not twist.is_unramified():
                raise UnsupportedError("ramified twist of supercuspidal "
                                       "epsilon is not computable here")
            if self._eps_half is None:
                raise DomainError("supercuspidal epsilon value not provided")
            val = self._eps_half
            c = self._c
            if twist is not None:
                val = val * twist.at_ell ** c
            # eps(s) = eps(1/2) * (l^{1/2} t)^{c}
            h = Cyc.ell_power_half(self.ell, c)
            return Factored(val * h, c)
        g = self.gamma(twist)
        Ls = _factored_L([a for a in self.L_alphas(twist)])
        dual = self.contragredient()
        tw_inv = twist.inv() if twist is not None else None
        L1ms = _factored_L_one_minus_s(dual.L_alphas(tw_inv), self.ell)
        return g * Ls * L1ms.inv()

    def eps_half(self, twist=None):
        """epsilon(1/2, pi x twist) as a Cyc scalar."""
        f = self.eps_factored(twist)
        if f.factors:
            raise DomainError("epsilon-factor did not reduce to a monomial")
        return f.evaluate(Cyc.ell_power_half(self.ell, -1))

    def __repr__(self):
        return "LocalRep(l=%d, %s)" % (self.ell, self.kind)


def gamma_pair(rep1, rep2, twist=None):
    """gamma(s, pi1 x pi2 x twist) for at least one of pi1, pi2
    principal or special."""
    for a, b in ((rep1, rep2), (rep2, rep1)):
        if a.kind in ("principal", "special"):
            try:
                out = Factored.one()
                for comp in a.gamma_components():
                    out = out * b.gamma(comp * twist if twist else comp)
                return out
            except UnsupportedError:
                continue
    raise UnsupportedError("gamma of a pair of supercuspidals")


def L_alphas_pair(rep1, rep2, twist=None):
    """Inverse roots of L(s, pi1 x pi2 x twist) via Weil-Deligne tensor
    parameters (principal/special only)."""
    for a, b in ((rep1, rep2), (rep2, rep1)):
        if a.kind == "principal":
            out = []
            for comp in a.gamma_components():
                out.extend(b.L_alphas(comp * twist if twist else comp))
            return out
    if rep1.kind == "special" and rep2.kind == "special":
        s = rep1.sigma * rep2.sigma
        if twist is not None:
            s = s * twist
        # Sp(2) x Sp(2) = Sp(3) + Sp(1): L(s+1, ss') L(s, ss'),
        # with each Sp(k) contributing its |.|^{(k-1)/2} shift
        out = []
        for shift in (2, 0):
            mu = s.times_abs_power_half(shift)
            if mu.is_unramified():
                out.append(mu.at_ell)
        return out
    raise UnsupportedError("pair L-factor with a supercuspidal")


def L_factor_pair(rep1, rep2, twist=None):
    return RatSeries({0: Cyc.one()},
                     [(a, 1) for a in L_alphas_pair(rep1, rep2, twist)])


# ---------------------------------------------------------------------------
# Kirillov tables
# ---------------------------------------------------------------------------

class KirillovTable:
    """Map from unit characters of Z_l^x to generating series of torus
    integrals C_m(mu); entries not present are identically zero."""

    def __init__(self, ell, entries=None):
        self.ell = ell
        self.entries = []          # list of (UnitCharacter, RatSeries)
        for mu, series in (entries or []):
            self.add(mu, series)

    def add(self, mu, series):
        if series.is_zero():
            return
        mu = mu.primitive()
        for i, (nu, old) in enumerate(self.entries):
            if nu == mu:
                self.entries[i] = (nu, old + series)
                return
        self.entries.append((mu, series))

    def get(self, mu):
        for nu, series in self.entries:
            if nu == mu:
                return series
        return RatSeries.zero()

    def chars(self):
        return [mu for mu, _ in self.entries]

    def max_conductor(self):
        out = 0
        for mu, _ in self.entries:
            out = max(out, mu.conductor_exponent())
        return out

    def support_min(self):
        if not self.entries:
            return 0
        return min(s.support_min() for _, s in self.entries)

    def value(self, m, u):
        """phi(l^m u) for a unit u (int or Fraction)."""
        total = Cyc.zero()
        for mu, series in self.entries:
            c = series.coefficient(m)
            if c.is_zero():
                continue
            if mu.c:
                mod = self.ell ** mu.c
                r = unit_residue(Fraction(u), self.ell, mu.c)
                c = c * mu(pow(r, -1, mod))
            total = total + c
        return total

    def scale(self, c):
        return KirillovTable(self.ell, [(mu, s * c) for mu, s in self.entries])

    def shift(self, k):
        return KirillovTable(self.ell,
                             [(mu, s.shift(k)) for mu, s in self.entries])

    def unit_dilate(self, u0):
        """Table of y -> phi(u0 y) for a unit u0."""
        out = []
        for mu, s in self.entries:
            out.append((mu, s * mu(pow(u0, -1, self.ell ** mu.c))
                        if mu.c else s))
        return KirillovTable(self.ell, out)

    def twist(self, sigma):
        """Table of phi * sigma for a MultChar sigma
        (C'_m(mu) = sigma(l)^m C_m(mu sigma_u))."""
        out = KirillovTable(self.ell)
        for mu, s in self.entries:
            # entry mu contributes to output char nu with nu*sigma_u = mu
            nu = (mu * sigma.unit.inv()).primitive()
            out.add(nu, s.scale_var(sigma.at_ell))
        return out

    def negate_argument(self):
        """Table of y -> phi(-y)."""
        return KirillovTable(
            self.ell, [(mu, s * mu.value_at_minus_one())
                       for mu, s in self.entries])

    def is_zero(self):
        return not self.entries


def weyl_table(rep, table):
    """Kirillov table of pi(w) phi from that of phi, w = [[0,1],[-1,0]],
    via the local functional equation
      Z(1-s, chi^{-1}omega^{-1}, pi(w)phi) = gamma(s, pi x chi) Z(s, chi, phi)
    with Z(s, chi, phi) = int phi(y) chi(y) |y|^{s-1/2} d^x y."""
    ell = rep.ell
    omega = rep.central_char()
    h = Cyc.ell_power_half(ell, 1)               # l^{1/2}
    cvar = omega.at_ell.inv() * Cyc.ell_power_half(ell, -1)
    out = KirillovTable(ell)
    for mu, series in table.entries:
        chi = MultChar(ell, Cyc.one(), mu)       # chi(l) = 1, unit part mu
        gam = rep.gamma(chi)
        G = gam.apply(series.scale_var(h))
        nu = (mu.inv() * omega.unit.inv()).primitive()
        out.add(nu, G.scale_var(cvar).invert_variable())
    return out


def psi_multiply(table, r):
    """Table of y -> psi(r y) phi(y) for r in Q (r nonzero or zero)."""
    ell = table.ell
    r = Fraction(r)
    if r == 0:
        return table
    rho = vell(r, ell)
    cap_all = max(0, -rho - table.support_min())
    u_r = unit_residue(r, ell, max(cap_all, 1))
    out = KirillovTable(ell)
    for mu, series in table.entries:
        # nu = 1 contribution: keep coefficients with m >= -rho, and the
        # m = -rho-1 coefficient weighted by U(1, -1) = -1/(l-1)
        kept = series
        for m in range(series.support_min(), -rho):
            c = series.coefficient(m)
            if c.is_zero():
                continue
            kept = kept - RatSeries.monomial(c, m)
        out.add(mu, kept)
        c1 = series.coefficient(-rho - 1)
        if not c1.is_zero():
            out.add(mu, RatSeries.monomial(
                c1 * Cyc.rational(Fraction(-1, ell - 1)), -rho - 1))
        # ramified nu contributions at m = -rho - c(nu)
        cap = max(0, -rho - series.support_min())
        for cnu in range(1, cap + 1):
            m = -rho - cnu
            cm = series.coefficient(m)
            if cm.is_zero():
                continue
            for nu in enumerate_unit_characters(ell, cnu):
                if nu.conductor_exponent() != cnu:
                    continue
                U = unit_shell_integral(nu, -cnu)
                if U.is_zero():
                    continue
                mod = ell ** cnu
                val = nu(pow(u_r % mod, -1, mod))
                out.add((mu * nu).primitive(),
                        RatSeries.monomial(cm * val * U, m))
    return out


# ---------------------------------------------------------------------------
# Whittaker data
# ---------------------------------------------------------------------------

def _mat(a, b, c, d):
    return (Fraction(a), Fraction(b), Fraction(c), Fraction(d))


def mat_mul(g, h):
    a, b, c, d = g
    e, f, i, j = h
    return (a * e + b * i, a * f + b * j, c * e + d * i, c * f + d * j)


def mat_w():
    return _mat(0, 1, -1, 0)


def mat_tn(ell, n):
    return (Fraction(0), Fraction(1, ell ** n), Fraction(-ell ** n),
            Fraction(0))


def mat_tau(ell, n):
    """tau_n = w * diag(l^n, 1) = [[0,1],[-l^n,0]]."""
    return (Fraction(0), Fraction(1), Fraction(-ell ** n), Fraction(0))


class WhittakerData:
    """A vector in the Whittaker model given by Kirillov Fourier tables."""

    def __init__(self, rep, table, role="custom"):
        self.rep = rep
        self.table = table
        self.role = role
        self._w = None
        self._mid = {}
        self._wn = {}

    def _canonical(self, z, table=None):
        """Reduce z to a representative with the same psi_multiply output on
        `table`: only v(z) and the unit part of z modulo the depth matter."""
        z = Fraction(z)
        if table is None:
            table = self.w_table()
        rho = vell(z, self.rep.ell)
        cap = max(1, -rho - table.support_min())
        u = unit_residue(z, self.rep.ell, cap)
        return Fraction(u) * Fraction(self.rep.ell) ** rho

    def _w_then_n(self, z):
        """Table of y -> W(a(y) w0 n(z)), i.e. rho(w0) rho(n(z)) W applied
        to this vector (w0 = -w), cached per canonical residue of z."""
        z = Fraction(z)
        sign = self.rep.central_char().value_at_minus_one()
        if z == 0:
            return self.w_table().scale(sign)
        z = self._canonical(z, self.table)
        if z not in self._wn:
            self._wn[z] = weyl_table(
                self.rep, psi_multiply(self.table, z)).scale(sign)
        return self._wn[z]

    # -- derived tables -------------------------------------------------

    def w_table(self):
        if self._w is None:
            self._w = weyl_table(self.rep, self.table)
        return self._w

    def mid_table(self, n):
        """Table of rho(nbar(l^n)) phi for n >= 0."""
        return self.nbar_table(Fraction(self.rep.ell) ** n)

    def nbar_table(self, x):
        """Table of rho(nbar(x)) phi = rho(w0) rho(n(-x)) rho(w0^{-1}) phi,
        cached per canonical residue of x."""
        x = self._canonical(x)
        if x not in self._mid:
            psi_w = psi_multiply(self.w_table(), -x)
            t = weyl_table(self.rep, psi_w)
            sign = self.rep.central_char().value_at_minus_one()
            self._mid[x] = t.scale(sign)
        return self._mid[x]

    def a_coeff(self, n, m, chi):
        """A_n^{(m)}(chi) = int W(diag(l^m y,1) nbar(l^n)) chi(y) d^x y."""
        c = self.rep.conductor_exponent()
        table = self.table if n >= c else self.mid_table(n)
        return table.get(chi.primitive()).coefficient(m)

    # -- values ----------------------------------------------------------

    def value_torus(self, y):
        y = Fraction(y)
        if y == 0:
            raise DomainError("torus value at 0")
        m = vell(y, self.rep.ell)
        u = y / Fraction(self.rep.ell) ** m
        return self.table.value(m, u)

    def _table_value(self, table, y, extra=None):
        y = Fraction(y)
        if y == 0:
            raise DomainError("value at 0")
        m = vell(y, self.rep.ell)
        u = y / Fraction(self.rep.ell) ** m
        v = table.value(m, u)
        if extra is not None and not v.is_zero():
            v = v * extra
        return v

    def value_nbar(self, y, x):
        """W(diag(y,1) nbar(x)) for y in Q^x, x in Q."""
        ell = self.rep.ell
        y = Fraction(y)
        x = Fraction(x)
        c = self.rep.conductor_exponent()
        if x == 0:
            return self.value_torus(y)
        n = vell(x, ell)
        if n >= c:
            return self.value_torus(y)
        if n >= 1:
            return self._table_value(self.nbar_table(x), y)
        # v(x) <= 0: nbar(x) = n(1/x) diag(1/x, x) w0 n(1/x), w0 = -w
        omega = self.rep.central_char()
        val = self._table_value(self._w_then_n(1 / x), y / x ** 2)
        if val.is_zero():
            return val
        return additive_char(ell, y / x) * omega(x) * val

    def value(self, y, g=None):
        """W(diag(y,1) g) for arbitrary g in GL2(Q) (as a 4-tuple)."""
        if g is None:
            return self.value_torus(y)
        a, b, c, d = (Fraction(z) for z in g)
        det = a * d - b * c
        if det == 0:
            raise DomainError("singular matrix")
        ell = self.rep.ell
        y = Fraction(y)
        omega = self.rep.central_char()
        if c == 0 or (d != 0 and vell(c, ell) >= vell(d, ell)):
            if c == 0:
                # g = d * n(b/d) a(a/d)
                val = self.value_torus(y * a / d)
                if val.is_zero():
                    return val
                return omega(d) * additive_char(ell, y * b / d) * val
            q = c / d
            ap = a - b * q
            # g = [[ap, b],[0, d]] * nbar(q)
            val = self.value_nbar(y * ap / d, q)
            if val.is_zero():
                return val
            return omega(d) * additive_char(ell, y * b / d) * val
        # v(c) < v(d) (including d = 0):
        # g = n(a/c) diag(det/c, c) w0 n(d/c), with v(d/c) >= 1
        val = self._table_value(self._w_then_n(d / c), y * det / c ** 2)
        if val.is_zero():
            return val
        return additive_char(ell, y * a / c) * omega(c) * val

    # -- translates (exact new tables) -----------------------------------

    def translate_tn(self, n):
        """rho(t_n) W for t_n = [[0, l^{-n}],[-l^n, 0]]."""
        ell = self.rep.ell
        om = self.rep.central_char()
        # t_n = diag(l^{-n}, l^n) w, so rho(t_n)W(a(y)) =
        # omega(l^n) (rho(w)W)(a(y l^{-2n}))
        table = self.w_table().shift(2 * n).scale(om.at_ell ** n)
        return WhittakerData(self.rep, table, role="translate")

    def translate_diag(self, e):
        """rho(diag(l^e, 1)) W."""
        return WhittakerData(self.rep, self.table.shift(-e),
                             role="translate")

    def translate_n(self, x):
        """rho(n(x)) W: multiply the Kirillov function by psi(x y)."""
        return WhittakerData(self.rep, psi_multiply(self.table, x),
                             role="translate")

    def translate_tau(self, n):
        """rho(tau_n) W for tau_n = diag(1,l^n) w = [[0,1],[-l^n,0]]."""
        om = self.rep.central_char()
        table = self.w_table().shift(n).scale(om.at_ell ** n)
        return WhittakerData(self.rep, table, role="translate")

    def twist(self, sigma):
        """W x sigma: the vector of pi x sigma with Kirillov function
        phi(y) sigma(y)."""
        if self.rep.kind == "principal":
            rep2 = LocalRep.principal(self.rep.ell, self.rep.chi * sigma,
                                      self.rep.upsilon * sigma)
        elif self.rep.kind == "special":
            chi2 = self.rep.sigma * sigma
            rep2 = LocalRep.special(self.rep.ell,
                                    chi2.times_abs_power_half(1))
        else:
            om = self.rep.central_char() * sigma * sigma
            rep2 = LocalRep.supercuspidal(
                self.rep.ell, self.rep.conductor_exponent(sigma), om,
                self.rep.dichotomy, None, self.rep.minimal)
        return WhittakerData(rep2, self.table.twist(sigma), role="twist")

    def scale(self, c):
        return WhittakerData(self.rep, self.table.scale(c), role=self.role)


def torus_whittaker(rep, role="newform"):
    """The normalized Whittaker newform, or the normalized ordinary vector
    for role = ("ordinary", chi)."""
    ell = rep.ell
    h = Cyc.ell_power_half(ell, -1)      # l^{-1/2}
    if role == "newform":
        table = KirillovTable(ell)
        triv = UnitCharacter.trivial(ell)
        if rep.kind == "principal":
            cu = rep.chi.is_unramified()
            uu = rep.upsilon.is_unramified()
            if cu and uu:
                table.add(triv, RatSeries(
                    {0: Cyc.one()}, [(rep.chi.at_ell * h, 1),
                                     (rep.upsilon.at_ell * h, 1)]))
            elif cu or uu:
                mu = rep.chi if cu else rep.upsilon
                table.add(triv, RatSeries.geometric(mu.at_ell * h))
            else:
                table.add(triv, RatSeries.one())
        elif rep.kind == "special":
            if rep.sigma.is_unramified():
                alpha = rep.sigma.at_ell * Cyc.rational(Fraction(1, ell))
                table.add(triv, RatSeries.geometric(alpha))
            else:
                table.add(triv, RatSeries.one())
        else:
            table.add(triv, RatSeries.one())
        return WhittakerData(rep, table, role="newform")
    if isinstance(role, tuple) and role[0] == "ordinary":
        chi = role[1]
        if rep.kind == "supercuspidal":
            raise DomainError("no ordinary line on a supercuspidal "
                              "representation")
        ok = False
        if rep.kind == "principal":
            ok = (chi == rep.chi) or (chi == rep.upsilon)
        elif rep.kind == "special":
            ok = (chi == rep.sigma.times_abs_power_half(1))
        if not ok:
            raise DomainError("representation has no ordinary line for chi")
        table = KirillovTable(ell)
        # W^ord(diag(y,1)) = chi|.|^{1/2}(y) 1_{Z_p}(y)
        table.add(chi.unit.inv(),
                  RatSeries.geometric(chi.at_ell * h))
        return WhittakerData(rep, table, role="ordinary")
    raise DomainError("unknown role %r" % (role,))


def unit_support_whittaker(rep, nu):
    """The vector with Kirillov function y -> nu^{-1}(y) 1_{Z_l^x}(y)
    (nu a UnitCharacter); used for the theta-dual ordinary vector."""
    table = KirillovTable(rep.ell)
    table.add(nu, RatSeries.one())
    return WhittakerData(rep, table, role="unit-support")


def kirillov_coeff(rep, n, m, chi, eps_twist_half=None):
    """Closed form of A_n^{(m)}(chi) for L(s,pi) = 1 (L:Kirillov.local).

    chi is a UnitCharacter extended to Q_l^x by chi(l) = 1.  For
    supercuspidal pi and ramified chi the value epsilon(1/2, pi x chi)
    must be supplied as eps_twist_half."""
    ell = rep.ell
    if rep.L_alphas():
        raise DomainError("L(s, pi) must be 1")
    chi = chi.primitive()
    cchi = chi.conductor_exponent()
    c = rep.conductor_exponent()
    chi_m = MultChar(ell, Cyc.one(), chi)
    if cchi == 0:
        if m != 0:
            return Cyc.zero()
        if n >= c:
            return Cyc.one()
        if n == c - 1:
            return Cyc.rational(Fraction(-1, ell)) * zeta_ell(ell, 1)
        return Cyc.zero()
    # ramified chi: need L(s, pi x chi) = 1 as well
    ctw = rep.conductor_exponent(chi_m)
    if rep.kind != "supercuspidal":
        if rep.L_alphas(chi_m):
            raise DomainError("L(s, pi x chi) must be 1")
    if n != c - cchi or m != c - ctw:
        return Cyc.zero()
    if rep.kind == "supercuspidal":
        if eps_twist_half is None:
            raise UnsupportedError("need epsilon(1/2, pi x chi)")
        eps_pi_half = rep.eps_half()
        eps_tw = eps_twist_half
        # epsilon(0, pi x chi) = eps(1/2, pi x chi) l^{c(pi x chi)/2}
        eps0 = eps_tw * Cyc.ell_power_half(ell, ctw)
    else:
        eps_pi_half = rep.eps_half()
        eps0 = rep.eps_factored(chi_m).evaluate(Cyc.one())
    eps1_chi = eps_gl1(MultChar(ell, Cyc.one(), chi), s_half=2)
    mod = ell ** cchi
    # chi(-l^{-m-c(chi)}) = chi(-1) since chi(l) = 1; |l|^{(m-c)/2} grows
    # with the twist conductor since m - c = -c(pi x chi)
    val = chi(mod - 1) * Cyc.ell_power_half(ell, c - m)
    val = val * eps_pi_half * eps1_chi * eps0.inv() * zeta_ell(ell, 1)
    return val
