"""Local zeta integrals: Whittaker pairings, induced sections, the
intertwining operator, Rankin-Selberg integrals and trilinear integrals.

All integrals are computed as exact finite sums over valuation cells with
scalars in the cyclotomic field Cyc; truncated sums report a geometric
tail bound obtained from the measured decay of the boundary layers.

Measure conventions (Section 5.1): vol(Z_l^x, d^x y) = 1, vol(Z_l, dx) = 1,
vol(K, dk) = 1, and for F on ZN\\G

    int F dg = zeta(2)/zeta(1) int int F(a(y) nbar(x)) dx d^x y / |y|.

The compact form of the same formula used for K-integrals of functions
with left B(Z_l)-equivariance of trivial restriction is

    int_K F dk = zeta(2)/zeta(1) [ int_{Z_l} F(w0 n(z)) dz
                                   + int_{l Z_l} F(nbar(q)) dq ].
"""

from fractions import Fraction

from .scalars import Cyc
from .characters import (UnitCharacter, MultChar, additive_char, vell,
                         unit_residue)
from .ratfun import RatSeries, Factored, pairing_sum
from .reps import (LocalRep, WhittakerData, KirillovTable, gamma_gl1,
                   zeta_ell, mat_mul, mat_w, mat_tn, mat_tau, _mat)
from ..errors import DomainError, PrecisionError, UnsupportedError


def _abs_embed(x):
    """Archimedean absolute value of a Cyc scalar (float)."""
    if x.is_zero():
        return 0.0
    return float(abs(x.embed(30)))


def _mat_nbar(x):
    return (Fraction(1), Fraction(0), Fraction(x), Fraction(1))


def _mat_a(y):
    return (Fraction(y), Fraction(0), Fraction(0), Fraction(1))


def _mat_w0n(z):
    # w0 n(z) = [[0,-1],[1,z]]
    return (Fraction(0), Fraction(-1), Fraction(1), Fraction(z))


# ---------------------------------------------------------------------------
# Whittaker pairings
# ---------------------------------------------------------------------------

def whittaker_pairing(W, Wp, translate="id", n=0):
    """<rho(t)W, W'> = int W(diag(y,1) t) W'(diag(-y,1)) d^x y.

    translate: "id", "t_n" (antidiagonal [[0,l^-n],[-l^n,0]]) or "tau_c"
    (Atkin-Lehner [[0,1],[-l^n,0]]) applied to the first argument, with
    the exponent given by n.  Raises DomainError when the defining
    integral diverges."""
    if translate == "id":
        WL = W
    elif translate == "t_n":
        WL = W.translate_tn(n)
    elif translate == "tau_c":
        WL = W.translate_tau(n)
    else:
        raise DomainError("unknown translate %r" % (translate,))
    total = Cyc.zero()
    for mu, series in WL.table.entries:
        other = Wp.table.get(mu.inv())
        if other.is_zero():
            continue
        try:
            val = pairing_sum(series, other)
        except DomainError:
            raise DomainError("Whittaker pairing diverges")
        total = total + mu.value_at_minus_one() * val
    return total


# ---------------------------------------------------------------------------
# Induced sections
# ---------------------------------------------------------------------------

class InducedSection:
    """A vector in B(chi, upsilon) = Ind_B^G(chi, upsilon) determined by its
    restriction to the cells nbar(q) (v(q) >= 0) and w0 n(z) (z in Z_l).

    profile:
      "spherical"  f(k) = 1 on K (requires chi, upsilon unramified);
      "bigcell"    the ordinary section: supported on B w N(Z_l) with
                   f(w n(z)) = 1 (L:ordinarysection);
      "newform"    the new section, normalized f(1) = 1, supported on
                   nbar(q) with v(q) >= c(upsilon).
    """

    def __init__(self, ell, chi, upsilon, profile="spherical"):
        self.ell = ell
        self.chi = chi
        self.upsilon = upsilon
        self.profile = profile
        self.right = None            # optional right-translation matrix
        self.det_twist = None        # optional character of det
        if profile == "spherical":
            if not (chi.is_unramified() and upsilon.is_unramified()):
                raise DomainError("spherical section needs unramified data")

    def central_char(self):
        return self.chi * self.upsilon

    def level(self):
        """Invariance level: f is right K(l^level)-invariant."""
        ca = self.chi.conductor_exponent()
        cb = self.upsilon.conductor_exponent()
        base = max(ca, cb, 1) + (1 if (ca or cb) else 0)
        if self.right is not None:
            h = self.right
            vals = [vell(t, self.ell) for t in h if t != 0]
            det = h[0] * h[3] - h[1] * h[2]
            base += 2 * max([abs(v) for v in vals] +
                            [abs(vell(det, self.ell))])
        return base

    def _clone(self):
        out = InducedSection.__new__(InducedSection)
        out.ell = self.ell
        out.chi = self.chi
        out.upsilon = self.upsilon
        out.profile = self.profile
        out.right = self.right
        out.det_twist = self.det_twist
        return out

    def translate(self, h):
        """rho(h) f."""
        out = self._clone()
        out.right = h if out.right is None else mat_mul(out.right, h)
        return out

    def twist_det(self, sigma):
        """f x sigma: g -> f(g) sigma(det g), a vector of
        B(chi sigma, upsilon sigma)."""
        out = self._clone()
        out.chi = self.chi * sigma
        out.upsilon = self.upsilon * sigma
        out.det_twist = sigma if out.det_twist is None \
            else out.det_twist * sigma
        return out

    # -- cell values ----------------------------------------------------

    def _nbar_val(self, q):
        chi, ups = self.chi, self.upsilon
        if self.profile == "spherical":
            return Cyc.one()
        if self.profile == "bigcell":
            if q == 0 or vell(q, self.ell) >= 1:
                return Cyc.zero()
            # nbar(q) = n(1/q) diag(-1/q,-q) w n(1/q) for a unit q
            return chi.value_at_minus_one() * ups.value_at_minus_one() * \
                (ups * chi.inv())(q)
        if self.profile == "newform":
            cu = ups.conductor_exponent()
            if q == 0 or vell(q, self.ell) >= cu:
                return Cyc.one()
            return Cyc.zero()
        raise DomainError("unknown profile %r" % (self.profile,))

    def _w0n_val(self, z):
        if self.profile == "spherical":
            return Cyc.one()
        if self.profile == "bigcell":
            # w0 = -w
            return self.chi.value_at_minus_one() * \
                self.upsilon.value_at_minus_one()
        if self.profile == "newform":
            return Cyc.zero()
        raise DomainError("unknown profile %r" % (self.profile,))

    def evaluate(self, g):
        """f(g) as an exact Cyc scalar; g a 4-tuple over Q."""
        ell = self.ell
        if self.right is not None:
            g = mat_mul(g, self.right)
        a, b, c, d = (Fraction(z) for z in g)
        det = a * d - b * c
        if det == 0:
            raise DomainError("singular matrix")
        out = Cyc.one()
        if self.det_twist is not None:
            out = self.det_twist(det)
        if c == 0 or (d != 0 and vell(c, ell) >= vell(d, ell)):
            q = c / d if c != 0 else Fraction(0)
            ap = a - b * q
            core = self._nbar_val(q)
            if core.is_zero():
                return Cyc.zero()
            half = Cyc.ell_power_half(
                ell, -(vell(ap, ell) - vell(d, ell)))
            return out * self.chi(ap) * self.upsilon(d) * half * core
        z = d / c if d != 0 else Fraction(0)
        core = self._w0n_val(z)
        if core.is_zero():
            return Cyc.zero()
        aa = det / c
        half = Cyc.ell_power_half(ell, -(vell(aa, ell) - vell(c, ell)))
        return out * self.chi(aa) * self.upsilon(c) * half * core


class IntertwinedSection:
    """M*(chi, upsilon) f for f in B(chi, upsilon) (E:intertwining.l):

      M*(chi,ups,s)f = gamma(2s, chi ups^{-1})
                       int f_s(w n(x) g) dx,   f_s = f delta^s,

    evaluated at s = 0 through exact rational functions of U = l^{-2s},
    with removable singularities cancelled.  The result lies in
    B(upsilon, chi)."""

    def __init__(self, base):
        self.base = base
        self.ell = base.ell
        self.chi = base.upsilon          # output characters
        self.upsilon = base.chi
        self.right = None
        self.det_twist = None
        self._gamma = gamma_gl1(base.chi * base.upsilon.inv())
        self._rho = (base.chi * base.upsilon.inv()).at_ell \
            if (base.chi * base.upsilon.inv()).is_unramified() else None
        self._cache = {}
        self._tail_checked = False

    def central_char(self):
        return self.chi * self.upsilon

    def level(self):
        return self.base.level()

    def translate(self, h):
        out = IntertwinedSection(self.base)
        out.right = h if self.right is None else mat_mul(self.right, h)
        out.det_twist = self.det_twist
        return out

    def twist_det(self, sigma):
        out = IntertwinedSection(self.base)
        out.right = self.right
        out.chi = self.chi * sigma
        out.upsilon = self.upsilon * sigma
        out.det_twist = sigma if self.det_twist is None \
            else self.det_twist * sigma
        return out

    def _core(self, k):
        """The U-series of int f_s(w n(x) k) dx for k in GL2(Z_l),
        before the gamma normalization."""
        if k in self._cache:
            return self._cache[k]
        ell = self.ell
        J = self.base.level()
        series = RatSeries.zero()
        # ball v(x) >= -J at resolution l^J: x = t/l^J, t mod l^{2J}
        volb = Fraction(1, ell ** J)
        for t in range(ell ** (2 * J)):
            x = Fraction(t, ell ** J)
            series = series + self._cell_term(x, volb, k)
        # shells v(x) = -j, j > J: geometric with ratio rho*U, verified
        # against the next shell once per section (the ratio is the same
        # for every k)
        s1 = self._shell_sum(J + 1, k)
        if not self._tail_checked:
            s2 = self._shell_sum(J + 2, k)
            if s1.is_zero():
                if not s2.is_zero():
                    raise DomainError("intertwining tail did not stabilize")
            else:
                if self._rho is None:
                    raise DomainError("ramified tail should vanish")
                expect = s1 * RatSeries.monomial(self._rho, 1)
                if not (s2 == expect):
                    raise DomainError("intertwining tail ratio mismatch")
            self._tail_checked = True
        if not s1.is_zero():
            if self._rho is None:
                raise DomainError("ramified tail should vanish")
            # sum of shells J+1, J+2, ... = s1/(1 - rho U)
            tail = RatSeries(dict(s1.num), list(s1.den) + [(self._rho, 1)])
            series = series + tail
        self._cache[k] = series
        return series

    def _cell_term(self, x, vol, k):
        # f(w n(x) k) U^{-min(v(C), v(D))}, rows of w n(x) k
        h = mat_mul(mat_mul(mat_w(), (Fraction(1), Fraction(x),
                                      Fraction(0), Fraction(1))), k)
        val = self.base.evaluate(h)
        if val.is_zero():
            return RatSeries.zero()
        C, D = h[2], h[3]
        vs = [vell(t, self.ell) for t in (C, D) if t != 0]
        return RatSeries.monomial(val * vol, -min(vs))

    def _shell_sum(self, j, k):
        ell = self.ell
        lev = self.base.level()
        total = RatSeries.zero()
        mod = ell ** (lev + j)
        vol = Fraction(ell ** j, mod)        # additive cell volume
        for u in range(1, mod):
            if u % ell == 0:
                continue
            x = Fraction(u, ell ** j)
            total = total + self._cell_term(x, vol, k)
        return total

    def evaluate(self, g):
        ell = self.ell
        if self.right is not None:
            g = mat_mul(g, self.right)
        a, b, c, d = (Fraction(z) for z in g)
        det = a * d - b * c
        if det == 0:
            raise DomainError("singular matrix")
        pre = Cyc.one()
        if self.det_twist is not None:
            pre = self.det_twist(det)
        # Iwasawa g = [[alpha, beta],[0, delta]] k
        if c == 0 or (d != 0 and vell(c, ell) >= vell(d, ell)):
            q = c / d if c != 0 else Fraction(0)
            alpha, delta = a - b * q, d
            k = _mat_nbar(q)
        else:
            z = d / c if d != 0 else Fraction(0)
            alpha, delta = det / c, c
            k = _mat_w0n(z)
        # output section transforms by (upsilon_out, chi_out) = (base chi
        # swapped): M* f_s in B(ups |.|^{-s}, chi |.|^{s}) for base (ups,chi)
        # naming: base in B(chi_b, ups_b) -> output first char ups_b
        chi_b, ups_b = self.base.chi, self.base.upsilon
        pre = pre * ups_b(alpha) * chi_b(delta)
        pre = pre * Cyc.ell_power_half(
            ell, -(vell(alpha, ell) - vell(delta, ell)))
        # monomial U-powers from delta^s evaluate to 1 at s = 0 and cannot
        # affect pole cancellation, so no U-shift is applied here
        series = self._core(k)
        return pre * self._gamma.apply(series).evaluate(Cyc.one())


def _mat_wn(x):
    # w n(x) = [[0,1],[-1,-x]]
    return (Fraction(0), Fraction(1), Fraction(-1), Fraction(-x))


def section_pairing(f, fp):
    """<f, f'> = int_K f(k) f'(k) dk for f in B(chi,ups) and f' in
    B(chi^{-1}, ups^{-1}), exact.

    Computed through the big-cell realization
      <f, f'> = zeta(2)/zeta(1) int_{Q_l} f(w n(x)) f'(w n(x)) dx,
    a finite cell sum on the window where the profiles vary plus an exact
    geometric tail (the asymptotic shell ratio is verified)."""
    ell = f.ell
    z2, z1 = zeta_ell(ell, 2), zeta_ell(ell, 1)
    R = max(f.chi.conductor_exponent(), f.upsilon.conductor_exponent(),
            fp.chi.conductor_exponent(), fp.upsilon.conductor_exponent(), 1)
    units = _unit_reps(ell, R)
    X = max(f.level(), fp.level()) + 1
    def shell(j):
        out = Cyc.zero()
        vol = Fraction(1, ell) ** (j + R)
        for u in units:
            x = Fraction(u) * Fraction(ell) ** j
            v = f.evaluate(_mat_wn(x))
            if v.is_zero():
                continue
            w = fp.evaluate(_mat_wn(x))
            if w.is_zero():
                continue
            out = out + v * w * vol
        return out
    # stable ball v(x) >= X, volume l^{-X}
    total = f.evaluate(_mat_wn(Fraction(ell) ** X)) * \
        fp.evaluate(_mat_wn(Fraction(ell) ** X)) * Fraction(1, ell ** X)
    for j in range(-X, X):
        total = total + shell(j)
    # tail j <= -X-1: verify the geometric shell ratio and sum exactly
    s1 = shell(-X - 1)
    s2 = shell(-X - 2)
    if s1.is_zero():
        if not s2.is_zero():
            raise DomainError("section pairing tail did not stabilize")
    else:
        r = s2 * s1.inv()
        s3 = shell(-X - 3)
        if not (s3 == s2 * r):
            raise DomainError("section pairing tail is not geometric")
        one_minus = Cyc.one() - r
        if one_minus.is_zero():
            raise DomainError("divergent section pairing")
        total = total + s1 * one_minus.inv()
    return z2 * z1.inv() * total


def ordinary_section(rep):
    """The normalized ordinary section f^ord in B(upsilon, chi)
    (L:ordinarysection) for a principal series or special rep with
    ordinary character chi."""
    if rep.kind == "principal":
        chi, ups = rep.chi, rep.upsilon
    elif rep.kind == "special":
        chi = rep.sigma.times_abs_power_half(1)
        ups = rep.sigma.times_abs_power_half(-1)
    else:
        raise DomainError("no ordinary section on a supercuspidal rep")
    return InducedSection(rep.ell, ups, chi, profile="bigcell")


# ---------------------------------------------------------------------------
# Rankin-Selberg integral
# ---------------------------------------------------------------------------

def _hb_lambda_char(ell, chi):
    """lambda of the principal series B(chi, ups): with |chi(l)| = l^{-lam}
    (chi unitary times |.|^lam), lambda(pi) = |lam|."""
    import math
    a = _abs_embed(chi.at_ell)
    return abs(-math.log(a) / math.log(ell))


def _hb_lambda(rep):
    """lambda(pi) of Section 5.1 (float); -1/2 for discrete series."""
    if rep.is_discrete_series():
        return -0.5
    return _hb_lambda_char(rep.ell, rep.chi)


def check_hb(lam1, lam2, lam3):
    """(Hb): lambda(pi1) + lambda(pi2) + |lambda(pi3)| < 1/2."""
    s = lam1 + lam2 + abs(lam3)
    if s >= 0.5 - 1e-9:
        raise DomainError("(Hb) fails: lambda sum = %.3f" % s)


def _unit_reps(ell, R):
    if R == 0:
        return [1]
    mod = ell ** R
    return [u for u in range(1, mod) if u % ell != 0]


def _resolution(*tables):
    """Unit-cell resolution adequate for the given Kirillov tables."""
    R = 1
    for t in tables:
        if t is None:
            continue
        R = max(R, t.max_conductor(), -t.support_min())
    return R


def rankin_selberg_psi(W1, W2, f3, T=10):
    """Psi(W1, W2, f3) = int_{ZN\\G} W1(g) W2(J g) f3(g) dg truncated at
    valuation cells |m|, |j| <= T; returns (value, tail_bound).

    W1, W2 are WhittakerData, f3 a section object with .evaluate; the
    double integral over (y, x) is an exact finite sum over cells plus a
    geometric bound for the discarded range.  The psi-oscillations of W1
    and W2 at the open cell cancel in the product, so one representative
    per unit cell is exact."""
    ell = W1.rep.ell
    check_hb(_hb_lambda(W1.rep), _hb_lambda(W2.rep),
             _hb_lambda_char(ell, f3.chi))
    z2, z1 = zeta_ell(ell, 2), zeta_ell(ell, 1)
    R = _resolution(W1.table, W2.table, W1.w_table(), W2.w_table())
    R = max(R, f3.chi.conductor_exponent(), f3.upsilon.conductor_exponent())
    units_y = _unit_reps(ell, R)
    wy = Fraction(1, len(units_y))
    units_x = _unit_reps(ell, R)
    # x stabilization: nbar(x) with v(x) >= X0 fixes all three factors
    X0 = max(W1.rep.conductor_exponent(), W2.rep.conductor_exponent(),
             f3.level())
    total = Cyc.zero()
    layers = {}
    for my in range(-T, T + 1):
        for uy in units_y:
            y = Fraction(uy) * Fraction(ell) ** my
            wyy = wy * Fraction(ell) ** my   # d^x y / |y| cell weight
            acc = Cyc.zero()
            # stable ball v(x) >= X0, additive volume l^{-X0}
            v = W1.value_torus(y) * W2.value_torus(-y)
            if not v.is_zero():
                fv = f3.evaluate(mat_mul(_mat_a(y), _mat_nbar(
                    Fraction(ell) ** X0)))
                acc = acc + v * fv * Fraction(1, ell ** X0)
            # shells v(x) = j, -T <= j < X0, phi(l^R) unit cells each of
            # additive volume l^{-j-R}
            for j in range(-T, X0):
                volx = Fraction(1, ell) ** (j + R)
                for ux in units_x:
                    x = Fraction(ux) * Fraction(ell) ** j
                    v1 = W1.value_nbar(y, x)
                    if v1.is_zero():
                        continue
                    v2 = W2.value_nbar(-y, x)
                    if v2.is_zero():
                        continue
                    fv = f3.evaluate(mat_mul(_mat_a(y), _mat_nbar(x)))
                    if fv.is_zero():
                        continue
                    acc = acc + v1 * v2 * fv * volx
            if not acc.is_zero():
                acc = acc * wyy
                total = total + acc
                layers[abs(my)] = layers.get(abs(my), 0.0) + _abs_embed(acc)
    tail = _geometric_tail(layers, T)
    return z2 * z1.inv() * total, tail


def _geometric_tail(layers, T):
    """Bound the discarded tail from the measured decay of the last two
    boundary layers (absolute values)."""
    a = layers.get(T, 0.0)
    b = layers.get(T - 1, 0.0)
    if a == 0.0:
        return 0.0
    if b == 0.0 or a >= b:
        return float("inf")
    r = a / b
    return a * r / (1.0 - r)


# ---------------------------------------------------------------------------
# Trilinear integral
# ---------------------------------------------------------------------------

def _signed_balls(ell, m, u0, R):
    """The d^x-cell l^m (u0 + l^R Z_l) (R >= 1) or l^m Z_l^x (R = 0) as
    signed additive balls (center, depth, sign)."""
    if R >= 1:
        return [(Fraction(u0) * Fraction(ell) ** m, m + R, 1)]
    return [(Fraction(0), m, 1), (Fraction(0), m + 1, -1)]


class _SlotCells:
    """Precomputed torus cells of one Whittaker slot against kappa.

    Each cell carries the constant integrand value on the cell and the
    cell itself as signed additive balls; the d^x s measure enters later
    as (l/(l-1)) l^m times the additive ball masses."""

    def __init__(self, W, Wd, y, kappa_mat, T, R):
        ell = W.rep.ell
        self.cells = []
        units = _unit_reps(ell, R)
        for m in range(-T, T + 1):
            for u in units:
                s = Fraction(u) * Fraction(ell) ** m
                v1 = W.value(s * y, kappa_mat)
                if v1.is_zero():
                    continue
                v2 = Wd.value_torus(-s)
                if v2.is_zero():
                    continue
                balls = _signed_balls(ell, m, u, R)
                self.cells.append((v1 * v2, m, balls))


def trilinear_whittaker(triple, dual_triple, T=8, resolution=None):
    """J = int_{Z\\G} prod_i <rho(g) W_i, Wd_i> dg for three Whittaker
    pairs, computed by unfolding each matrix coefficient through E:Wpair
    and integrating over Iwasawa cells; returns (value, tail_bound).

    The g-integral runs over g = n(u) a(y) kappa with kappa in the
    compact cells {w0 n(z): z in Z_l} and {nbar(q): v(q) >= 1}; the
    u-integral produces the constraint v(s1+s2+s3) large, evaluated
    exactly on signed additive balls."""
    W1, W2, W3 = triple
    Wd1, Wd2, Wd3 = dual_triple
    ell = W1.rep.ell
    z2, z1 = zeta_ell(ell, 2), zeta_ell(ell, 1)
    if resolution is None:
        resolution = 1
        for W, Wd in zip(triple, dual_triple):
            resolution = max(resolution,
                             _resolution(W.table, Wd.table, W.w_table()))
    R = resolution
    kappas = []
    modz = ell ** R
    for t in range(modz):
        kappas.append((_mat_w0n(Fraction(t)), Fraction(1, modz)))
    for t in range(modz // ell):
        kappas.append((_mat_nbar(Fraction(ell * t)), Fraction(1, modz)))
    units_y = _unit_reps(ell, R)
    wy = Fraction(1, len(units_y))
    total = Cyc.zero()
    layers = {}
    dx_norm = Cyc.rational(Fraction(ell, ell - 1))  # d^x s = this * ds/|s|
    for kappa, volk in kappas:
        for my in range(-T, T + 1):
            for uy in units_y:
                y = Fraction(uy) * Fraction(ell) ** my
                slots = [_SlotCells(W, Wd, y, kappa, T, R)
                         for W, Wd in zip(triple, dual_triple)]
                if any(not s.cells for s in slots):
                    continue
                acc = Cyc.zero()
                for val1, m1, b1 in slots[0].cells:
                    for val2, m2, b2 in slots[1].cells:
                        v12 = val1 * val2
                        for val3, m3, b3 in slots[2].cells:
                            w = _delta_weight(ell, b1, b2, b3)
                            if w == 0:
                                continue
                            term = v12 * val3 * \
                                (Fraction(ell) ** (m1 + m2 + m3) * w)
                            acc = acc + term
                if acc.is_zero():
                    continue
                acc = acc * dx_norm ** 3 * (wy * Fraction(ell) ** my * volk)
                total = total + acc
                layers.setdefault(abs(my), 0.0)
                layers[abs(my)] += _abs_embed(acc)
    tail = _geometric_tail(layers, T)
    return z2 * z1.inv() * total, tail


def _delta_weight(ell, balls1, balls2, balls3):
    """lim_U l^U vol{(s_i) in cells : v(s1+s2+s3) >= U} as an exact
    Fraction, via inclusion-exclusion over signed balls."""
    out = Fraction(0)
    for c1, e1, s1 in balls1:
        for c2, e2, s2 in balls2:
            for c3, e3, s3 in balls3:
                emin = min(e1, e2, e3)
                c = c1 + c2 + c3
                if c != 0 and vell(c, ell) < emin:
                    continue
                out += s1 * s2 * s3 * Fraction(ell) ** \
                    (emin - e1 - e2 - e3)
    return out


def trilinear_numeric(triple, dual_triple, translates=None, T=8,
                      tol=None, section_slot=None, section_pair=None):
    """The trilinear integral J (P:IRSintegral) for three Whittaker pairs,
    optionally with a section realization in one slot.

    triple/dual_triple: WhittakerData triples; translates: optional list
    of three matrices applied slot-wise to the first triple (u-bar t_n
    style translations enter this way).  If section_slot = (i, f, fd) is
    given, slot i is understood to be realized by the section pair
    (f, fd) instead of its Whittaker pair; by uniqueness of matrix
    coefficients J rescales by <f_t, fd>/<W_t, Wd> where the translate of
    slot i is applied to both numerator and denominator.

    Returns the value; raises PrecisionError if the measured tail bound
    exceeds tol (when tol is given)."""
    triple = list(triple)
    dual_triple = list(dual_triple)
    if translates is not None:
        moved = []
        for W, h in zip(triple, translates):
            moved.append(W if h is None else _translate_whittaker(W, h))
        triple = moved
    val, tail = trilinear_whittaker(triple, dual_triple, T=T)
    scale = Cyc.one()
    if section_slot is not None:
        i, f, fd = section_slot
        h = translates[i] if translates is not None else None
        ft = f if h is None else f.translate(h)
        num = section_pairing(ft, fd)
        den = whittaker_pairing(triple[i], dual_triple[i])
        scale = num * den.inv()
    if tol is not None and not (tail <= tol):
        raise PrecisionError("trilinear tail bound %.3g exceeds %.3g"
                             % (tail, tol), achievable=tail)
    return val * scale, tail


def _translate_whittaker(W, h):
    """rho(h) W for h in a small set of standard matrices, exactly."""
    ell = W.rep.ell
    a, b, c, d = (Fraction(z) for z in h)
    # decompose h = z * [structured]; handle the generators we need:
    # t_n, tau_n, n(x), diag(l^e, 1), and products thereof are recognized
    # by direct matching
    if c == 0 and d != 0:
        # upper triangular: h = d * diag(a/d, 1) n(b/a) ... act exactly
        z = d
        y0 = a / d
        x0 = b / a
        out = W
        if x0 != 0:
            out = out.translate_n(x0)
        e = vell(y0, ell)
        u0 = y0 / Fraction(ell) ** e
        if u0 != 1:
            out = WhittakerData(out.rep, out.table.unit_dilate(
                int(unit_residue(u0, ell, max(1, out.table.max_conductor()
                                              or 1)))), role="translate")
        if e:
            out = out.translate_diag(e)
        if z != 1:
            out = out.scale(W.rep.central_char()(z))
        return out
    if a == 0 and d == 0:
        # antidiagonal [[0, b],[c, 0]] = b * [[0,1],[c/b,0]]
        z = b
        w_arg = -c / b          # [[0,1],[-m,0]] with m = -c/b
        e = vell(w_arg, ell)
        u0 = w_arg / Fraction(ell) ** e
        out = WhittakerData(W.rep, W.w_table(), role="translate")
        # rho(w diag(m,1)): w_table shifted by -e and unit-dilated
        tab = out.table
        if u0 != 1:
            tab = tab.unit_dilate(int(unit_residue(
                u0, ell, max(1, tab.max_conductor() or 1))))
        tab = tab.shift(-e)
        out = WhittakerData(W.rep, tab, role="translate")
        if z != 1:
            out = out.scale(W.rep.central_char()(z))
        return out
    raise UnsupportedError("translate matrix not in the supported set")
