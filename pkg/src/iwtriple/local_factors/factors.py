"""Closed-form local factors: Euler polynomials, local constants,
adjoint and modified Euler factors at p, archimedean Gamma factors, and
the level-raising congruence factor.

All scalars are exact Cyc values; L-factors are RatSeries in t = l^(-s)
and epsilon/gamma factors are Factored units, shared with local_reps.
"""

from fractions import Fraction

from ..errors import DomainError, UnsupportedError
from ..local_reps.scalars import Cyc
from ..local_reps.characters import MultChar, gauss_sum
from ..local_reps.ratfun import RatSeries, Factored
from ..local_reps.reps import (LocalRep, zeta_ell, gamma_gl1, eps_gl1,
                               gamma_pair, L_factor_pair, L_alphas_pair,
                               _factored_L, _factored_L_one_minus_s)


class EulerPolynomial:
    """A polynomial in X = l^(-s) with Cyc coefficients, degree <= 8.

    Euler factors of triple products have degree at most 8; the bound is
    enforced so that malformed products fail loudly.
    """

    MAX_DEGREE = 8

    def __init__(self, coeffs):
        if isinstance(coeffs, dict):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        self.coeffs = {}
        for k, v in items:
            if not isinstance(v, Cyc):
                v = Cyc.rational(Fraction(v))
            if v.is_zero():
                continue
            if k < 0:
                raise DomainError("negative exponent in Euler polynomial")
            self.coeffs[k] = v
        if self.degree() > self.MAX_DEGREE:
            raise DomainError("Euler polynomial degree exceeds %d"
                              % self.MAX_DEGREE)

    @classmethod
    def one(cls):
        return cls({0: Cyc.one()})

    @classmethod
    def linear(cls, alpha):
        """1 - alpha X."""
        if not isinstance(alpha, Cyc):
            alpha = Cyc.rational(Fraction(alpha))
        return cls({0: Cyc.one(), 1: -alpha})

    def degree(self):
        return max(self.coeffs.keys()) if self.coeffs else 0

    def coefficient(self, k):
        return self.coeffs.get(k, Cyc.zero())

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            if not isinstance(other, Cyc):
                other = Cyc.rational(Fraction(other))
            return EulerPolynomial({k: v * other
                                    for k, v in self.coeffs.items()})
        if not isinstance(other, EulerPolynomial):
            return NotImplemented
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                out[k] = out.get(k, Cyc.zero()) + a * b
        return EulerPolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        if not isinstance(x, Cyc):
            x = Cyc.rational(Fraction(x))
        total = Cyc.zero()
        for k, v in self.coeffs.items():
            total = total + v * x ** k
        return total

    def __eq__(self, other):
        if isinstance(other, EulerPolynomial):
            keys = set(self.coeffs) | set(other.coeffs)
            return all(self.coefficient(k) == other.coefficient(k)
                       for k in keys)
        return NotImplemented

    def __repr__(self):
        return "EulerPolynomial(%r)" % (self.coeffs,)


def _char_L(chi):
    if chi.is_unramified():
        return RatSeries.geometric(chi.at_ell)
    return RatSeries.one()


def _char_constants(chi):
    return {
        "L": _char_L(chi),
        "eps": gamma_gl1(chi) if not chi.is_unramified() else Factored.one(),
        "gamma": gamma_gl1(chi),
        "conductor": chi.conductor_exponent(),
    }


def _rep_constants(rep, twist):
    return {
        "L": rep.L_factor(twist),
        "eps": rep.eps_factored(twist),
        "gamma": rep.gamma(twist),
        "conductor": rep.conductor_exponent(twist),
    }


def _is_contragredient_sc_pair(r1, r2):
    if r1.kind != "supercuspidal" or r2.kind != "supercuspidal":
        return False
    if r1.ell != r2.ell or r1.c != r2.c or r1.dichotomy != r2.dichotomy:
        return False
    om = r1.central_char() * r2.central_char()
    return om.unit.c == 0 and om.at_ell == Cyc.one()


def _pair_constants(r1, r2, twist):
    ell = r1.ell
    if r1.kind == "supercuspidal" or r2.kind == "supercuspidal":
        # only the contragredient pair with trivial twist is tabulated:
        # L(s, pi x pi~) = zeta(2s) for type 1 and zeta(s) for type 2
        unram_twist = twist is None or (twist.unit.c == 0 and
                                        twist.at_ell == Cyc.one())
        if unram_twist and _is_contragredient_sc_pair(r1, r2):
            if r1.minimal and r1.c % 2 == 0:
                L = RatSeries({0: Cyc.one()},
                              [(Cyc.rational(Fraction(1, ell ** 2)), 1)])
            else:
                L = RatSeries.geometric(Cyc.rational(Fraction(1, ell)))
            return {"L": L, "eps": None, "gamma": None, "conductor": None}
        raise UnsupportedError("supercuspidal pair outside the L-table")
    if twist is None:
        twist = MultChar.trivial(ell)
    alphas = L_alphas_pair(r1, r2, twist)
    dual = L_alphas_pair(r1.contragredient(), r2.contragredient(),
                         twist.inv())
    gamma = gamma_pair(r1, r2, twist)
    eps = gamma * _factored_L(alphas) * _factored_L_one_minus_s(dual, ell)
    out = {"L": _factored_L(alphas).to_ratseries(), "eps": eps,
           "gamma": gamma, "conductor": None}
    if r1.conductor_exponent() == 0 or r2.conductor_exponent() == 0:
        out["conductor"] = 2 * max(r1.conductor_exponent(twist),
                                   r2.conductor_exponent(twist))
    return out


def local_constants(obj, twist=None):
    """L-, epsilon- and gamma-factor (with conductor exponent) of a GL(1)
    character, a LocalRep, or a pair of LocalReps.

    Returns {"L": RatSeries, "eps": Factored or Cyc, "gamma": Factored,
    "conductor": int or None}.  Entries the implemented table does not
    cover are None; unsupported combinations raise UnsupportedError.
    """
    if isinstance(obj, MultChar):
        out = _char_constants(obj
                              if twist is None else obj * twist)
        return out
    if isinstance(obj, LocalRep):
        return _rep_constants(obj, twist)
    if isinstance(obj, tuple) and len(obj) == 2:
        return _pair_constants(obj[0], obj[1], twist)
    raise UnsupportedError("no local-constant table for %r" % (obj,))


def eps_pair_value(r1, r2, twist, s_half=1):
    """eps(s, pi1 x pi2 (x) twist) evaluated at s = s_half/2."""
    eps = _pair_constants(r1, r2, twist)["eps"]
    if eps is None:
        raise UnsupportedError("pair epsilon not tabulated")
    return eps.evaluate(Cyc.ell_power_half(r1.ell, -s_half))


def euler_ad(p, alpha, n_Q, weight=None, chi_at_p=None, chi_p=None):
    """Modified adjoint Euler factor E_p(F_Q, Ad) of a p-stabilized
    newform of conductor N p^{n_Q}, U_p-eigenvalue alpha and nebentypus
    chi_Q = chi' chi_{(p)}.

    E_p = alpha^{-2 n_Q} * { (1 - alpha^{-2}chi(p)p^{k-1})
                             (1 - alpha^{-2}chi(p)p^{k-2})   n_Q = 0,
                             -1                              n_Q = 1,
                                                             chi_{(p)} = 1,
                             g(chi_{(p)}) chi_{(p)}(-1)      n_Q > 0,
                                                             chi_{(p)} != 1 }
    """
    if not isinstance(alpha, Cyc):
        alpha = Cyc.rational(Fraction(alpha))
    if n_Q == 0:
        if weight is None or chi_at_p is None:
            raise DomainError("n_Q = 0 requires weight and chi(p)")
        if not isinstance(chi_at_p, Cyc):
            chi_at_p = Cyc.rational(Fraction(chi_at_p))
        a2 = (alpha * alpha).inv() * chi_at_p
        return (Cyc.one() - a2 * Cyc.rational(Fraction(p ** (weight - 1)))) \
            * (Cyc.one() - a2 * Cyc.rational(Fraction(p ** (weight - 2))))
    if chi_p is None or chi_p.c == 0:
        if n_Q != 1:
            raise DomainError("trivial chi_{(p)} forces n_Q <= 1")
        return -(alpha * alpha).inv()
    pref = (alpha ** (2 * n_Q)).inv()
    return pref * gauss_sum(chi_p) * chi_p(-1)


def _ordinary_lines(rep):
    """(chi, ups, special) for an ordinary rep at p: the two GL(1)
    constituents, with ups the monodromy source when special."""
    if rep.kind == "principal":
        return rep.chi, rep.upsilon, False
    if rep.kind == "special":
        # pi = chi|.|^{-1/2} St: constituents chi and ups = chi|.|^{-1}
        return rep.chi, rep.chi.times_abs_power_half(-2), True
    raise DomainError("supercuspidal at p is outside the ordinary table")


def modified_euler_p(triple, which):
    """Modified p-Euler factor E_p(Fil^+ V) for an ordinary triple at p.

    triple: three LocalReps at p (principal or special); which is
    "unbalanced-f" (Fil_f = Fil^0 V_f (x) V_g (x) V_h) or "balanced"
    (Fil_bal as in the introduction).  Computed from the Galois-side
    recipe: E_p = L_p(Fil^+,0) / (eps(WD_p(Fil^+)) L_p(V/Fil^+,0))
    * 1/L_p(V,0), with arithmetic Frobenius eigenvalue
    m1 m2 m3(p) p^{-1/2} on the line (m1, m2, m3) and monodromy sending
    ups_i to chi_i on the special factors.
    """
    if which not in ("unbalanced-f", "balanced"):
        raise DomainError("unknown interpolation range %r" % (which,))
    lines = []
    chars = []
    specials = []
    p = triple[0].ell
    half = Cyc.ell_power_half(p, -1)
    for rep in triple:
        chi, ups, is_sp = _ordinary_lines(rep)
        for mu in (chi, ups):
            if mu.unit.c != 0:
                raise UnsupportedError(
                    "ramified constituent at p: use the display route")
        chars.append((chi, ups))
        specials.append(is_sp)
    for b1 in (0, 1):
        for b2 in (0, 1):
            for b3 in (0, 1):
                bits = (b1, b2, b3)
                val = half
                for i, b in enumerate(bits):
                    val = val * chars[i][b].at_ell
                lines.append((bits, val))
    eigen = {bits: val for bits, val in lines}

    def flips(bits):
        # monodromy: sum over special factors with ups, flip to chi
        out = []
        for i in range(3):
            if bits[i] == 1 and specials[i]:
                nb = list(bits)
                nb[i] = 0
                out.append(tuple(nb))
        return out

    if which == "unbalanced-f":
        fil = {b for b in eigen if b[0] == 0}
    else:
        fil = {b for b in eigen if sum(b) <= 1}

    def kernel_data(subset):
        """(kernel eigenvalue list, image eigenvalue list) of the
        monodromy on the span of subset, by lambda-graded ranks."""
        groups = {}
        for b in subset:
            for key, members in groups.items():
                if eigen[key] == eigen[b]:
                    members.append(b)
                    break
            else:
                groups[b] = [b]
        kernel = []
        image = []
        for key, members in groups.items():
            cols = sorted({t for b in members for t in flips(b)
                           if t in subset})
            rows = []
            for b in members:
                rows.append([Fraction(1 if t in flips(b) else 0)
                             for t in cols])
            rank = _rank(rows)
            kernel.extend([eigen[key]] * (len(members) - rank))
            image.extend([eigen[key]] * rank)
        return kernel, image

    def L_inv(subset):
        kernel, _ = kernel_data(subset)
        out = Cyc.one()
        for lam in kernel:
            out = out * (Cyc.one() - lam)
        return out

    def eps_wd(subset):
        _, image = kernel_data(subset)
        out = Cyc.one()
        for lam in image:
            out = out * (-lam)
        return out

    all_lines = set(eigen)
    quot = all_lines - fil
    num = L_inv(quot) * L_inv(all_lines)
    den = L_inv(fil) * eps_wd(fil)
    if den.is_zero():
        raise DomainError("vanishing Panchishkin denominator")
    return num * den.inv()


def _rank(rows):
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        pivot = next((i for i, r in enumerate(rows) if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[0], rows[pivot] = rows[pivot], rows[0]
        lead = rows[0]
        for r in rows[1:]:
            if r[col] != 0:
                f = r[col] / lead[col]
                for j in range(col, ncols):
                    r[j] -= f * lead[j]
        rows = [r for r in rows[1:] if any(r)]
        rank += 1
        col += 1
    return rank


def gamma_arch(weights, which):
    """Archimedean Gamma factor Gamma_{V}(0) and modified factor E_inf.

    Gamma_{V}(0) is returned as (coef, e) meaning coef * (2 pi)^e with
    coef an exact Fraction; E_inf is an exact Cyc fourth root of unity.
    Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s), with arguments
    {(w+1)/2, 1-k1*, k2*, k3*} in the f-unbalanced range and
    {(w+1)/2, k1*, k2*, k3*} in the balanced range, ki* = (sum k)/2 - ki.
    """
    k1, k2, k3 = weights
    total = k1 + k2 + k3
    if total % 2 != 0:
        raise DomainError("weights must have even sum")
    stars = [total // 2 - k for k in (k1, k2, k3)]
    w_half = total // 2 - 1          # (w+1)/2 with w = k1+k2+k3-3
    if which == "unbalanced-f":
        args = [w_half, 1 - stars[0], stars[1], stars[2]]
        eps_inf = Cyc.rational(Fraction((-1) ** k1))
    elif which == "balanced":
        args = [w_half, stars[0], stars[1], stars[2]]
        eps_inf = Cyc.root_of_unity(4, (1 - total) % 4)
    else:
        raise DomainError("unknown interpolation range %r" % (which,))
    if any(a < 1 for a in args):
        raise DomainError("weights outside the %s range" % which)
    coef = Fraction(1)
    e = 0
    for a in args:
        fact = 1
        for i in range(2, a):
            fact *= i
        coef *= 2 * fact
        e -= a
    return {"gamma0": (coef, e), "eps_inf": eps_inf}


def euler_level_raise(ell, pi_kind, a_ell=None, psi_val=None,
                      chi_is_trivial=False, chi_is_psi_inv=False):
    """Congruence-number ratio E_l(f) under an l-primary Dirichlet twist.

    If the twisting character is trivial or inverse to the l-part of the
    nebentypus, the Atkin-Lehner involution identifies the two Hecke
    modules and the ratio is 1 (flagged).  Otherwise:
      l not dividing N: (l-1)(a(l,f)^2 - psi_I(l)(1+l)^2)
      ramified principal series: 1 - 1/l
      unramified special: 1 - 1/l^2
      supercuspidal: 1
    """
    if chi_is_trivial or chi_is_psi_inv:
        return Cyc.one(), "atkin-lehner"
    if pi_kind == "unramified":
        if a_ell is None or psi_val is None:
            raise DomainError("the l-not-dividing-N case needs a(l,f) "
                              "and psi_I(l)")
        if not isinstance(a_ell, Cyc):
            a_ell = Cyc.rational(Fraction(a_ell))
        if not isinstance(psi_val, Cyc):
            psi_val = Cyc.rational(Fraction(psi_val))
        val = Cyc.rational(Fraction(ell - 1)) * \
            (a_ell * a_ell - psi_val * Cyc.rational(Fraction((1 + ell) ** 2)))
        return val, None
    if pi_kind == "ramified-principal":
        return Cyc.rational(1 - Fraction(1, ell)), None
    if pi_kind == "unramified-special":
        return Cyc.rational(1 - Fraction(1, ell ** 2)), None
    if pi_kind == "supercuspidal":
        return Cyc.one(), None
    raise DomainError("unknown local type %r" % (pi_kind,))
