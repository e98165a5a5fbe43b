"""Dev checks: assembled local zeta integrals I_l * B_Pi against the
closed forms of the ramified cases (Ia) and (IIb).

Each case is assembled from the proof's own first line (the C:IchinoRS
reduction, verified numerically in dev_check_integrals.py): exact Psi by
truncated summation, exact tau_c pairings by cell sums, gamma/L/eps by
the factored machinery.  The Atkin-Lehner pairing ratio is computed by
oracle rather than substituted from the (misprinted) lemma, so these
checks adjudicate the omega(-1) signs in the printed closed forms.
"""
import sys
import time
from fractions import Fraction

sys.path.insert(0, "src")

from iwtriple.local_reps import (Cyc, UnitCharacter, MultChar,
                                 LocalRep, torus_whittaker,
                                 whittaker_pairing, rankin_selberg_psi,
                                 InducedSection, IntertwinedSection,
                                 section_pairing)
from iwtriple.local_reps.reps import (zeta_ell, gamma_pair, L_factor_pair,
                                      L_alphas_pair, mat_tau, eps_gl1,
                                      _factored_L, _factored_L_one_minus_s)

t0 = time.time()
fails = []


def check(name, cond):
    print("%7.1fs %s %s" % (time.time() - t0, "PASS" if cond else "FAIL",
                            name))
    if not cond:
        fails.append(name)


def resid(a, b):
    return abs(complex((a - b).embed(30)))


def eps_pair(r1, r2, tw, s_half=1):
    """eps(s, pi1 x pi2 (x) tw) = gamma L(s)/L(1-s, dual)."""
    ell = r1.ell
    alphas = L_alphas_pair(r1, r2, tw)
    dual = L_alphas_pair(r1.contragredient(), r2.contragredient(), tw.inv())
    fac = gamma_pair(r1, r2, tw) * _factored_L(alphas) * \
        _factored_L_one_minus_s(dual, ell).inv()
    return fac.evaluate(Cyc.ell_power_half(ell, -s_half))


def L_half_prod(r1, r2, tw3, ups3):
    thalf = Cyc.ell_power_half(r1.ell, -1)
    return L_factor_pair(r1, r2, tw3).evaluate(thalf) * \
        L_factor_pair(r1, r2, ups3).evaluate(thalf)


# ------------------------------------------------ (Ia) assembled at l = 3
# c1 = 0, c2 = c3 = c* = 1, ups2 and ups3 ramified quadratic, so that
# omega3(-1) = -1 is sign-decisive for the printed omega3(-1) factor.
ell = 3
eta = UnitCharacter.quadratic(ell)
z1, z2 = zeta_ell(ell, 1), zeta_ell(ell, 2)
absl = MultChar.abs_power_half(ell, 2)
chi1 = MultChar.unramified(ell, Cyc.rational(Fraction(9, 8)))
r1 = LocalRep.principal(ell, chi1, chi1.inv())
chi2 = MultChar.unramified(ell, Cyc.rational(Fraction(10, 9)))
ups2 = MultChar(ell, Cyc.rational(Fraction(9, 10)), eta)
r2 = LocalRep.principal(ell, chi2, ups2)
chi3 = MultChar.unramified(ell, Cyc.rational(Fraction(16, 15)))
ups3 = MultChar(ell, Cyc.rational(Fraction(15, 16)), eta)
r3 = LocalRep.principal(ell, chi3, ups3)
om3 = r3.central_char()
W1 = torus_whittaker(r1, "newform")
W2 = torus_whittaker(r2, "newform")
W3 = torus_whittaker(r3, "newform")
f3 = InducedSection(ell, chi3, ups3, profile="newform")
f3til = IntertwinedSection(f3).twist_det(om3.inv())
psi, tail = rankin_selberg_psi(W1, W2, f3, T=34)
gam = gamma_pair(r1, r2, chi3).evaluate(Cyc.ell_power_half(ell, -1))
istar = z1 * chi3.value_at_minus_one() * gam * \
    (z2 * z2 * L_half_prod(r1, r2, chi3, ups3)).inv() * psi * psi
wpr = whittaker_pairing(W3, W3.twist(om3.inv()), translate="tau_c", n=1)
spr = section_pairing(f3.translate(mat_tau(ell, 1)), f3til)
IB = istar * wpr * spr.inv() * (z2 * z1.inv()) ** 3
base = eps_pair(r1, r2, chi3) * \
    (chi3.inv() * chi3.inv() * absl)(Fraction(ell)) * \
    r3.eps_half() * r3.eps_half() * (z2 * z1.inv()) ** 2
tol = 40 * tail + 1e-12
check("(Ia) assembled I*B matches closed form without omega3(-1)",
      resid(IB, base) <= tol)
check("(Ia) printed omega3(-1) variant differs (ratio -1)",
      resid(IB, base * om3.value_at_minus_one()) > 0.1)

# ------------------------------------------------ (Ia) assembled at l = 2
# pi2 unramified special, c1 = c3 = 0, c* = c2 = 1; the star vectors carry
# the eta^{c*-c_i} translates of the test-vector table.
ell = 2
z1, z2 = zeta_ell(ell, 1), zeta_ell(ell, 2)
absl = MultChar.abs_power_half(ell, 2)
sigma2 = MultChar.unramified(ell, Cyc.rational(Fraction(10, 9)))
chi1 = MultChar.unramified(ell, Cyc.rational(Fraction(9, 8)))
om2v = sigma2.at_ell * sigma2.at_ell
ups1 = MultChar.unramified(ell, (chi1.at_ell * om2v).inv())
chi3 = MultChar.unramified(ell, Cyc.rational(Fraction(16, 15)))
r1 = LocalRep.principal(ell, chi1, ups1)
r2 = LocalRep.special(ell, sigma2.times_abs_power_half(1))
r3 = LocalRep.principal(ell, chi3, chi3.inv())
om3 = r3.central_char()
W1 = torus_whittaker(r1, "newform")
W2 = torus_whittaker(r2, "newform")
W3 = torus_whittaker(r3, "newform")
f3 = InducedSection(ell, chi3, chi3.inv(), profile="spherical")
f3til = IntertwinedSection(f3).twist_det(om3.inv())
f3s = f3.translate((Fraction(1, 2), Fraction(0), Fraction(0), Fraction(1)))
psi, tail = rankin_selberg_psi(W1, W2, f3s, T=30)
gam = gamma_pair(r1, r2, chi3).evaluate(Cyc.ell_power_half(ell, -1))
istar = z1 * chi3.value_at_minus_one() * gam * \
    (z2 * z2 * L_half_prod(r1, r2, chi3, chi3.inv())).inv() * psi * psi
wpr = whittaker_pairing(W3, W3.twist(om3.inv()), translate="tau_c", n=0)
spr = section_pairing(f3.translate(mat_tau(ell, 0)), f3til)
IB = istar * wpr * spr.inv() * (z2 * z1.inv()) ** 3
base = eps_pair(r1, r2, chi3) * \
    (chi3.inv() * chi3.inv() * absl)(Fraction(ell)) * \
    r3.eps_half() * r3.eps_half() * (z2 * z1.inv()) ** 2
check("(Ia) assembled I*B at l=2, special pi2, c3=0",
      resid(IB, base) <= 40 * tail + 1e-12)

# ----------------------------------------------- (IIb) assembled at l = 3
# c1 = 0 (spherical pi1), pi2 = sigma2 St ramified, pi3 = sigma3 St
# unramified, L(s, pi2 x pi3) = 1, c* = 2.  omega1(-1) = 1 is forced for
# any principal/special configuration (ups1 is a square character), so
# this validates the rest of the closed form; the omega1(-1) factor
# itself is adjudicated through L:basic3(1), as in case (Ia).
ell = 3
z1, z2 = zeta_ell(ell, 1), zeta_ell(ell, 2)
absl = MultChar.abs_power_half(ell, 2)
sig2 = MultChar(ell, Cyc.rational(Fraction(10, 9)), eta)
sig3 = MultChar.unramified(ell, Cyc.rational(Fraction(16, 15)))
r2 = LocalRep.special(ell, sig2.times_abs_power_half(1))
r3 = LocalRep.special(ell, sig3.times_abs_power_half(1))
chi1 = MultChar.unramified(ell, Cyc.rational(Fraction(9, 8)))
omv = (sig2.at_ell * sig3.at_ell) ** 2
ups1 = MultChar.unramified(ell, (chi1.at_ell * omv).inv())
r1 = LocalRep.principal(ell, chi1, ups1)
om1 = r1.central_char()
cstar = max(r2.conductor_exponent(), r3.conductor_exponent())
W1 = torus_whittaker(r1, "newform")
W2 = torus_whittaker(r2, "newform")
W3 = torus_whittaker(r3, "newform")
f1 = InducedSection(ell, chi1, ups1, profile="spherical")
f1til = IntertwinedSection(f1).twist_det(om1.inv())
fA = f1.translate((Fraction(1, ell ** cstar), Fraction(0),
                   Fraction(0), Fraction(1)))
fB = f1.translate((Fraction(1, ell ** (cstar - 1)), Fraction(0),
                   Fraction(0), Fraction(1)))
coef = (ups1.inv().times_abs_power_half(1))(Fraction(ell))
gA, tA = rankin_selberg_psi(W2, W3, fA, T=12)
gB, tB = rankin_selberg_psi(W2, W3, fB, T=12)
psi = gA - coef * gB
tail = tA + abs(complex(coef.embed(30))) * tB
gam = gamma_pair(r2, r3, chi1).evaluate(Cyc.ell_power_half(ell, -1))
thalf = Cyc.ell_power_half(ell, -1)
Lhalf = L_factor_pair(r2, r3, chi1).evaluate(thalf) * \
    L_factor_pair(r2, r3, ups1).evaluate(thalf)
istar = z1 * chi1.value_at_minus_one() * gam * \
    (z2 * z2 * Lhalf).inv() * psi * psi
wpr = whittaker_pairing(W1, W1.twist(om1.inv()), translate="tau_c", n=0)
spr = section_pairing(f1.translate(mat_tau(ell, 0)), f1til)
IB = istar * wpr * spr.inv() * (z2 * z1.inv()) ** 3
base = eps_pair(r2, r3, chi1) * \
    (chi1.inv() * chi1.inv() * absl)(Fraction(ell ** cstar)) * \
    (z2 * z1.inv()) ** 2
check("(IIb) assembled I*B at l=3, c1=0",
      resid(IB, base) <= 40 * tail + 1e-12)

# ----------------------------------------------- (IIb) assembled at l = 5
# c1 = 1 (ups1 ramified quadratic), sigma2 of order 4 (c2 = 2 = c*),
# sigma3 unramified special; exercises the eps(1/2,pi1)^2 factor and the
# tau_{c_1} pairing with ramified pi1.
ell = 5
quad5 = UnitCharacter.quadratic(ell)
nu4 = UnitCharacter.of_order(ell, 1, 4)
z1, z2 = zeta_ell(ell, 1), zeta_ell(ell, 2)
absl = MultChar.abs_power_half(ell, 2)
sig2 = MultChar(ell, Cyc.rational(Fraction(10, 9)), nu4)
sig3 = MultChar.unramified(ell, Cyc.rational(Fraction(16, 15)))
r2 = LocalRep.special(ell, sig2.times_abs_power_half(1))
r3 = LocalRep.special(ell, sig3.times_abs_power_half(1))
chi1 = MultChar.unramified(ell, Cyc.rational(Fraction(9, 8)))
omv = (sig2.at_ell * sig3.at_ell) ** 2
ups1 = MultChar(ell, (chi1.at_ell * omv).inv(), quad5)
r1 = LocalRep.principal(ell, chi1, ups1)
om1 = r1.central_char()
c1 = r1.conductor_exponent()
cstar = max(r2.conductor_exponent(), r3.conductor_exponent())
W1 = torus_whittaker(r1, "newform")
W2 = torus_whittaker(r2, "newform")
W3 = torus_whittaker(r3, "newform")
f1 = InducedSection(ell, chi1, ups1, profile="newform")
f1til = IntertwinedSection(f1).twist_det(om1.inv())
f1s = f1.translate((Fraction(1, ell ** (cstar - 1)), Fraction(0),
                    Fraction(0), Fraction(1)))
psi, tail = rankin_selberg_psi(W2, W3, f1s, T=12)
gam = gamma_pair(r2, r3, chi1).evaluate(Cyc.ell_power_half(ell, -1))
thalf = Cyc.ell_power_half(ell, -1)
Lhalf = L_factor_pair(r2, r3, chi1).evaluate(thalf) * \
    L_factor_pair(r2, r3, ups1).evaluate(thalf)
istar = z1 * chi1.value_at_minus_one() * gam * \
    (z2 * z2 * Lhalf).inv() * psi * psi
wpr = whittaker_pairing(W1, W1.twist(om1.inv()), translate="tau_c", n=c1)
spr = section_pairing(f1.translate(mat_tau(ell, c1)), f1til)
IB = istar * wpr * spr.inv() * (z2 * z1.inv()) ** 3
base = eps_pair(r2, r3, chi1) * \
    (chi1.inv() * chi1.inv() * absl)(Fraction(ell ** cstar)) * \
    r1.eps_half() * r1.eps_half() * (z2 * z1.inv()) ** 2
check("(IIb) assembled I*B at l=5, c1=1 (no omega1(-1))",
      resid(IB, base) <= 40 * tail + 1e-12)

print()
print("FAILURES:", fails if fails else "none")
