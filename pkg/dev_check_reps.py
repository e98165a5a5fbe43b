import sys
from fractions import Fraction
sys.path.insert(0, "src")

from iwtriple.local_reps.scalars import Cyc
from iwtriple.local_reps.characters import (UnitCharacter, MultChar,
                                            additive_char,
                                            unit_shell_integral)
from iwtriple.local_reps.ratfun import RatSeries, Factored
from iwtriple.local_reps.reps import (LocalRep, torus_whittaker, weyl_table,
                                      psi_multiply, kirillov_coeff,
                                      enumerate_unit_characters, gamma_gl1,
                                      eps_gl1, zeta_ell, KirillovTable,
                                      WhittakerData, mat_w, mat_mul)

def tables_equal(A, B):
    chars = A.chars() + [c for c in B.chars()
                         if not any(c == d for d in A.chars())]
    for mu in chars:
        if not (A.get(mu) == B.get(mu)):
            return False
    return True

fails = []
def check(name, cond):
    print(("PASS " if cond else "FAIL ") + name)
    if not cond:
        fails.append(name)

# 1. unramified gamma against the textbook formula at a numeric point
ell = 5
chi = MultChar.unramified(ell, Cyc.rational(Fraction(2, 3)))
g = gamma_gl1(chi)
# t = l^{-s}; pick s = 2 -> t = 1/25
t = Cyc.rational(Fraction(1, 25))
num = 1 - chi.at_ell.inv() * Cyc.rational(Fraction(25, 5))   # 1 - chi^{-1}(l) l^{s-1}
den = 1 - chi.at_ell * t
check("gamma unramified formula", g.evaluate(t) == num * den.inv())

# 2. eps(1/2,chi) eps(1/2,chi^{-1}) = chi(-1) for ramified chi
xi = UnitCharacter.of_order(5, 1, 4)
chi_r = MultChar(5, Cyc.one(), xi)
e1 = eps_gl1(chi_r, s_half=1)
e2 = eps_gl1(chi_r.inv(), s_half=1)
check("eps functional equation", e1 * e2 == xi(-1))

# 3. spherical vector is w-invariant
rep = LocalRep.unramified(5, Cyc.rational(Fraction(2, 3)),
                          Cyc.rational(Fraction(3, 2)))
W = torus_whittaker(rep, "newform")
check("spherical w-invariance", tables_equal(weyl_table(rep, W.table), W.table))

# 4. pi(w)^2 = omega(-1) on a ramified principal series
rep2 = LocalRep.principal(5, MultChar(5, Cyc.one(), xi),
                          MultChar(5, Cyc.one(), xi * xi))
W2 = torus_whittaker(rep2, "newform")
om = rep2.central_char()
t1 = weyl_table(rep2, W2.table)
t2 = weyl_table(rep2, t1)
check("w^2 = omega(-1) (ramified PS)",
      tables_equal(t2, W2.table.scale(om.value_at_minus_one())))

# also on the spherical rep
t1s = weyl_table(rep, W.table)
t2s = weyl_table(rep, t1s)
check("w^2 = omega(-1) (spherical)",
      tables_equal(t2s, W.table.scale(rep.central_char().value_at_minus_one())))

# 5. psi_multiply is pointwise multiplication by psi(r y)
T = t1  # w-translate of ramified newform: has ramified entries
for r in [Fraction(1), Fraction(2, 5), Fraction(3, 25), Fraction(7)]:
    P = psi_multiply(T, r)
    ok = True
    for m in range(-4, 3):
        for u in [1, 2, 3, 4, 6, 7]:
            lhs = P.value(m, u)
            rhs = additive_char(5, r * Fraction(5) ** m * u) * T.value(m, u)
            if not (lhs == rhs):
                ok = False
    check("psi_multiply pointwise r=%s" % r, ok)

# 6. newform invariance: nbar(l^n) fixes the newform for n >= c
c = rep2.conductor_exponent()
mid = W2.mid_table(c)
check("nbar(l^c) fixes newform (c=%d)" % c, tables_equal(mid, W2.table))

# spherical: nbar(1) should fix the spherical vector too (n=0 >= c=0)
mid0 = W.mid_table(0)
check("nbar(1) fixes spherical", tables_equal(mid0, W.table))

# 7. Kirillov lemma closed form vs engine; rep2 has L(s,pi)=1, omega unram
#    chi' = xi: pi x xi components xi^2, xi^3 both ramified -> L = 1
cpi = rep2.conductor_exponent()     # = 2
chi_m = MultChar(5, Cyc.one(), xi)
ctw = rep2.conductor_exponent(chi_m)
print("  c(pi)=%d c(pi x xi)=%d" % (cpi, ctw))
ok = True
details = []
for n in range(0, 4):
    for m in range(-2, 2):
        closed = kirillov_coeff(rep2, n, m, xi)
        engine = W2.a_coeff(n, m, xi)
        if not (closed == engine):
            ok = False
            details.append((n, m, closed, engine))
check("L:Kirillov.local ramified chi", ok)
for d in details[:6]:
    print("   mismatch", d[0], d[1], d[2], d[3])

ok = True
details = []
triv = UnitCharacter.trivial(5)
for n in range(0, 4):
    for m in range(-2, 2):
        closed = kirillov_coeff(rep2, n, m, triv)
        engine = W2.a_coeff(n, m, triv)
        if not (closed == engine):
            ok = False
            details.append((n, m, closed, engine))
check("L:Kirillov.local trivial chi", ok)
for d in details[:8]:
    print("   mismatch", d[0], d[1], d[2], d[3])

# 8. eps(1/2, St) = -1
st = LocalRep.special(2, MultChar.abs_power_half(2, 1))
check("eps(1/2, St) = -1", st.eps_half() == -Cyc.one())

# 9. value(): pi(w)^2 via matrix products, psi via n(b)
wmat = mat_w()
w2mat = mat_mul(wmat, wmat)
yv = Fraction(2, 5)
check("value at w*w", W2.value(yv, w2mat) ==
      om.value_at_minus_one() * W2.value(yv))
nb = (Fraction(1), Fraction(3, 5), Fraction(0), Fraction(1))
check("value at n(b)", W2.value(yv, nb) ==
      additive_char(5, yv * Fraction(3, 5)) * W2.value(yv))

# 10. character enumeration counts
check("char count 5^1", len(enumerate_unit_characters(5, 1)) == 4)
check("char count 5^2", len(enumerate_unit_characters(5, 2)) == 20)
check("char count 2^3", len(enumerate_unit_characters(2, 3)) == 4)

print()
print("FAILURES:", fails if fails else "none")
