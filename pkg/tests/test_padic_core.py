import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from iwtriple.errors import DomainError, PrecisionError
from iwtriple.padic_core import (
    PadicNumber, teichmuller, plog, psqrt, sqrt_onepz, CycloPadic,
    IwasawaElement, ArithmeticPoint, group_like, specialize, tail_valuation,
    DirichletCharacter,
)

P, M = 5, 8


def pn(x, M=M, p=P):
    return PadicNumber.from_fraction(Fraction(x), p, M)


class TestPadicNumber:

    def test_construction_and_residue(self):
        x = pn(7)
        assert x.residue() == 7
        assert pn(50).valuation() == 2
        assert pn(Fraction(1, 2)).residue(2) == 13  # 1/2 = 13 mod 25

    def test_precision_add(self):
        a = PadicNumber(P, 0, 3, 6)
        b = PadicNumber(P, 0, 4, 4)
        assert (a + b).M == 4

    def test_precision_mul(self):
        # prec(a*b) = min(M_a + v_b, M_b + v_a)
        a = PadicNumber(P, 1, 2, 6)   # v=1, M=6
        b = PadicNumber(P, 2, 3, 5)   # v=2, M=5
        assert (a * b).M == min(6 + 2, 5 + 1)

    def test_zero_to_precision(self):
        z = pn(5 ** 8)  # indistinguishable from 0 at precision 8
        assert z.is_zero()
        with pytest.raises(DomainError):
            z.inverse()

    def test_division(self):
        a = pn(7)
        assert (a / a) == 1
        b = pn(Fraction(3, 4))
        assert (b * 4) == 3

    def test_inverse_precision(self):
        a = PadicNumber(P, 1, 2, 8)  # v=1: 1/a has M = 8 - 2 = 6
        assert a.inverse().M == 6
        assert (a * a.inverse()) == 1

    def test_serialization_roundtrip(self):
        x = pn(Fraction(-7, 3))
        y = PadicNumber.from_json(x.to_json())
        assert x == y and y.M == x.M

    @given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6))
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms_match_integers(self, a, b):
        pa, pb = pn(a), pn(b)
        assert (pa + pb) == pn(a + b)
        assert (pa * pb) == pn(a * b)
        assert (pa - pb) == pn(a - b)


class TestTeichmuller:

    def test_identity(self):
        assert teichmuller(1, 5, 3) == 1

    def test_paper_values(self):
        assert teichmuller(4, 5, 2).residue(2) == 24
        t = teichmuller(2, 5, 3)
        assert t.residue(3) == 57
        assert (t ** 4) == 1

    def test_root_of_unity(self):
        for a in range(1, 5):
            t = teichmuller(a, 5, M)
            assert (t ** 4) == 1
            assert t.residue(1) == a

    def test_multiplicative(self):
        for a in range(1, 5):
            for b in range(1, 5):
                ab = (a * b) % 5
                assert teichmuller(a, 5, M) * teichmuller(b, 5, M) == \
                    teichmuller(ab, 5, M)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            teichmuller(10, 5, 3)


class TestLogSqrt:

    def test_log_multiplicative(self):
        a, b = pn(1 + 5), pn(1 + 2 * 25)
        assert plog(a * b) == plog(a) + plog(b)

    def test_log_of_power(self):
        a = pn(6)
        assert plog(a ** 3) == 3 * plog(a)

    def test_sqrt(self):
        x = pn(4)
        r = psqrt(x)
        assert r * r == x
        # representative convention: unit part in [1, p^M/2)
        assert r.unit < P ** M / 2

    def test_sqrt_onepz(self):
        x = pn(6) ** 2
        r = sqrt_onepz(x)
        assert r == 6
        y = pn(36)
        assert sqrt_onepz(y * y) == 36


class TestCycloPadic:

    def test_zeta_order(self):
        z = CycloPadic.zeta(5, 1, 6)
        # 1 + z + z^2 + z^3 + z^4 = 0
        s = z ** 0 + z + z ** 2 + z ** 3 + z ** 4
        assert s.is_zero()
        assert (z ** 5) == 1

    def test_zeta25(self):
        z = CycloPadic.zeta(5, 2, 6)
        assert not (z ** 5 - 1).is_zero()
        assert (z ** 25) == 1
        # promotion consistency: zeta_25^5 is zeta_5
        z5 = CycloPadic.zeta(5, 1, 6)
        assert (z ** 5) == z5.promote(2)

    def test_arithmetic(self):
        z = CycloPadic.zeta(5, 1, 6)
        a = (1 + z) * (1 - z)
        b = 1 - z ** 2
        assert a == b


class TestIwasawa:

    def test_group_like_trivial(self):
        g = group_like(1, 0, 1, 4, M, p=P)
        assert g == IwasawaElement.one(P, 1, 4, M)

    def test_group_like_generator(self):
        g = group_like(1 + P, 0, 1, 4, M, p=P)
        t = IwasawaElement.variable(P, 0, 1, 4, M)
        assert g == t + 1

    def test_group_like_square(self):
        g = group_like((1 + P) ** 2, 0, 1, 4, M, p=P)
        t = IwasawaElement.variable(P, 0, 1, 4, M)
        assert g == (t + 1) ** 2

    def test_group_like_multiplicative(self):
        z1, z2 = 1 + P, 1 + 3 * P
        g = group_like(z1 * z2, 0, 1, 4, M, p=P)
        assert g == group_like(z1, 0, 1, 4, M, p=P) * group_like(z2, 0, 1, 4, M, p=P)

    def test_specialize_one_plus_t(self):
        t = IwasawaElement.variable(P, 0, 1, 4, M)
        pt = ArithmeticPoint.single(P, 2)
        val = specialize(t + 1, pt)
        assert val.scalar_part() == pn(36, val.scalar_part().M)

    def test_specialize_with_zeta(self):
        t = IwasawaElement.variable(P, 0, 1, 4, M)
        pt = ArithmeticPoint.single(P, 3, t=1, a=1)
        val = specialize(t + 1, pt)
        z = CycloPadic.zeta(P, 1, val._prec())
        expect = z * pn((1 + P) ** 3, val._prec())
        assert val == expect

    def test_specialize_group_like(self):
        z = 1 + 2 * P
        g = group_like(z, 0, 1, 4, M, p=P)
        pt = ArithmeticPoint.single(P, 3)
        val = specialize(g, pt)
        prec = val._prec()
        assert val.scalar_part() == pn(z ** 3, prec)

    def test_specialize_weight_zero(self):
        g = group_like(1 + 2 * P, 0, 1, 4, M, p=P)
        pt = ArithmeticPoint.single(P, 0)
        assert specialize(g, pt).scalar_part() == 1

    def test_specialize_homomorphism(self):
        x = group_like(1 + P, 0, 1, 4, M, p=P) + 3
        y = group_like(1 + 2 * P, 0, 1, 4, M, p=P) * 2 + 1
        pt = ArithmeticPoint.single(P, 2)
        lhs = specialize(x * y, pt)
        rhs = specialize(x, pt) * specialize(y, pt)
        prec = min(lhs._prec(), rhs._prec())
        assert (lhs - rhs).promote(0).scalar_part().with_precision(prec).is_zero()

    def test_precision_error(self):
        g = group_like(1 + 2 * P, 0, 1, 4, M, p=P)
        pt = ArithmeticPoint.single(P, 2)
        with pytest.raises(PrecisionError) as e:
            specialize(g, pt, require=M)
        assert e.value.achievable is not None

    def test_tail_bound_documented(self):
        # d=4, vt=1, p=5: min_j (j - v_5(j!)) at j=4 is 4
        assert tail_valuation(4, 1, 5) == 4

    def test_inverse(self):
        x = group_like(1 + P, 0, 1, 4, M, p=P) * 2 + 1  # unit constant term 3
        xi = x.inverse()
        assert x * xi == IwasawaElement.one(P, 1, 4, M)

    def test_multivariable(self):
        g1 = group_like(1 + P, 0, 3, 4, M, p=P)
        g2 = group_like(1 + P, 1, 3, 4, M, p=P)
        g3 = group_like(1 + P, 2, 3, 4, M, p=P)
        x = g1 * g2 * g3
        pt = ArithmeticPoint(P, [(2,), (3,), (4,)])
        val = specialize(x, pt)
        prec = val._prec()
        assert val.scalar_part() == pn((1 + P) ** 9, prec)

    def test_serialization_roundtrip(self):
        x = group_like(1 + 3 * P, 0, 2, 4, M, p=P) + 7
        y = IwasawaElement.from_json(x.to_json())
        assert x == y


class TestRingAxiomsRandom:

    @given(st.integers(0, 10 ** 4), st.integers(0, 10 ** 4), st.integers(0, 10 ** 4))
    @settings(max_examples=25, deadline=None)
    def test_iwasawa_ring_axioms(self, a, b, c):
        rnd = random.Random(a * 31 + b * 7 + c)

        def rand_elt():
            x = IwasawaElement(P, 2, 3, 6)
            for m in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]:
                x.coeffs[m] = pn(rnd.randrange(-100, 100), 6)
            return x

        x, y, z = rand_elt(), rand_elt(), rand_elt()
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x


class TestDirichletCharacter:

    def test_trivial(self):
        chi = DirichletCharacter.trivial(P, M, 1)
        assert chi.scalar(7) == 1

    def test_teichmuller_char(self):
        chi = DirichletCharacter.teichmuller_char(P, M, 1)
        assert chi.scalar(2) == teichmuller(2, P, M)
        assert chi.scalar(5).is_zero()
        assert chi.conductor() == 5

    def test_quadratic(self):
        chi = DirichletCharacter.quadratic(P, M, -4)
        assert chi.scalar(1) == 1
        assert chi.scalar(3) == -1
        assert chi.scalar(2).is_zero()
        assert not chi.is_even()

    def test_multiplicative(self):
        chi = DirichletCharacter.quadratic(P, M, -4) * \
            DirichletCharacter.teichmuller_char(P, M, 2)
        for m, n in [(3, 7), (11, 13), (7, 9)]:
            assert chi(m) * chi(n) == chi(m * n)

    def test_inverse(self):
        chi = DirichletCharacter.teichmuller_char(P, M, 1)
        psi = chi.inverse()
        for n in [2, 3, 4, 6]:
            assert chi(n) * psi(n) == CycloPadic.from_scalar(PadicNumber.one(P, M))

    def test_decompose_p(self):
        chi = DirichletCharacter.quadratic(P, M, -4) * \
            DirichletCharacter.teichmuller_char(P, M, 1)
        chi0, chip = chi.decompose_p()
        assert chi0.modulus == 4 and chip.modulus == 5
        for n in [3, 7, 9, 11]:
            assert chi(n) == chi0(n) * chip(n)

    def test_zero_off_coprime(self):
        chi = DirichletCharacter.quadratic(P, M, -4)
        assert chi(6).is_zero()

    def test_kronecker_values(self):
        from iwtriple.padic_core.characters import kronecker_symbol
        # (-4/n) is the nontrivial character mod 4
        assert [kronecker_symbol(-4, n) for n in range(1, 8)] == \
            [1, 0, -1, 0, 1, 0, -1]
        # (5/n) quadratic reciprocity spot checks
        assert kronecker_symbol(5, 11) == 1
        assert kronecker_symbol(5, 13) == -1
