from fractions import Fraction

import pytest

from iwtriple.errors import DomainError
from iwtriple.local_reps.scalars import Cyc


def zeta(n, k=1):
    return Cyc.root_of_unity(n, k)


class TestCyc:

    def test_rational_arithmetic(self):
        a = Cyc.rational(Fraction(3, 4))
        b = Cyc.rational(Fraction(1, 4))
        assert (a + b).as_rational() == 1
        assert (a * 4).as_rational() == 3

    def test_root_of_unity_orders(self):
        for n in [2, 3, 4, 5, 6, 8, 9, 12, 25]:
            z = zeta(n)
            assert (z ** n) == 1
            if n > 1:
                assert not (z == 1)

    def test_cyclotomic_sum_vanishes(self):
        for n in [2, 3, 4, 5, 6, 7, 8, 9, 12]:
            s = Cyc.zero()
            for k in range(n):
                s = s + zeta(n, k)
            assert s.is_zero(), "sum of all %d-th roots should vanish" % n

    def test_minus_one(self):
        assert zeta(2) == -1
        assert zeta(4) ** 2 == -1
        assert zeta(6, 3) == -1

    def test_mixed_orders(self):
        # e(1/6) = e(1/2)*e(1/3)^2 = -zeta_3^2
        assert zeta(6) == Cyc.rational(-1) * zeta(3, 2)
        assert zeta(12) ** 12 == 1
        assert zeta(12, 6) == -1

    def test_sqrt(self):
        r = Cyc.sqrt_prime(5)
        assert r * r == 5
        assert Cyc.ell_power_half(3, 3) == 3 * Cyc.sqrt_prime(3)
        assert Cyc.ell_power_half(3, -2) == Fraction(1, 3)

    def test_gauss_sum_quadratic_mod5(self):
        # sum chi(a) e(a/5) for chi the quadratic character mod 5 = sqrt(5)
        g = Cyc.zero()
        for a in range(1, 5):
            chi = 1 if pow(a, 2, 5) in (1, 4) else -1
            g = g + Cyc.rational(chi) * zeta(5, a)
        assert g * g == 5
        # numeric embedding agrees with the positive square root
        assert abs(g.embed(40) - Cyc.sqrt_prime(5).embed(40)) < 1e-30

    def test_conjugate(self):
        z = zeta(5) + 2 * zeta(8, 3)
        c = z.conjugate()
        assert c == zeta(5, 4) + 2 * zeta(8, 5)
        assert (z * c).conjugate() == z * c if (z * c).is_rational() else True

    def test_inverse_monomial(self):
        z = zeta(8, 3) * Cyc.sqrt_prime(3) * Fraction(2, 7)
        assert z * z.inv() == 1

    def test_inverse_general(self):
        z = 1 - Fraction(1, 3) * zeta(5)
        assert z * z.inv() == 1
        w = 1 + zeta(4) + Cyc.sqrt_prime(2)
        assert w * w.inv() == 1

    def test_zero_division(self):
        with pytest.raises(DomainError):
            Cyc.zero().inv()

    def test_embed(self):
        import mpmath
        z = zeta(3)
        v = z.embed(40)
        assert abs(v - mpmath.e ** (2j * mpmath.pi / 3)) < 1e-30

    def test_distributivity(self):
        a = zeta(5) + Cyc.sqrt_prime(2)
        b = zeta(3, 2) - 1
        c = zeta(4) * Fraction(1, 2)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
