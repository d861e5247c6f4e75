"""Core exact-arithmetic layer: polynomials, truncated series, gamma values."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binomsums.exact_core import (
    EgfSeries,
    GammaHalfValue,
    Poly,
    binomial_general,
    falling_factorial,
    gamma_half,
    pochhammer,
    poly_integral01,
)

fractions = st.fractions(
    min_value=-10, max_value=10, max_denominator=8
)
coeff_lists = st.lists(fractions, min_size=0, max_size=6)


class TestPoly:
    def test_zero_handling(self):
        assert Poly().degree == -1
        assert Poly([0, 0]).degree == -1
        assert not Poly([0])
        assert Poly([0, 0, 3]).degree == 2

    def test_evaluation_is_horner_exact(self):
        p = Poly([Fraction(1, 3), -2, 1])  # 1/3 - 2x + x^2
        assert p(Fraction(1, 2)) == Fraction(1, 3) - 1 + Fraction(1, 4)

    @given(coeff_lists, coeff_lists, fractions)
    def test_product_evaluates_pointwise(self, a, b, x):
        pa, pb = Poly(a), Poly(b)
        assert (pa * pb)(x) == pa(x) * pb(x)

    @given(coeff_lists, st.integers(min_value=0, max_value=5), fractions)
    def test_power_matches_repeated_product(self, a, e, x):
        p = Poly(a)
        ref = Poly([1])
        for _ in range(e):
            ref = ref * p
        assert p**e == ref
        assert (p**e)(x) == p(x) ** e

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            Poly([1, 1]) ** -1

    @given(coeff_lists)
    def test_derivative_drops_degree(self, a):
        p = Poly(a)
        d = p.derivative()
        if p.degree <= 0:
            assert d == Poly()
        else:
            assert d.degree == p.degree - 1

    def test_derivative_values(self):
        p = Poly([5, 0, 3, 1])  # 5 + 3x^2 + x^3
        assert p.derivative() == Poly([0, 6, 3])

    def test_integral_unit_interval(self):
        # monomial x^k integrates to 1/(k+1)
        for k in range(6):
            assert poly_integral01(Poly.monomial(k)) == Fraction(1, k + 1)
        assert poly_integral01(Poly()) == 0

    @given(coeff_lists, coeff_lists)
    def test_ring_axioms_spot(self, a, b):
        pa, pb = Poly(a), Poly(b)
        assert pa + pb == pb + pa
        assert pa * pb == pb * pa
        assert pa - pa == Poly()


class TestEgfSeries:
    def test_exp_coefficients(self):
        s = EgfSeries.exp(3, 4)
        assert s.coeffs == (1, 3, 9, 27, 81)

    @given(
        st.lists(fractions, min_size=1, max_size=5),
        st.lists(fractions, min_size=1, max_size=5),
    )
    def test_product_is_binomial_convolution(self, a, b):
        n = min(len(a), len(b)) - 1
        sa, sb = EgfSeries(a[: n + 1]), EgfSeries(b[: n + 1])
        prod = sa * sb
        from math import comb

        for k in range(n + 1):
            expected = sum(
                comb(k, i) * sa.coeffs[i] * sb.coeffs[k - i]
                for i in range(k + 1)
            )
            assert prod.coeffs[k] == expected

    def test_exponential_addition_law(self):
        a, b = Fraction(2, 3), Fraction(-1, 2)
        n = 6
        assert EgfSeries.exp(a, n) * EgfSeries.exp(b, n) == EgfSeries.exp(
            a + b, n
        )

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            EgfSeries([1, 2]) * EgfSeries([1, 2, 3])

    @given(st.lists(fractions, min_size=1, max_size=6))
    def test_reciprocal_inverts(self, a):
        if a[0] == 0:
            with pytest.raises(ZeroDivisionError):
                EgfSeries(a).reciprocal()
            return
        s = EgfSeries(a)
        assert s * s.reciprocal() == EgfSeries.one(s.order)

    def test_negative_pow_uses_reciprocal(self):
        s = EgfSeries.exp(2, 5)
        assert s.pow(-3) == EgfSeries.exp(-6, 5)


class TestGammaHalf:
    def test_half_integer_ladder(self):
        g = gamma_half(Fraction(1, 2))
        assert (g.rational_part, g.sqrt_pi_exponent, g.is_pole) == (1, 1, False)
        assert gamma_half(Fraction(5, 2)).rational_part == Fraction(3, 4)
        assert gamma_half(Fraction(-1, 2)).rational_part == -2
        assert gamma_half(Fraction(-3, 2)).rational_part == Fraction(4, 3)

    def test_integers(self):
        assert gamma_half(5).rational_part == 24
        assert gamma_half(1).rational_part == 1
        assert gamma_half(0).is_pole
        assert gamma_half(-3).is_pole
        assert gamma_half(0) == GammaHalfValue.pole()

    def test_recurrence(self):
        for num in range(-7, 8, 2):
            a = Fraction(num, 2)
            g, g1 = gamma_half(a), gamma_half(a + 1)
            assert g1.rational_part == a * g.rational_part
            assert g1.sqrt_pi_exponent == g.sqrt_pi_exponent

    def test_unsupported_argument(self):
        with pytest.raises(ValueError):
            gamma_half(Fraction(1, 3))


class TestFactorialSymbols:
    @given(fractions, st.integers(min_value=0, max_value=8))
    def test_falling_vs_rising(self, x, v):
        assert falling_factorial(x, v) == (-1) ** v * pochhammer(-x, v)

    @given(fractions, st.integers(min_value=0, max_value=8))
    def test_pochhammer_recurrence(self, x, v):
        assert pochhammer(x, v + 1) == pochhammer(x, v) * (x + v)

    def test_binomial_general(self):
        from math import comb

        for n in range(8):
            for k in range(8):
                assert binomial_general(n, k) == (comb(n, k) if k <= n else 0)
        # the negative-upper-index convention used by the closed sequences
        assert binomial_general(-1, 3) == -1
        assert binomial_general(Fraction(1, 2), 2) == Fraction(-1, 8)
