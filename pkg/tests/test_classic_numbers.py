"""Classical number and polynomial families against independent oracles."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binomsums.classic_numbers import (
    FamilyTag,
    apostol_bernoulli,
    apostol_euler,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_poly_order,
    classic_sequence,
    euler_number0,
    euler_poly,
    euler_poly_order,
    frobenius_euler,
    legendre,
    mirimanoff,
    stirling1,
    stirling2,
    y1,
    y_seq,
)
from binomsums.exact_core import Poly

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def partitions_into_blocks(n: int, k: int) -> int:
    """Count set partitions of {0..n-1} into k nonempty blocks by direct
    recursion: element n-1 is a singleton or joins one of the blocks."""
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return partitions_into_blocks(n - 1, k - 1) + k * partitions_into_blocks(
        n - 1, k
    )


def falling_product(n: int) -> Poly:
    """x(x-1)...(x-n+1) expanded; its coefficients define s(n,k)."""
    acc = Poly([1])
    for i in range(n):
        acc = acc * Poly([-i, 1])
    return acc


class TestStirling:
    def test_second_kind_vs_enumeration(self):
        for n in range(8):
            for k in range(n + 2):
                assert stirling2(n, k) == partitions_into_blocks(n, k)

    def test_first_kind_vs_falling_factorial(self):
        for n in range(8):
            coeffs = falling_product(n).coeffs
            for k in range(n + 2):
                expected = coeffs[k] if k < len(coeffs) else 0
                assert stirling1(n, k) == expected

    @given(
        st.integers(min_value=1, max_value=10),
        st.integers(min_value=1, max_value=10),
    )
    def test_second_kind_recurrence(self, n, k):
        assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(
            n - 1, k - 1
        )

    @given(
        st.integers(min_value=0, max_value=9),
        st.integers(min_value=0, max_value=9),
    )
    def test_inversion(self, n, m):
        # the two kinds are inverse triangular matrices
        total = sum(
            stirling1(n, k) * stirling2(k, m) for k in range(n + 1)
        )
        assert total == (1 if n == m else 0)


class TestBernoulliEuler:
    def test_bernoulli_numbers_by_recurrence(self):
        # sum_{k<n} C(n,k) B_k = 0 for n >= 2, B_0 = 1
        assert bernoulli_number(0) == 1
        for n in range(2, 12):
            assert sum(
                comb(n, k) * bernoulli_number(k) for k in range(n)
            ) == 0
        assert bernoulli_number(1) == Fraction(-1, 2)
        assert bernoulli_number(2) == Fraction(1, 6)
        assert bernoulli_number(3) == 0

    @given(st.integers(min_value=1, max_value=10), small_fractions)
    def test_bernoulli_difference_equation(self, n, x):
        assert bernoulli_poly(n)(x + 1) - bernoulli_poly(n)(x) == n * x ** (
            n - 1
        )

    @given(st.integers(min_value=0, max_value=10), small_fractions)
    def test_euler_reflection_equation(self, n, x):
        assert euler_poly(n)(x + 1) + euler_poly(n)(x) == 2 * x**n

    @given(st.integers(min_value=1, max_value=10))
    def test_derivatives(self, n):
        assert bernoulli_poly(n).derivative() == n * bernoulli_poly(n - 1)
        assert euler_poly(n).derivative() == n * euler_poly(n - 1)

    def test_order_one_reduces_to_classical(self):
        for n in range(8):
            assert bernoulli_poly_order(n, 1) == bernoulli_poly(n)
            assert euler_poly_order(n, 1) == euler_poly(n)

    def test_order_zero_is_monomial(self):
        for n in range(6):
            assert bernoulli_poly_order(n, 0) == Poly.monomial(n)
            assert euler_poly_order(n, 0) == Poly.monomial(n)

    @given(
        st.integers(min_value=0, max_value=7),
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=0, max_value=3),
        small_fractions,
        small_fractions,
    )
    @settings(max_examples=40)
    def test_order_addition_law(self, n, k1, k2, x, y):
        # the order parameter is additive under binomial convolution
        lhs = bernoulli_poly_order(n, k1 + k2)(x + y)
        rhs = sum(
            comb(n, j)
            * bernoulli_poly_order(j, k1)(x)
            * bernoulli_poly_order(n - j, k2)(y)
            for j in range(n + 1)
        )
        assert lhs == rhs

    def test_euler_number0(self):
        for n in range(10):
            assert euler_number0(n) == euler_poly(n)(0)


class TestDeformedFamilies:
    lams = [Fraction(-2), Fraction(-1, 2), Fraction(2), Fraction(3)]

    @given(
        st.integers(min_value=1, max_value=8),
        st.sampled_from(lams),
        small_fractions,
    )
    def test_apostol_bernoulli_difference(self, n, lam, x):
        poly = apostol_bernoulli(n, lam)
        assert lam * poly(x + 1) - poly(x) == n * x ** (n - 1)

    @given(
        st.integers(min_value=0, max_value=8),
        st.sampled_from(lams),
        small_fractions,
    )
    def test_apostol_euler_reflection(self, n, lam, x):
        poly = apostol_euler(n, lam)
        assert lam * poly(x + 1) + poly(x) == 2 * x**n

    @given(
        st.integers(min_value=0, max_value=8),
        st.sampled_from(lams),
        small_fractions,
    )
    def test_frobenius_euler_difference(self, n, u, x):
        poly = frobenius_euler(n, u)
        assert poly(x + 1) - u * poly(x) == (1 - u) * x**n

    def test_singular_parameters_rejected(self):
        with pytest.raises(ValueError):
            apostol_bernoulli(3, 1)
        with pytest.raises(ValueError):
            apostol_euler(3, -1)
        with pytest.raises(ValueError):
            frobenius_euler(3, 1)

    def test_apostol_reduces_to_classical_limits(self):
        # Frobenius-Euler at u = -1 is the classical Euler polynomial
        for n in range(8):
            assert frobenius_euler(n, -1) == euler_poly(n)


def catalan_by_ballot_paths(n: int) -> int:
    """Count monotone lattice paths below the diagonal by dynamic
    programming; an oracle independent of any closed form."""
    ways = [[0] * (n + 1) for _ in range(n + 1)]
    ways[0] = [1] * (n + 1)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            ways[i][j] = ways[i - 1][j] + (
                ways[i][j - 1] if j - 1 >= i else 0
            )
    return ways[n][n]


class TestClassicSequences:
    def test_catalan_vs_path_count(self):
        for n in range(10):
            assert classic_sequence(FamilyTag.CATALAN, n) == (
                catalan_by_ballot_paths(n)
            )

    def test_catalan_leading_terms(self):
        values = [classic_sequence(FamilyTag.CATALAN, n) for n in range(7)]
        assert values == [1, 1, 2, 5, 14, 42, 132]

    def test_daehee_closed_form(self):
        for n in range(10):
            assert classic_sequence(FamilyTag.DAEHEE, n) == Fraction(
                (-1) ** n * factorial(n), n + 1
            )

    def test_changhee_closed_form(self):
        for n in range(10):
            assert classic_sequence(FamilyTag.CHANGHEE, n) == Fraction(
                (-1) ** n * factorial(n), 2**n
            )


class TestAuxiliaryFamilies:
    @given(
        st.integers(min_value=0, max_value=8),
        st.integers(min_value=0, max_value=8),
        st.sampled_from(TestDeformedFamilies.lams + [Fraction(1)]),
    )
    def test_y1_brute_force(self, n, k, lam):
        expected = sum(
            comb(k, j) * lam**j * (j**n if (j, n) != (0, 0) else 1)
            for j in range(k + 1)
        ) / Fraction(factorial(k))
        assert y1(n, k, lam) == expected

    def test_y_seq_by_rational_expansion(self):
        # long-divide 2/(lam^2 t + lam - 1) by hand for a sample lam
        lam = Fraction(2)
        coeffs = []
        # 2/(4t + 1) = 2 * sum (-4t)^k
        for k in range(6):
            coeffs.append(2 * Fraction(-4) ** k)
        for n, c in enumerate(coeffs):
            assert y_seq(n, lam) == factorial(n) * c

    def test_y_seq_rejects_lambda_one(self):
        with pytest.raises(ValueError):
            y_seq(3, 1)

    def test_legendre_recurrence_and_endpoints(self):
        assert legendre(0) == Poly([1])
        assert legendre(1) == Poly([0, 1])
        for n in range(1, 10):
            lhs = (n + 1) * legendre(n + 1)
            rhs = (2 * n + 1) * Poly.x() * legendre(n) - n * legendre(n - 1)
            assert lhs == rhs
        for n in range(10):
            assert legendre(n)(1) == 1
            assert legendre(n)(-1) == (-1) ** n

    @given(
        st.integers(min_value=0, max_value=6),
        st.integers(min_value=0, max_value=6),
        small_fractions,
    )
    def test_mirimanoff_evaluates_power_sum(self, m, n, x):
        poly = mirimanoff(m, n)
        expected = sum(
            (x**j * (j**m if (j, m) != (0, 0) else 1) for j in range(n)),
            Fraction(0),
        )
        assert poly(x) == expected
