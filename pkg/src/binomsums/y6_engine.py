"""The central binomial-power-sum family and Golombek's B(n,k).

All values are exact; hot paths (the grid audits) are memoized by value,
which is pure caching and safe under concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .classic_numbers import stirling1, stirling2
from .exact_core import EgfSeries, Poly, Scalar, _frac

__all__ = [
    "RationalFunction",
    "y6",
    "y6_egf",
    "bnk",
    "t_poly",
    "b_ogf",
    "moment",
    "franel",
]


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of two polynomials with a Maclaurin expansion when the
    denominator does not vanish at 0."""

    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if not self.denominator:
            raise ZeroDivisionError("zero denominator")

    def series(self, order: int) -> list[Fraction]:
        """Ordinary power-series coefficients c_0..c_order."""
        d = self.denominator.coeffs
        if d[0] == 0:
            raise ZeroDivisionError("denominator vanishes at 0")
        num = self.numerator
        out: list[Fraction] = []
        for n in range(order + 1):
            s = num.coeff(n)
            for k in range(1, n + 1):
                if k < len(d) and d[k]:
                    s -= d[k] * out[n - k]
            out.append(s / d[0])
        return out


@lru_cache(maxsize=None)
def y6(m: int, n: int, lam: Fraction, p: int) -> Fraction:
    """(1/n!) sum_k C(n,k)^p k^m lam^k with 0^0 = 1."""
    if m < 0 or n < 0 or p < 0:
        raise ValueError("indices must be >= 0")
    lam = _frac(lam)
    total = Fraction(0)
    lam_k = Fraction(1)
    for k in range(n + 1):
        km = 1 if m == 0 else k**m
        total += Fraction(comb(n, k)) ** p * km * lam_k
        lam_k *= lam
    return total / factorial(n)


def y6_egf(n: int, lam: Scalar, p: int, order: int) -> EgfSeries:
    """Truncated EGF (1/n!) sum_k C(n,k)^p lam^k e^{kt}.

    Entry m is y6(m, n, lam, p); built through series arithmetic so the
    coefficient/derivative equivalence is an actual cross-check.
    """
    lam = _frac(lam)
    acc = EgfSeries([0] * (order + 1))
    lam_k = Fraction(1)
    for k in range(n + 1):
        acc = acc + EgfSeries.exp(k, order).scale(Fraction(comb(n, k)) ** p * lam_k)
        lam_k *= lam
    return acc.scale(Fraction(1, factorial(n)))


@lru_cache(maxsize=None)
def bnk(d: int, k: int) -> Fraction:
    """Golombek's sum B(d,k) = sum_{j=0}^{k} C(k,j) j^d (0^0 = 1)."""
    if d < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    total = 0
    for j in range(k + 1):
        jd = 1 if d == 0 else j**d
        total += comb(k, j) * jd
    return Fraction(total)


@lru_cache(maxsize=None)
def t_poly(d: int) -> Poly:
    """Polynomial T_d with B(d,k) = 2^{k-d} T_d(k); zero constant term,
    coefficient of k^{d-l} given by sum_{j=l}^{d} s(j,l) S(d,j) 2^{d-j}."""
    if d < 1:
        raise ValueError("T_d is defined for d >= 1")
    coeffs = [Fraction(0)] * (d + 1)
    for l in range(1, d + 1):
        coeffs[l] = sum(
            (stirling1(j, l) * stirling2(d, j) * 2 ** (d - j) for j in range(l, d + 1)),
            Fraction(0),
        )
    return Poly(coeffs)


def b_ogf(d: int) -> RationalFunction:
    """Ordinary generating function of k -> B(d,k) as a single fraction.

    d = 0 gives 1/(1-2x); for d >= 1 the partial-fraction shape
    sum_j j! S(d,j) x^j/(1-2x)^{j+1} is brought over (1-2x)^{d+1}.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    one_m_2x = Poly([1, -2])
    if d == 0:
        return RationalFunction(Poly([1]), one_m_2x)
    num = Poly()
    for j in range(1, d + 1):
        num = num + (
            factorial(j) * stirling2(d, j) * Poly.monomial(j) * one_m_2x ** (d - j)
        )
    return RationalFunction(num, one_m_2x ** (d + 1))


def moment(m: int, p: int, n: int) -> Fraction:
    """Moment sum sum_k C(n,k)^p k^m; integer-valued."""
    value = factorial(n) * y6(m, n, Fraction(1), p)
    assert value.denominator == 1
    return value


def franel(p: int, m: int, n: int, lam: Scalar) -> Fraction:
    """Generalized p-th order Franel numbers n! * y6(m,n;lam,p)."""
    return factorial(n) * y6(m, n, _frac(lam), p)
