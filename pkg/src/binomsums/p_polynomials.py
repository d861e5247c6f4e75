"""The polynomial family attached to the binomial-power-sum numbers.

Covers the polynomial itself, its raw (un-normalized) summation form, the
Riemann/p-adic linear functionals, closed-form power sums, and the
binomial-square polynomial family with the Euler operator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .classic_numbers import (
    apostol_bernoulli,
    bernoulli_number,
    bernoulli_poly,
    euler_number0,
    euler_poly,
    frobenius_euler,
)
from .exact_core import Poly, Scalar, _frac
from .y6_engine import y6

__all__ = [
    "p_poly",
    "raw_sum_poly",
    "volkenborn",
    "fermionic",
    "power_sum_closed",
    "r_poly",
    "vowe",
    "euler_operator",
    "mirimanoff_frobenius_sum",
]


def p_poly(m: int, n: int, lam: Scalar, p: int) -> Poly:
    """sum_{k=0}^{m} C(m,k) x^{m-k} y6(k,n;lam,p)."""
    lam = _frac(lam)
    return Poly(
        [comb(m, m - i) * y6(m - i, n, lam, p) for i in range(m + 1)]
    )


def raw_sum_poly(m: int, n: int, lam: Scalar, p: int) -> Poly:
    """sum_{j=0}^{n} C(n,j)^p lam^j (x+j)^m, expanded exactly.

    Equals n! times p_poly (the two defining forms differ by that factor).
    """
    lam = _frac(lam)
    acc = Poly()
    lam_j = Fraction(1)
    for j in range(n + 1):
        acc = acc + Fraction(comb(n, j)) ** p * lam_j * Poly([j, 1]) ** m
        lam_j *= lam
    return acc


def volkenborn(q: Poly) -> Fraction:
    """Linear functional x^i -> B_i (Bernoulli numbers) on polynomials."""
    return sum(
        (c * bernoulli_number(i) for i, c in enumerate(q.coeffs)), Fraction(0)
    )


def fermionic(q: Poly) -> Fraction:
    """Linear functional x^i -> E_i(0) (Euler polynomial at 0)."""
    return sum(
        (c * euler_number0(i) for i, c in enumerate(q.coeffs)), Fraction(0)
    )


def power_sum_closed(m: int, upper: int, lam: Scalar) -> Fraction:
    """sum_{j=0}^{upper-1} lam^j j^m via the closed forms.

    lam=1 goes through Bernoulli polynomials, lam=-1 through Euler
    polynomials, and general lam through Apostol-Bernoulli polynomials.
    """
    if upper < 0:
        raise ValueError("upper must be >= 0")
    if upper == 0:
        return Fraction(0)
    lam = _frac(lam)
    if lam == 1:
        b = bernoulli_poly(m + 1)
        return (b(upper) - b(0)) / (m + 1)
    if lam == -1:
        e = euler_poly(m)
        return ((-1) ** (upper - 1) * e(upper) + e(0)) / 2
    b = apostol_bernoulli(m + 1, lam)
    return (lam**upper * b(upper) - b(0)) / (m + 1)


@lru_cache(maxsize=None)
def r_poly(n: int, p: int) -> Poly:
    """(1/n!) sum_k C(n,k)^p x^k."""
    if n < 0 or p < 0:
        raise ValueError("indices must be >= 0")
    return Poly(
        [Fraction(comb(n, k)) ** p for k in range(n + 1)]
    ) / Fraction(factorial(n))


def vowe(n: int) -> Poly:
    """sum_k C(n,k)^2 x^k, i.e. n! times the p=2 member of r_poly."""
    return factorial(n) * r_poly(n, 2)


def euler_operator(q: Poly, iterations: int = 1) -> Poly:
    """Apply x d/dx the given number of times."""
    if iterations < 0:
        raise ValueError("iterations must be >= 0")
    for _ in range(iterations):
        q = Poly.x() * q.derivative()
    return q


def mirimanoff_frobenius_sum(m: int, n: int, x0: Scalar, u: Scalar) -> Fraction:
    """sum_{j=0}^{n-1} u^j (x0+j)^m via Frobenius-Euler polynomials:
    (u^n H_m(x0+n; 1/u) - H_m(x0; 1/u)) / (u - 1)."""
    u = _frac(u)
    if u in (0, 1):
        raise ValueError("u must not be 0 or 1")
    x0 = _frac(x0)
    h = frobenius_euler(m, 1 / u)
    return (u**n * h(x0 + n) - h(x0)) / (u - 1)
