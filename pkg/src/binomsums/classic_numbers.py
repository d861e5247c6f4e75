"""Classical number and polynomial families over exact rationals.

Each family is computed from its defining generating function through the
EGF machinery in :mod:`binomsums.exact_core`; the test suite cross-checks
every one of them against an independent recurrence or enumeration oracle.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exact_core import EgfSeries, Poly, Scalar, _frac

__all__ = [
    "FamilyTag",
    "stirling2",
    "stirling1",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_order",
    "euler_poly",
    "euler_poly_order",
    "apostol_bernoulli",
    "apostol_euler",
    "classic_sequence",
    "y1",
    "y_seq",
    "legendre",
    "mirimanoff",
    "frobenius_euler",
]


class FamilyTag(Enum):
    CATALAN = "catalan"
    DAEHEE = "daehee"
    CHANGHEE = "changhee"


# ---------------------------------------------------------------------------
# Stirling numbers

@lru_cache(maxsize=None)
def _expm1_pow(v: int, order: int) -> EgfSeries:
    """(e^t - 1)^v truncated at the given order."""
    base = EgfSeries([0] + [1] * order)
    return base.pow(v)


@lru_cache(maxsize=None)
def stirling2(n: int, v: int) -> Fraction:
    """Stirling numbers of the second kind, from (e^t-1)^v / v!."""
    if n < 0 or v < 0:
        raise ValueError("indices must be >= 0")
    if v > n:
        return Fraction(0)
    return _expm1_pow(v, n).coeffs[n] / factorial(v)


@lru_cache(maxsize=None)
def _log1p_pow(k: int, order: int) -> EgfSeries:
    """(log(1+t))^k truncated at the given order."""
    # log(1+t) = sum (-1)^{n-1} (n-1)! t^n/n!
    coeffs = [Fraction(0)] + [
        Fraction((-1) ** (n - 1) * factorial(n - 1)) for n in range(1, order + 1)
    ]
    return EgfSeries(coeffs).pow(k)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling numbers of the first kind, from (log(1+t))^k / k!."""
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    if k > n:
        return Fraction(0)
    return _log1p_pow(k, n).coeffs[n] / factorial(k)


# ---------------------------------------------------------------------------
# Bernoulli / Euler families of arbitrary integer order

@lru_cache(maxsize=None)
def _bernoulli_order_numbers(k: int, order: int) -> tuple[Fraction, ...]:
    """Coefficients of (t/(e^t-1))^k; negative k uses ((e^t-1)/t)^{-k}."""
    # (e^t-1)/t has EGF coefficients 1/(n+1); its constant term is 1,
    # so both orientations are entire.
    base = EgfSeries([Fraction(1, n + 1) for n in range(order + 1)])
    return base.pow(-k).coeffs


@lru_cache(maxsize=None)
def _euler_order_numbers(k: int, order: int) -> tuple[Fraction, ...]:
    """Coefficients of (2/(e^t+1))^k; negative k uses ((e^t+1)/2)^{-k}."""
    base = EgfSeries([Fraction(1)] + [Fraction(1, 2)] * order)
    return base.pow(-k).coeffs


def _number_poly(numbers: tuple[Fraction, ...], n: int) -> Poly:
    """Appell polynomial sum_j C(n,j) a_j x^{n-j} from a number sequence."""
    return Poly(
        [comb(n, n - i) * numbers[n - i] for i in range(n + 1)]
    )


def bernoulli_poly_order(n: int, k: int) -> Poly:
    """Bernoulli polynomial of order k (k may be negative)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _number_poly(_bernoulli_order_numbers(k, n), n)


def euler_poly_order(n: int, k: int) -> Poly:
    """Euler polynomial of order k (k may be negative)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _number_poly(_euler_order_numbers(k, n), n)


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Classical Bernoulli number B_n (B_1 = -1/2)."""
    return _bernoulli_order_numbers(1, n)[n]


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly:
    return bernoulli_poly_order(n, 1)


@lru_cache(maxsize=None)
def euler_poly(n: int) -> Poly:
    return euler_poly_order(n, 1)


@lru_cache(maxsize=None)
def euler_number0(n: int) -> Fraction:
    """E_n(0), the Euler polynomial at 0 (the 'Euler numbers' of the
    Daehee/Changhee sums)."""
    return _euler_order_numbers(1, n)[n]


# ---------------------------------------------------------------------------
# Apostol deformations and Frobenius-Euler polynomials

@lru_cache(maxsize=None)
def _apostol_bernoulli_numbers(lam: Fraction, order: int) -> tuple[Fraction, ...]:
    # t/(lam*e^t - 1): reciprocal of the denominator, then multiply by t.
    denom = EgfSeries([lam - 1] + [lam] * order)
    r = denom.reciprocal().coeffs
    return tuple(
        Fraction(0) if n == 0 else n * r[n - 1] for n in range(order + 1)
    )


def apostol_bernoulli(n: int, lam: Scalar) -> Poly:
    """Apostol-Bernoulli polynomial from t e^{xt}/(lam e^t - 1)."""
    lam = _frac(lam)
    if lam == 1:
        raise ValueError(
            "lambda = 1 is the classical case; use bernoulli_poly_order"
        )
    return _number_poly(_apostol_bernoulli_numbers(lam, n), n)


@lru_cache(maxsize=None)
def _apostol_euler_numbers(lam: Fraction, order: int) -> tuple[Fraction, ...]:
    denom = EgfSeries([lam + 1] + [lam] * order)
    return denom.reciprocal().scale(2).coeffs


def apostol_euler(n: int, lam: Scalar) -> Poly:
    """Apostol-Euler polynomial from 2 e^{xt}/(lam e^t + 1)."""
    lam = _frac(lam)
    if lam == -1:
        raise ValueError(
            "lambda = -1 is the classical case; use euler_poly_order"
        )
    return _number_poly(_apostol_euler_numbers(lam, n), n)


@lru_cache(maxsize=None)
def _frobenius_euler_numbers(u: Fraction, order: int) -> tuple[Fraction, ...]:
    denom = EgfSeries([1 - u] + [1] * order)
    return denom.reciprocal().scale(1 - u).coeffs


def frobenius_euler(n: int, u: Scalar) -> Poly:
    """Frobenius-Euler polynomial H_n(x; u) from (1-u) e^{xt}/(e^t - u)."""
    u = _frac(u)
    if u == 1:
        raise ValueError("u = 1 is excluded (generating function degenerates)")
    return _number_poly(_frobenius_euler_numbers(u, n), n)


# ---------------------------------------------------------------------------
# Named sequences

def classic_sequence(tag: FamilyTag, n: int) -> Fraction:
    """Catalan, Daehee or Changhee number, each by its defining sum."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if tag is FamilyTag.CATALAN:
        return Fraction(comb(2 * n, n), n + 1)
    if tag is FamilyTag.DAEHEE:
        return sum(
            (bernoulli_number(k) * stirling1(n, k) for k in range(n + 1)),
            Fraction(0),
        )
    if tag is FamilyTag.CHANGHEE:
        return sum(
            (stirling1(n, k) * euler_number0(k) for k in range(n + 1)),
            Fraction(0),
        )
    raise ValueError(f"unknown family {tag!r}")


def y1(n: int, k: int, lam: Scalar) -> Fraction:
    """(1/k!) sum_j C(k,j) j^n lam^j with the 0^0 = 1 convention."""
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    lam = _frac(lam)
    total = Fraction(0)
    for j in range(k + 1):
        jn = 1 if n == 0 else j**n
        total += comb(k, j) * jn * lam**j
    return total / factorial(k)


def y_seq(n: int, lam: Scalar) -> Fraction:
    """Y_n from 2/(lam^2 t + lam - 1), by geometric expansion."""
    lam = _frac(lam)
    if lam == 1:
        raise ValueError("lambda = 1 is a pole of the generating function")
    # 2/(lam-1) * 1/(1 + lam^2 t/(lam-1)); ordinary coefficient times n!.
    term = Fraction(2) / (lam - 1)
    ratio = -(lam**2) / (lam - 1)
    for _ in range(n):
        term *= ratio
    return factorial(n) * term


@lru_cache(maxsize=None)
def legendre(n: int) -> Poly:
    """Legendre polynomial via 2^{-n} sum_k C(n,k)^2 (x-1)^{n-k} (x+1)^k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    xm1 = Poly([-1, 1])
    xp1 = Poly([1, 1])
    acc = Poly()
    for k in range(n + 1):
        acc = acc + comb(n, k) ** 2 * (xm1 ** (n - k)) * (xp1**k)
    return acc / Fraction(2**n)


def mirimanoff(m: int, n: int, shift: int = 0) -> Poly:
    """Power-sum generating polynomial: coefficient of x^j is (j+shift)^m
    for 0 <= j < n (0^0 = 1)."""
    if m < 0 or n < 0 or shift < 0:
        raise ValueError("indices must be >= 0")
    return Poly(
        [1 if m == 0 else (j + shift) ** m for j in range(n)]
    )
