"""Terminating generalized hypergeometric series, evaluated exactly,
and the ordinary-generating-function closed forms for the m = 0 slices
of the binomial-power-sum family."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial

from .exact_core import Scalar, _frac, gamma_half
from .y6_engine import y6

__all__ = [
    "PfqSpec",
    "OgfCase",
    "pfq_terminating",
    "y6_hyper",
    "ogf_series",
    "alternating_square_gamma",
]


@dataclass(frozen=True)
class PfqSpec:
    """Parameter block for pFq: upper/lower parameter lists and argument."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction

    @classmethod
    def of(cls, upper, lower, z) -> "PfqSpec":
        return cls(
            tuple(_frac(a) for a in upper),
            tuple(_frac(b) for b in lower),
            _frac(z),
        )


def _is_nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def pfq_terminating(spec: PfqSpec) -> Fraction:
    """Exact finite sum of a terminating pFq.

    Termination index M is the smallest -a over non-positive-integer upper
    parameters.  Lower parameters that are non-positive integers are only
    allowed when their pole index lies strictly beyond M.
    """
    tops = [-int(a) for a in spec.upper if _is_nonpositive_int(a)]
    if not tops:
        raise ValueError("series does not terminate: no non-positive integer "
                         "upper parameter")
    M = min(tops)
    for b in spec.lower:
        if _is_nonpositive_int(b) and -b < M:
            raise ValueError(f"lower parameter {b} hits its pole before the "
                             f"termination index {M}")
    total = Fraction(0)
    term = Fraction(1)
    for m in range(M + 1):
        total += term
        # ratio from term m to m+1
        num = Fraction(1)
        for a in spec.upper:
            num *= a + m
        den = Fraction(m + 1)
        for b in spec.lower:
            den *= b + m
        if den == 0:
            break  # beyond a lower pole, but only past the last kept term
        term *= spec.z * num / den
    return total


def y6_hyper(n: int, lam: Scalar, p: int) -> Fraction:
    """m = 0 member of the family via its hypergeometric representation:
    (1/n!) pFq with p copies of -n on top, p-1 ones below, argument
    (-1)^p lam."""
    if p < 1:
        raise ValueError("the hypergeometric form needs p >= 1")
    lam = _frac(lam)
    spec = PfqSpec.of([-n] * p, [1] * (p - 1), (-1) ** p * lam)
    return pfq_terminating(spec) / factorial(n)


def alternating_square_gamma(n: int) -> Fraction:
    """sqrt(pi) 2^n / (Gamma((2+n)/2) Gamma((1-n)/2)) with the
    1/Gamma(pole) = 0 convention; always an exact rational."""
    g1 = gamma_half(Fraction(2 + n, 2))
    g2 = gamma_half(Fraction(1 - n, 2))
    if g1.is_pole or g2.is_pole:
        return Fraction(0)
    # One of the two gammas carries the sqrt(pi); it must cancel the
    # explicit sqrt(pi) in the numerator.
    assert g1.sqrt_pi_exponent + g2.sqrt_pi_exponent == 1
    return Fraction(2**n) / (g1.rational_part * g2.rational_part)


class OgfCase(Enum):
    LAM_P0 = "lam_p0"      # f(t; lam; 0, 0)
    LAM_P1 = "lam_p1"      # f(t; lam; 1, 0)
    ONE_P2 = "one_p2"      # f(t; 1; 2, 0)
    MINUS1_P2 = "minus1_p2"  # f(t; -1; 2, 0)


def ogf_series(case: OgfCase, lam: Scalar | None, order: int) -> list[Fraction]:
    """Ordinary coefficients c_0..c_order of the solved closed forms of
    sum_n y6(0,n;lam,p) t^n."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if case is OgfCase.LAM_P0:
        lam = _frac(lam)
        if lam == 1:
            raise ValueError("lambda = 1 is singular for the p = 0 form")
        return [
            (lam ** (n + 1) - 1) / ((lam - 1) * factorial(n))
            for n in range(order + 1)
        ]
    if case is OgfCase.LAM_P1:
        lam = _frac(lam)
        return [(lam + 1) ** n / Fraction(factorial(n)) for n in range(order + 1)]
    if case is OgfCase.ONE_P2:
        return [Fraction(comb(2 * n, n), factorial(n)) for n in range(order + 1)]
    if case is OgfCase.MINUS1_P2:
        return [
            alternating_square_gamma(n) / factorial(n) for n in range(order + 1)
        ]
    raise ValueError(f"unknown case {case!r}")


def ogf_reference(case: OgfCase, lam: Scalar | None, order: int) -> list[Fraction]:
    """The same coefficients straight from the finite sums, for auditing."""
    if case is OgfCase.LAM_P0:
        return [y6(0, n, _frac(lam), 0) for n in range(order + 1)]
    if case is OgfCase.LAM_P1:
        return [y6(0, n, _frac(lam), 1) for n in range(order + 1)]
    if case is OgfCase.ONE_P2:
        return [y6(0, n, Fraction(1), 2) for n in range(order + 1)]
    if case is OgfCase.MINUS1_P2:
        return [y6(0, n, Fraction(-1), 2) for n in range(order + 1)]
    raise ValueError(f"unknown case {case!r}")
