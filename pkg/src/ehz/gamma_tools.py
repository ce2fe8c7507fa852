"""Gamma-function ratios and derivatives through Bell polynomials and the
determinant bracket, reciprocal-gamma Taylor coefficients, and the
asymptotic estimate for Stirling numbers of the first kind.

No general-purpose Gamma evaluator lives here: ratios are exact rational
products, and derivatives are taken only at the two special points 1 and
1/2 where the polygamma values reduce to zeta values.  The symbol zeta(1)
stands for Euler's gamma *only* inside determinant-bracket argument lists,
mirroring the convention the bracket identities require.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import List

import mpmath
from mpmath import mpf

from . import combinatorics
from .harmonic import Hx
from .numerics import (
    DomainError,
    Mode,
    PrecisionContext,
    Real,
    const_gamma,
    const_log2,
    const_pi,
    const_zeta,
    working_precision,
)

__all__ = [
    "RatioForm",
    "gamma_ratio",
    "gamma_ratio_derivative_sides",
    "gamma_deriv_at_1",
    "gamma_deriv_at_1_det",
    "gamma_deriv_at_half",
    "recip_gamma_lambda",
    "wilf_asymptotic",
    "pochhammer_ratio_coeffs",
    "loggamma_taylor",
]


class RatioForm(enum.Enum):
    #: n! / (x (x+1) ... (x+n)) -- the (n+1)-term denominator.
    N_PLUS_1 = "N_PLUS_1"
    #: (n-1)! / (x (x+1) ... (x+n-1)) -- the n-term denominator.
    N = "N"


def gamma_ratio(n: int, x: Fraction, form: RatioForm = RatioForm.N_PLUS_1) -> Fraction:
    """Exact rational gamma ratio g(x) in either denominator form.

    Poles (x a non-positive integer inside the product) raise DomainError.
    The two forms differ exactly by the factor (x + n).
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    x = Fraction(x)
    top = n if form is RatioForm.N_PLUS_1 else n - 1
    if form is RatioForm.N and n < 1:
        raise DomainError("N form requires n >= 1")
    if x.denominator == 1 and -top <= x <= 0:
        raise DomainError(f"pole: x = {x} is a non-positive integer in the product")
    num = math.factorial(n) if form is RatioForm.N_PLUS_1 else math.factorial(n - 1)
    den = Fraction(1)
    for k in range(top + 1):
        den *= x + k
    return num / den


def gamma_ratio_derivative_sides(n: int, x: Fraction):
    """Both sides of g'(x) = -g(x) H_{n+1}(x) for the N_PLUS_1 form.

    The left side differentiates the product form exactly: with
    P(x) = prod (x+k), g = n!/P and g' = -n! P'/P^2, where P' is obtained
    from the expanded polynomial coefficients.  The right side uses the
    telescoped harmonic sum.  Returns (lhs, rhs) as exact rationals.
    """
    x = Fraction(x)
    # expand P(x) = prod_{k=0}^{n} (x + k) exactly
    coeffs = [1]
    for k in range(n + 1):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] += k * c
        coeffs = nxt
    p = sum(Fraction(c) * x**i for i, c in enumerate(coeffs))
    dp = sum(Fraction(i * c) * x ** (i - 1) for i, c in enumerate(coeffs) if i)
    lhs = -math.factorial(n) * dp / p**2
    rhs = -gamma_ratio(n, x, RatioForm.N_PLUS_1) * Hx(n + 1, 1, x)
    return lhs, rhs


def _zeta1_bracket_args(m: int, ctx: PrecisionContext) -> list:
    """[-zeta(1), -zeta(2), ..., -zeta(m)] with zeta(1) read as gamma."""
    args = [-const_gamma(ctx)]
    args += [-const_zeta(k, ctx) for k in range(2, m + 1)]
    return args


def gamma_deriv_at_1(m: int, ctx: PrecisionContext) -> Real:
    """m-th derivative of Gamma at 1 via the complete Bell polynomial.

    Y_m(-gamma, x_1, ..., x_{m-1}) with x_p = (-1)^(p+1) p! zeta(p+1),
    i.e. the successive polygamma values at 1.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    if ctx.mode is Mode.FAST:
        args = [-const_gamma(ctx)]
        args += [
            (-1) ** (p + 1) * math.factorial(p) * const_zeta(p + 1, ctx)
            for p in range(1, m)
        ]
        return combinatorics.bell_eval(args)
    with working_precision(ctx.dps):
        args = [-const_gamma(ctx)]
        args += [
            (-1) ** (p + 1) * math.factorial(p) * const_zeta(p + 1, ctx)
            for p in range(1, m)
        ]
        return +combinatorics.bell_eval(args)


def gamma_deriv_at_1_det(m: int, ctx: PrecisionContext) -> Real:
    """m-th derivative of Gamma at 1 as the banded determinant bracket.

    Independent route from gamma_deriv_at_1; the two must agree to working
    precision.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    if ctx.mode is Mode.FAST:
        return combinatorics.det_bracket(_zeta1_bracket_args(m, ctx))
    with working_precision(ctx.dps):
        return +combinatorics.det_bracket(_zeta1_bracket_args(m, ctx))


def gamma_deriv_at_half(m: int, ctx: PrecisionContext) -> Real:
    """m-th derivative of Gamma at 1/2.

    sqrt(pi) * Y_m(psi(1/2), psi'(1/2), ..., psi^(m-1)(1/2)) with
    psi(1/2) = -gamma - 2 log 2 and
    psi^(p)(1/2) = (-1)^(p+1) p! (2^(p+1) - 1) zeta(p+1).
    """
    if m < 1:
        raise DomainError("m must be >= 1")

    def build():
        psi0 = -const_gamma(ctx) - 2 * const_log2(ctx)
        args = [psi0]
        args += [
            (-1) ** (p + 1)
            * math.factorial(p)
            * (2 ** (p + 1) - 1)
            * const_zeta(p + 1, ctx)
            for p in range(1, m)
        ]
        root_pi = math.sqrt(const_pi(ctx)) if ctx.mode is Mode.FAST else mpmath.sqrt(const_pi(ctx))
        return root_pi * combinatorics.bell_eval(args)

    if ctx.mode is Mode.FAST:
        return build()
    with working_precision(ctx.dps):
        return +build()


def recip_gamma_lambda(j_max: int, ctx: PrecisionContext) -> List[Real]:
    """Taylor coefficients lambda_1..lambda_{j_max} of 1/Gamma(x).

    Built from the recurrence
    lambda_{n+1} = (1/n) [gamma lambda_n
                          + sum_{j=0}^{n-2} (-1)^(n-j-1) zeta(n-j) lambda_{j+1}],
    lambda_1 = 1.  The partial sums of sum lambda_j x^j reproduce
    1/Gamma(x) inside the unit disc.
    """
    if j_max < 1:
        raise DomainError("j_max must be >= 1")

    def build(one):
        g = const_gamma(ctx)
        lam = [one]
        for n in range(1, j_max):
            acc = g * lam[n - 1]
            for j in range(0, n - 1):
                acc += (-1) ** (n - j - 1) * const_zeta(n - j, ctx) * lam[j]
            lam.append(acc / n)
        return lam

    if ctx.mode is Mode.FAST:
        return build(1.0)
    with working_precision(ctx.dps):
        return [+v for v in build(mpf(1))]


def wilf_asymptotic(n: int, k: int, ctx: PrecisionContext) -> Real:
    """Asymptotic estimate of |s(n, k)| / (n-1)! for fixed k >= 2:

    lambda_1 log^(k-1) n/(k-1)! + lambda_2 log^(k-2) n/(k-2)! + ... + lambda_k.
    """
    if n < 3 or k < 2:
        raise DomainError("requires n >= 3 and k >= 2")
    lam = recip_gamma_lambda(k, ctx)
    ln_n = ctx.ln(n)
    if ctx.mode is Mode.FAST:
        total = 0.0
        for i in range(1, k + 1):
            total += lam[i - 1] * ln_n ** (k - i) / math.factorial(k - i)
        return total
    with working_precision(ctx.dps):
        total = mpf(0)
        for i in range(1, k + 1):
            total += lam[i - 1] * ln_n ** (k - i) / math.factorial(k - i)
        return +total


def pochhammer_ratio_coeffs(n: int, u: Fraction, N: int) -> combinatorics.PowerSeriesCoeffs:
    """Exact coefficients of (u+x)_n / (u)_n as a series in x.

    log of the ratio is sum_m (-1)^(m-1) H_n^(m)(u) x^m / m, so the
    coefficients come from the exp recurrence with
    b_m = (-1)^(m-1) H_n^(m)(u).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    u = Fraction(u)
    if u.denominator == 1 and -(n - 1) <= u <= 0:
        raise DomainError(f"pole: u = {u} lies in the rising factorial")
    b = [(-1) ** (m - 1) * Hx(n, m, u) for m in range(1, N + 1)]
    return combinatorics.log_to_exp_series(Fraction(0), b, N)


def loggamma_taylor(N: int, ctx: PrecisionContext) -> combinatorics.PowerSeriesCoeffs:
    """Taylor coefficients of log Gamma(1+x) through x^N.

    Coefficient of x is -gamma; coefficient of x^m for m >= 2 is
    (-1)^m zeta(m)/m.  (The sign alternation starts positive at m = 2:
    + zeta(2)/2 x^2 - zeta(3)/3 x^3 + ...; the numeric checks at
    x = +-1/4 and the reciprocal-series route both confirm this
    convention.)
    """
    if N < 1:
        raise DomainError("N must be >= 1")

    def build(zero):
        coeffs = [zero, -const_gamma(ctx)]
        for m in range(2, N + 1):
            coeffs.append((-1) ** m * const_zeta(m, ctx) / m)
        return coeffs

    if ctx.mode is Mode.FAST:
        return combinatorics.PowerSeriesCoeffs(tuple(build(0.0)))
    with working_precision(ctx.dps):
        return combinatorics.PowerSeriesCoeffs(tuple(+c for c in build(mpf(0))))
