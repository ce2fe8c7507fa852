"""Floating-point evaluators for the zeta-function series families:

* Hasse-style globally convergent double sums for zeta(s, x),
* the alternating (eta) double sums with geometric outer weights,
* the two Bell-polynomial single series for zeta(q+1, x) -- one whose
  arguments are shifted harmonic numbers H_n^(m)(x) and one whose
  arguments are the plain H_{n-1}^(m) with alternating signs,
* the Stirling-number series for zeta(p+1),
* mixed series combining plain and shifted harmonic numbers,
* nonlinear Euler-sum partial sums, central-binomial series for Catalan's
  constant and zeta(2), polylogarithm identities and digamma-weighted sums.

Every evaluator returns a :class:`SeriesResult` carrying the partial sum,
the term budget actually honoured, and an analytic tail estimate (integral
surrogates of the form  integral (log t + c)^d t^(-1-a) dt,  self-calibrated
from the final term so no per-formula constants need tuning; geometric
series use twice the final term).  Summation is ascending-index with
compensated accumulation, so results are bit-reproducible per context.

Gamma-ratio factors are never computed from a Gamma evaluator: the exact
recurrence R_{n+1} = R_n n/(n+x), seeded from R_1 = 1/x, is used
throughout.  Inner alternating binomial sums are computed exactly (integer
s) or at cancellation-guarded precision (non-integer s); FAST-mode doubles
would lose everything to terms as large as C(n, n/2).
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mpf

from . import combinatorics
from .numerics import (
    DomainError,
    Mode,
    NeumaierSum,
    PrecisionContext,
    Real,
    SeriesResult,
    const_catalan,
    const_gamma,
    const_log2,
    const_pi,
    const_zeta,
    hurwitz_zeta_em,
    working_precision,
)

__all__ = [
    "Formula",
    "EvalRequest",
    "ConvergenceRow",
    "MixedKind",
    "EulerSumKind",
    "CatalanKind",
    "PolylogIdentity",
    "hurwitz_ref",
    "hasse_hurwitz",
    "sondow_alt",
    "alt_hurwitz",
    "euler_hurwitz",
    "stirling_route",
    "shen_series",
    "mixed_q",
    "euler_sum_partial",
    "euler_sum_target",
    "catalan_series",
    "polylog",
    "polylog_identity_check",
    "digamma_half_sum",
    "digamma_half_target",
    "euler_hurwitz_exact_terms",
    "stirling_route_exact_terms",
    "convergence_table",
    "fit_convergence_exponent",
    "evaluate",
    "reference_value",
    "NONINTEGER_S_TERM_CAP",
]

#: Row cap for non-integer s in the Hasse/eta double sums: the inner
#: binomial sums need about 0.302*n extra digits to absorb cancellation.
NONINTEGER_S_TERM_CAP = 400


class Formula(enum.Enum):
    HASSE = "hasse"
    HASSE_HURWITZ = "hasse-hurwitz"
    SONDOW_ALT = "sondow-alt"
    ALT_HURWITZ = "alt-hurwitz"
    EULER_HURWITZ = "euler-hurwitz"
    STIRLING_ROUTE = "stirling-route"
    SHEN = "shen"
    MIXED_Q = "mixed-q"
    CATALAN_RAMANUJAN = "catalan-ramanujan"
    CATALAN_CENTRAL = "catalan-central"
    ZETA2_DUP = "zeta2-dup"
    ZETA3_HALF = "zeta3-half"
    POLYLOG_14_3 = "polylog-14-3"
    POLYLOG_14_4 = "polylog-14-4"
    DIGAMMA_HALF_SUM = "digamma-half-sum"


class MixedKind(enum.Enum):
    Z4_457 = "Z4_457"
    Z5_457B = "Z5_457b"
    Z6_459 = "Z6_459"


class EulerSumKind(enum.Enum):
    E41 = "E41"
    E43 = "E43"
    E43_2 = "E43_2"
    E45_8 = "E45_8"
    E45_10 = "E45_10"
    ALT2 = "ALT2"
    ALT3 = "ALT3"
    ALT4 = "ALT4"
    ALT5 = "ALT5"


class CatalanKind(enum.Enum):
    RAMANUJAN_38 = "RAMANUJAN_38"
    CENTRAL_38_1 = "CENTRAL_38_1"
    ZETA2_37 = "ZETA2_37"
    ZETA3_HALF_45_6 = "ZETA3_HALF_45_6"


class PolylogIdentity(enum.Enum):
    E14_3 = "E14_3"
    E14_4 = "E14_4"


@dataclass(frozen=True)
class EvalRequest:
    """One series-evaluation request as issued by the CLI or benchmarks."""

    formula: Formula
    s_or_q: object = None
    x: Optional[Fraction] = None
    N: int = 1000
    ctx: PrecisionContext = PrecisionContext()

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("N must be >= 1")


@dataclass(frozen=True)
class ConvergenceRow:
    N: int
    partial: Real
    reference: Real
    abs_error: Real
    rel_error: Real
    elapsed_seconds: float


# ----------------------------------------------------------------------
# Tail surrogates.
# ----------------------------------------------------------------------


def _log_tail_integral(d: int, a: float, N: int, c: float) -> float:
    """integral_N^inf (log t + c)^d t^(-1-a) dt, closed form."""
    lnc = math.log(N) + c
    total = 0.0
    jfact = 1.0
    for j in range(d + 1):
        if j:
            jfact *= j
        total += math.comb(d, j) * lnc ** (d - j) * jfact / a ** (j + 1)
    return N ** (-a) * total


def _tail_from_last(t_last: float, N: int, a: float, d: int, c: float) -> float:
    """Tail of a series whose terms behave like (log n + c)^d n^(-1-a),

    scaled so the model reproduces the final computed term exactly.
    """
    t_last = abs(t_last)
    if t_last == 0.0:
        return 0.0
    lnc = math.log(N) + c
    if lnc <= 0.0:
        lnc = 1.0
        c = lnc - math.log(N)
    scale = t_last * N ** (1.0 + a) / lnc**d
    return scale * _log_tail_integral(d, a, N, c)


def _spec_euler_tail(N: int, d: int) -> float:
    """integral_N^inf (log t + 1)^d / t^2 dt -- the fixed surrogate for the
    nonlinear Euler sums at x = 1."""
    return _log_tail_integral(d, 1.0, N, 1.0)


# ----------------------------------------------------------------------
# Reference oracle.
# ----------------------------------------------------------------------


def hurwitz_ref(s, x, ctx: PrecisionContext) -> Real:
    """Reference zeta(s, x) for real s > 1, x > 0 (Euler--Maclaurin).

    Accurate to 10^-(digits-2); used as the comparison oracle for every
    convergence benchmark.
    """
    return hurwitz_zeta_em(s, x, ctx)


# ----------------------------------------------------------------------
# Exact inner machinery shared by the double sums.
# ----------------------------------------------------------------------


def _coppo_inner_exact(q: int, x: Fraction) -> Iterator[Tuple[int, Fraction, Fraction]]:
    """Yield (n, inner_n, H1) where inner_n = sum_k C(n,k)(-1)^k (k+x)^-q.

    Uses the closed form (gamma ratio times Bell polynomial of shifted
    harmonic numbers), maintained incrementally; exactly equal to the
    brute-force binomial sum, which the identity registry certifies.
    """
    x = Fraction(x)
    facts = [math.factorial(j) for j in range(max(q, 1))]
    hs = [Fraction(0)] * (q - 1)
    ratio = Fraction(1)
    n = 0
    while True:
        inv = Fraction(1, 1) / (n + x)
        p = inv
        for j in range(q - 1):
            hs[j] += p
            p *= inv
        ratio = ratio / x if n == 0 else ratio * n / (x + n)
        if q == 1:
            inner = ratio
            h1 = Fraction(0)
        else:
            args = [facts[j] * hs[j] for j in range(q - 1)]
            y = combinatorics.bell_eval(args)
            inner = ratio * y / facts[q - 1]
            h1 = hs[0]
        yield n, Fraction(inner), h1
        n += 1


def _poly_inner_exact(p: int, x: Fraction, n: int) -> Fraction:
    """sum_k C(n,k)(-1)^k (k+x)^p for integer p >= 0 (vanishes for n > p)."""
    if n > p:
        return Fraction(0)
    total = Fraction(0)
    for k in range(n + 1):
        total += (-1) ** k * math.comb(n, k) * (k + x) ** p
    return total


def _inner_rows_float(s_power, x: Fraction, N: int, ctx: PrecisionContext) -> list:
    """Rows of sum_k C(n,k)(-1)^k (k+x)^(-s_power) for n < N, non-integer s.

    Computed at ctx.digits + 0.302 N guard digits; the binomial growth
    C(n, n/2) ~ 2^n is what the guard absorbs.
    """
    if N > NONINTEGER_S_TERM_CAP:
        raise DomainError(
            f"non-integer exponents cap the term budget at {NONINTEGER_S_TERM_CAP}"
        )
    guard = ctx.digits + int(0.302 * N) + 10
    rows = []
    with working_precision(guard):
        xv = mpf(x.numerator) / x.denominator
        sp = mpf(s_power)
        phi = [(k + xv) ** (-sp) for k in range(N)]
        for n in range(N):
            c = mpf(1)
            acc = phi[0]
            for k in range(1, n + 1):
                c = c * (n - k + 1) / k
                acc += (c if k % 2 == 0 else -c) * phi[k]
            rows.append(+acc)
    return rows


# ----------------------------------------------------------------------
# Series evaluators.
# ----------------------------------------------------------------------


def _finish(ctx: PrecisionContext, acc: NeumaierSum, N: int, tail: float) -> SeriesResult:
    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            value = +acc.total
        if not isinstance(value, mpmath.mpf):
            value = ctx.real(value)
    else:
        value = acc.total
    return SeriesResult(value=value, terms_used=N, tail_estimate=abs(tail), mode=ctx.mode)


def _require_positive_x(x) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise DomainError("x must be a positive rational")
    return x


def _bell_low_order(q: int, h: Sequence[float], signed: bool):
    """Y_{q-1} of the harmonic Bell arguments, explicit for q <= 5.

    Arguments are (j-1)! h_j, with alternating signs when ``signed``.
    """
    if q == 1:
        return 1.0 if isinstance(h[0], float) else h[0] * 0 + 1
    h1 = h[0]
    if q == 2:
        return h1
    if signed:
        if q == 3:
            return h1 * h1 - h[1]
        if q == 4:
            return h1 * (h1 * h1 - 3 * h[1]) + 2 * h[2]
        if q == 5:
            h2 = h[1]
            return (
                h1 * h1 * (h1 * h1 - 6 * h2)
                + 8 * h1 * h[2]
                + 3 * h2 * h2
                - 6 * h[3]
            )
    else:
        if q == 3:
            return h1 * h1 + h[1]
        if q == 4:
            return h1 * (h1 * h1 + 3 * h[1]) + 2 * h[2]
        if q == 5:
            h2 = h[1]
            return (
                h1 * h1 * (h1 * h1 + 6 * h2)
                + 8 * h1 * h[2]
                + 3 * h2 * h2
                + 6 * h[3]
            )
    args = []
    fact = 1
    for j in range(1, q):
        if j > 1:
            fact *= j - 1
        val = fact * h[j - 1]
        if signed and j % 2 == 0:
            val = -val
        args.append(val)
    return combinatorics.bell_eval(args)


def euler_hurwitz(q: int, x, N: int, ctx: PrecisionContext) -> SeriesResult:
    """zeta(q+1, x) by the Bell series in shifted harmonic numbers:

    (1/q!) sum_{n>=1} (1/n) R_n(x) Y_{q-1}(0! H_n(x), ..., (q-2)! H_n^(q-1)(x))
    with R_n(x) the exact-recurrence gamma ratio.
    """
    if not isinstance(q, int) or q < 1:
        raise DomainError("q must be an integer >= 1")
    x = _require_positive_x(x)

    def run() -> SeriesResult:
        xv = ctx.real(x)
        R = ctx.real(Fraction(1) / x)
        inv_qfact = ctx.real(Fraction(1, math.factorial(q)))
        h = [xv * 0] * max(q - 1, 1)
        acc = NeumaierSum(xv * 0)
        term = xv * 0
        for n in range(1, N + 1):
            if n > 1:
                R = R * (n - 1) / (n - 1 + xv)
            base = 1 / (n - 1 + xv)
            p = base
            for j in range(q - 1):
                h[j] = h[j] + p
                p = p * base
            y = _bell_low_order(q, h, signed=False)
            term = inv_qfact * R * y / n
            acc.add(term)
        c = float(h[0]) - math.log(N) if q > 1 else 0.0
        tail = _tail_from_last(float(term), N, float(x), q - 1, c)
        return _finish(ctx, acc, N, tail)

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def stirling_route(q: int, x, N: int, ctx: PrecisionContext) -> SeriesResult:
    """zeta(q+1, x) by the Bell series in *unshifted* harmonic numbers:

    (1/(q-1)!) sum (1/n) R_n(x)
        Y_{q-1}(H_{n-1}, -1! H_{n-1}^(2), ..., (-1)^q (q-2)! H_{n-1}^(q-1));
    the Bell arguments carry no x dependence at all.
    """
    if not isinstance(q, int) or q < 1:
        raise DomainError("q must be an integer >= 1")
    x = _require_positive_x(x)

    def run() -> SeriesResult:
        xv = ctx.real(x)
        R = ctx.real(Fraction(1) / x)
        inv_fact = ctx.real(Fraction(1, math.factorial(q - 1)))
        h = [xv * 0] * max(q - 1, 1)
        acc = NeumaierSum(xv * 0)
        term = xv * 0
        for n in range(1, N + 1):
            if n > 1:
                R = R * (n - 1) / (n - 1 + xv)
            y = _bell_low_order(q, h, signed=True)  # H_{n-1}: update after
            term = inv_fact * R * y / n
            acc.add(term)
            p = 1.0 / n if isinstance(xv, float) else mpf(1) / n
            for j in range(q - 1):
                h[j] = h[j] + p
                p = p / n
        c = float(h[0]) - math.log(N) if q > 1 else 0.0
        t_for_tail = float(term)
        if t_for_tail == 0.0:  # the q > 1 series starts with vanishing terms
            t_for_tail = float(R) / max(N, 1)
        tail = _tail_from_last(t_for_tail, N, float(x), q - 1, c)
        return _finish(ctx, acc, N, tail)

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def euler_hurwitz_exact_terms(q: int, x, N: int) -> List[Fraction]:
    """First N terms of the euler_hurwitz series as exact rationals.

    Term m equals (1/q!) (1/m) R_m(x) Y_{q-1}(...H_m^(j)(x)...); also the
    reindexed rows of the Hasse double sum with exact inner sums.
    """
    x = Fraction(x)
    out = []
    for n, inner, _h1 in _coppo_inner_exact(q, x):
        if n >= N:
            break
        out.append(Fraction(inner, (n + 1) * q))
    return out


def stirling_route_exact_terms(q: int, x, N: int) -> List[Fraction]:
    """First N terms of the stirling_route series as exact rationals."""
    from .harmonic import H as H_exact

    x = Fraction(x)
    fact = math.factorial(q - 1)
    ratio = Fraction(1)
    out = []
    for n in range(1, N + 1):
        ratio = ratio / x if n == 1 else ratio * (n - 1) / (x + n - 1)
        args = [
            (-1) ** (j - 1) * math.factorial(j - 1) * H_exact(n - 1, j)
            for j in range(1, q)
        ]
        y = combinatorics.bell_eval(args) if args else 1
        out.append(Fraction(ratio * y, n * fact))
    return out


def hasse_hurwitz(s, x, N: int, ctx: PrecisionContext) -> SeriesResult:
    """The globally convergent double sum for zeta(s, x), s != 1:

    (1/(s-1)) sum_{n=0}^{N-1} (1/(n+1)) sum_k C(n,k) (-1)^k (k+x)^(1-s).

    Integer s: inner sums are exact rationals rounded once per row.
    Non-integer s: inner sums are computed with cancellation guard digits
    (term budget capped); below s = 1 convergence is empirical and the
    tail estimate is the last-row magnitude.
    """
    x = Fraction(x)
    if x <= 0:
        raise DomainError("x must be a positive rational")
    s_is_int = isinstance(s, int) or (isinstance(s, float) and s.is_integer())
    if (s_is_int and int(s) == 1) or (not s_is_int and float(s) == 1.0):
        raise DomainError("s = 1 is the pole of zeta(s, x)")

    def run() -> SeriesResult:
        acc = NeumaierSum(ctx.zero())
        last_row = 0.0
        if s_is_int:
            si = int(s)
            if si >= 2:
                q = si - 1
                inv = Fraction(1, si - 1)
                h1 = Fraction(0)
                for n, inner, h1 in _coppo_inner_exact(q, x):
                    if n >= N:
                        break
                    row = ctx.real(inv * inner / (n + 1))
                    acc.add(row)
                    last_row = float(row)
                offset_c = float(h1) - math.log(N) if q > 1 else 0.0
                tail = _tail_from_last(last_row, N, float(x), q - 1, offset_c)
            else:
                p = 1 - si  # inner is a degree-p polynomial sum; zero for n > p
                inv = Fraction(1, si - 1)
                for n in range(min(N, p + 1)):
                    row = ctx.real(inv * _poly_inner_exact(p, x, n) / (n + 1))
                    acc.add(row)
                    last_row = float(row)
                tail = 0.0 if N > p else abs(last_row)
            return _finish(ctx, acc, N, tail)
        sf = float(s)
        rows = _inner_rows_float(sf - 1, x, N, ctx)
        inv = 1 / (mpf(s) - 1) if ctx.mode is Mode.HIGH else 1.0 / (sf - 1.0)
        for n, r in enumerate(rows):
            row = inv * (r if ctx.mode is Mode.HIGH else float(r)) / (n + 1)
            acc.add(row)
            last_row = abs(float(row))
        if sf > 1:
            d = max(int(math.ceil(sf)) - 2, 0)
            tail = _tail_from_last(last_row, N, float(x), d, 1.0)
        else:
            tail = last_row
        return _finish(ctx, acc, N, tail)

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def _eta_double_sum(s, x: Fraction, N: int, ctx: PrecisionContext) -> SeriesResult:
    """sum_n 2^-(n+1) sum_k C(n,k)(-1)^k (k+x)^-s with geometric tail."""
    s_is_int = isinstance(s, int) or (isinstance(s, float) and s.is_integer())

    def run() -> SeriesResult:
        acc = NeumaierSum(ctx.zero())
        last = 0.0
        if s_is_int:
            si = int(s)
            if si >= 1:
                w = Fraction(1, 2)
                for n, inner, _h1 in _coppo_inner_exact(si, x):
                    if n >= N:
                        break
                    row = ctx.real(w * inner)
                    acc.add(row)
                    last = float(row)
                    w /= 2
            else:
                p = -si
                w = Fraction(1, 2)
                for n in range(min(N, p + 1)):
                    acc.add(ctx.real(w * _poly_inner_exact(p, x, n)))
                    w /= 2
        else:
            rows = _inner_rows_float(s, x, N, ctx)
            w = mpf(1) / 2 if ctx.mode is Mode.HIGH else 0.5
            for r in rows:
                row = w * (r if ctx.mode is Mode.HIGH else float(r))
                acc.add(row)
                last = abs(float(row))
                w /= 2
        return _finish(ctx, acc, N, 2.0 * abs(last))

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def sondow_alt(s, N: int, ctx: PrecisionContext) -> SeriesResult:
    """Alternating zeta (Dirichlet eta) by the binomial double sum."""
    if float(s) <= 0:
        raise DomainError("s must be > 0")
    return _eta_double_sum(s, Fraction(1), N, ctx)


def alt_hurwitz(s, x, N: int, ctx: PrecisionContext) -> SeriesResult:
    """Alternating Hurwitz zeta sum_n (-1)^n (n+x)^-s by the double sum."""
    if float(s) <= 0:
        raise DomainError("s must be > 0")
    x = _require_positive_x(x)
    return _eta_double_sum(s, x, N, ctx)


def shen_series(p: int, N: int, ctx: PrecisionContext) -> SeriesResult:
    """zeta(p+1) = (-1)^p sum_k (-1)^k s(k,p) / (k k!), exact Stirling data.

    The signed terms are all positive; the unsigned Stirling column is
    maintained by the integer recurrence u(k+1, j) = u(k, j-1) + k u(k, j).
    """
    if not isinstance(p, int) or p < 1:
        raise DomainError("p must be an integer >= 1")

    def run() -> SeriesResult:
        acc = NeumaierSum(ctx.zero())
        u = [0] * (p + 1)
        u[1] = 1  # |s(1, 1)|
        kfact = 1
        term_f = 0.0
        for k in range(1, N + 1):
            if k > 1:
                kfact *= k
            denom = k * kfact
            if ctx.mode is Mode.FAST:
                term = u[p] / denom
            else:
                term = mpf(u[p]) / denom
            acc.add(term)
            term_f = float(term)
            nxt = [0] * (p + 1)
            for j in range(1, p + 1):
                nxt[j] = u[j - 1] + k * u[j]
            u = nxt
        tail = _tail_from_last(term_f, N, 1.0, p - 1, 1.0)
        return _finish(ctx, acc, N, tail)

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def mixed_q(kind: MixedKind, x, N: int, ctx: PrecisionContext) -> SeriesResult:
    """The mixed series for zeta(4, x), zeta(5, x), zeta(6, x) whose terms
    couple the x-free factor [n H_n - 1] with shifted harmonic numbers:

    zeta(4,x) = (1/3)  sum [n H_n - 1] H_n(x) R_n(x) / n^2
    zeta(5,x) = (2/4!) sum [n H_n - 1] (H_n(x)^2 + H_n^(2)(x)) R_n(x) / n^2
    zeta(6,x) = (1/60) sum [n H_n - 1] (H_n(x)^3 + 3 H_n(x) H_n^(2)(x)
                                         + 2 H_n^(3)(x)) R_n(x) / n^2

    (The zeta(6, x) bracket carries coefficient 2 on H_n^(3)(x): it is the
    derivative of the zeta(5, x) bracket under d/dx H^(m) = -m H^(m+1).)
    """
    if not isinstance(kind, MixedKind):
        raise DomainError("unknown mixed-series kind")
    x = _require_positive_x(x)

    def run() -> SeriesResult:
        xv = ctx.real(x)
        one = xv * 0 + 1
        R = ctx.real(Fraction(1) / x)
        H = xv * 0
        h1 = xv * 0
        h2 = xv * 0
        h3 = xv * 0
        acc = NeumaierSum(xv * 0)
        if kind is MixedKind.Z4_457:
            pref, d = one / 3, 2
        elif kind is MixedKind.Z5_457B:
            pref, d = one * 2 / 24, 3
        else:
            pref, d = one / 60, 4
        term = xv * 0
        for n in range(1, N + 1):
            if n > 1:
                R = R * (n - 1) / (n - 1 + xv)
            base = 1 / (n - 1 + xv)
            h1 = h1 + base
            h2 = h2 + base * base
            h3 = h3 + base * base * base
            H = H + one / n
            if kind is MixedKind.Z4_457:
                bracket = h1
            elif kind is MixedKind.Z5_457B:
                bracket = h1 * h1 + h2
            else:
                bracket = h1 * (h1 * h1 + 3 * h2) + 2 * h3
            term = pref * (n * H - 1) * bracket * R / (n * n)
            acc.add(term)
        c = max(float(H) - math.log(N), float(h1) - math.log(N))
        tail = _tail_from_last(float(term), N, float(x), d, c)
        return _finish(ctx, acc, N, tail)

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


_EULER_SUM_DEGREE = {
    EulerSumKind.E41: 2,
    EulerSumKind.E43: 3,
    EulerSumKind.E43_2: 4,
    EulerSumKind.E45_8: 3,
    EulerSumKind.E45_10: 4,
}


def euler_sum_partial(kind: EulerSumKind, N: int, ctx: PrecisionContext) -> SeriesResult:
    """Partial sums of the named nonlinear Euler sums (x = 1 family).

    The E-kinds return the unnormalized combinations whose limits are
    3! zeta(4), 4! zeta(5), 5! zeta(6), 12 zeta(5) and (1/2) 5! zeta(6);
    the ALT-kinds return the alternating-zeta series with 1/(n 2^n)
    weights, whose limits are eta(2)..eta(5).  Tail estimates use the
    analytic surrogate  integral (log t + 1)^d / t^2  for the E-kinds
    (d the harmonic-power degree) and twice the last term for the
    geometric ALT-kinds.
    """
    if not isinstance(kind, EulerSumKind):
        raise DomainError("unknown Euler-sum kind")

    def run() -> SeriesResult:
        acc = NeumaierSum(ctx.zero())
        one = ctx.zero() + 1
        H = H2 = H3 = H4 = ctx.zero()
        last = 0.0
        two_n = one  # 2^n, geometric kinds only
        for n in range(1, N + 1):
            H = H + one / n
            H2 = H2 + one / (n * n)
            H3 = H3 + one / (n * n * n)
            if kind in (EulerSumKind.E43_2, EulerSumKind.ALT5):
                H4 = H4 + one / (n * n * n * n)
            if kind is EulerSumKind.E41:
                term = (H * H + H2) / (n * n)
            elif kind is EulerSumKind.E43:
                term = (H * (H * H + 3 * H2) + 2 * H3) / (n * n)
            elif kind is EulerSumKind.E43_2:
                term = (
                    H * H * (H * H + 6 * H2) + 8 * H * H3 + 3 * H2 * H2 + 6 * H4
                ) / (n * n)
            elif kind is EulerSumKind.E45_8:
                term = (H * (H * H + H2)) / (n * n) - (H * H + H2) / (n * n * n)
            elif kind is EulerSumKind.E45_10:
                term = (H * H * (H * H + 3 * H2) + 2 * H * H3) / (n * n) - (
                    H * (H * H + 3 * H2) + 2 * H3
                ) / (n * n * n)
            else:
                two_n = two_n * 2
                w = one / (n * two_n)
                if kind is EulerSumKind.ALT2:
                    term = H * w
                elif kind is EulerSumKind.ALT3:
                    term = (H * H + H2) * w / 2
                elif kind is EulerSumKind.ALT4:
                    term = (H * (H * H + 3 * H2) + 2 * H3) * w / 6
                else:
                    term = (
                        (H * H * (H * H + 6 * H2) + 8 * H * H3 + 3 * H2 * H2 + 6 * H4)
                        * w
                        / 24
                    )
            acc.add(term)
            last = float(term)
        if kind in _EULER_SUM_DEGREE:
            tail = _spec_euler_tail(N, _EULER_SUM_DEGREE[kind])
        else:
            tail = 2.0 * abs(last)
        return _finish(ctx, acc, N, tail)

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def euler_sum_target(kind: EulerSumKind, ctx: PrecisionContext) -> Real:
    """Limit of the corresponding euler_sum_partial series."""
    if kind is EulerSumKind.E41:
        return 6 * const_zeta(4, ctx)
    if kind is EulerSumKind.E43:
        return 24 * const_zeta(5, ctx)
    if kind is EulerSumKind.E43_2:
        return 120 * const_zeta(6, ctx)
    if kind is EulerSumKind.E45_8:
        return 12 * const_zeta(5, ctx)
    if kind is EulerSumKind.E45_10:
        return 60 * const_zeta(6, ctx)
    s = {EulerSumKind.ALT2: 2, EulerSumKind.ALT3: 3, EulerSumKind.ALT4: 4, EulerSumKind.ALT5: 5}[kind]
    return (1 - ctx.real(Fraction(2)) ** (1 - s)) * const_zeta(s, ctx)


def catalan_series(kind: CatalanKind, N: int, ctx: PrecisionContext) -> SeriesResult:
    """Central-binomial series: two for Catalan's G, the duplication-formula
    series for zeta(2), and the zeta(3, 1/2) series.

    Term ratios are exact small integers, applied multiplicatively; one
    rounding per step.  Normalized values are returned (targets G, zeta(2),
    7 zeta(3)).
    """
    if not isinstance(kind, CatalanKind):
        raise DomainError("unknown catalan-series kind")

    def run() -> SeriesResult:
        acc = NeumaierSum(ctx.zero())
        one = ctx.zero() + 1
        last = 0.0
        if kind is CatalanKind.RAMANUJAN_38:
            quarter_pi = const_pi(ctx) / 4
            b = one  # C(2n,n)^2 / 2^(4n)
            for n in range(N):
                term = quarter_pi * b / (2 * n + 1)
                acc.add(term)
                last = float(term)
                b = b * ((2 * n + 1) * (2 * n + 1)) / (4 * (n + 1) * (n + 1))
            tail = _tail_from_last(last, N, 1.0, 0, 0.0)
            return _finish(ctx, acc, N, tail)
        if kind is CatalanKind.CENTRAL_38_1:
            c = one * 2  # 2^(2n+1) (n!)^2 / (2n+1)!
            for n in range(N):
                term = c / (4 * (2 * n + 1))
                acc.add(term)
                last = float(term)
                c = c * (2 * (n + 1)) / (2 * n + 3)
            tail = _tail_from_last(last, N, 0.5, 0, 0.0)
            return _finish(ctx, acc, N, tail)
        if kind is CatalanKind.ZETA2_37:
            c = one * 2
            for n in range(N):
                term = c / (3 * (n + 1))
                acc.add(term)
                last = float(term)
                c = c * (2 * (n + 1)) / (2 * n + 3)
            tail = _tail_from_last(last, N, 0.5, 0, 0.0)
            return _finish(ctx, acc, N, tail)
        # ZETA3_HALF_45_6: (1/2) sum [n H_n - 1]/n^2 * [2^n Gamma(n)]^2/Gamma(2n)
        R = one * 2  # equals R_n(1/2); the bracketed factor is 2 R_n
        H = ctx.zero()
        term = ctx.zero()
        for n in range(1, N + 1):
            if n > 1:
                R = R * (n - 1) / (n - 1 + 0.5)
            H = H + one / n
            term = (n * H - 1) * R / (n * n)
            acc.add(term)
        c_off = float(H) - math.log(N)
        tail = _tail_from_last(float(term), N, 0.5, 1, c_off)
        return _finish(ctx, acc, N, tail)

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def polylog(s, y, ctx: PrecisionContext) -> Real:
    """Li_s(y) for |y| < 1 by direct summation with a geometric tail cut."""
    yf = float(y)
    if not abs(yf) < 1.0:
        raise DomainError("polylog requires |y| < 1")
    if yf == 0.0:
        return ctx.zero()
    digits = 17 if ctx.mode is Mode.FAST else ctx.digits
    N = int((digits + 4) / -math.log10(abs(yf))) + 4

    def run():
        yv = ctx.real(Fraction(y) if isinstance(y, (int, Fraction)) else y)
        sv = ctx.real(s)
        acc = NeumaierSum(yv * 0)
        p = yv * 0 + 1
        for k in range(1, N + 1):
            p = p * yv
            acc.add(p / (k ** sv if not float(s).is_integer() else k ** int(s)))
        return acc.total

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return +run()
    return run()


def polylog_identity_check(
    which: PolylogIdentity, s: int, y, N: int, ctx: PrecisionContext
) -> Tuple[Real, Real]:
    """Partial LHS and closed-form RHS of the two polylog double-sum
    identities, at rational y in (0, 1/2].

    E14_3: sum (1/n^2) sum_k C(n,k)(-1)^k y^k/k^s
           -> -(s+1) Li_{s+2}(y) + log(y) Li_{s+1}(y)
    E14_4: sum (1/(n 2^n)) sum_k C(n,k) y^k/k^s -> Li_{s+1}(y)

    Inner sums are exact rationals (the alternating one cancels
    catastrophically in floats), rounded once per row.
    """
    res, rhs = _polylog_identity(which, s, y, N, ctx)
    return res.value, rhs


def _polylog_identity(
    which: PolylogIdentity, s: int, y, N: int, ctx: PrecisionContext
) -> Tuple[SeriesResult, Real]:
    if not isinstance(s, int) or s < 1:
        raise DomainError("s must be an integer >= 1")
    y = Fraction(y)
    if not 0 < y <= Fraction(1, 2):
        raise DomainError("identity checks require rational y in (0, 1/2]")

    def lhs_exact_rows() -> Iterator[Fraction]:
        alternating = which is PolylogIdentity.E14_3
        two_n = 1
        for n in range(1, N + 1):
            two_n *= 2
            inner = Fraction(0)
            c = 1
            yk = Fraction(1)
            for k in range(1, n + 1):
                c = c * (n - k + 1) // k
                yk *= y
                t = Fraction(c, k**s) * yk
                inner += -t if (alternating and k % 2) else t
            yield inner / n**2 if alternating else inner / (n * two_n)

    def run():
        acc = NeumaierSum(ctx.zero())
        last = 0.0
        for row in lhs_exact_rows():
            acc.add(ctx.real(row))
            last = abs(float(row))
        if which is PolylogIdentity.E14_3:
            rhs_hi = PrecisionContext(ctx.digits, Mode.HIGH)
            with working_precision(rhs_hi.dps):
                rhs = -(s + 1) * polylog(s + 2, y, rhs_hi) + mpmath.ln(
                    mpf(y.numerator) / y.denominator
                ) * polylog(s + 1, y, rhs_hi)
                rhs = +rhs
            rhs = rhs if ctx.mode is Mode.HIGH else float(rhs)
            tail = _tail_from_last(last, N, 1.0, 1, 1.0)
        else:
            rhs = polylog(s + 1, y, ctx)
            tail = 2.0 * last
        result = _finish(ctx, acc, N, tail)
        return result, rhs

    if which not in (PolylogIdentity.E14_3, PolylogIdentity.E14_4):
        raise DomainError("unknown polylog identity")
    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def digamma_half_sum(power: int, N: int, ctx: PrecisionContext) -> SeriesResult:
    """sum_{n=0}^{N-1} psi(n + 1/2) / (2n+1)^power for power in {2, 4}.

    psi(n + 1/2) = -gamma - 2 log 2 + H_n(1/2) with the shifted harmonic
    number kept exactly rational and rounded once per term.
    """
    if power not in (2, 4):
        raise DomainError("power must be 2 or 4")

    def run() -> SeriesResult:
        psi0 = -const_gamma(ctx) - 2 * const_log2(ctx)
        acc = NeumaierSum(ctx.zero())
        hx = Fraction(0)
        term = ctx.zero()
        for n in range(N):
            term = (psi0 + ctx.real(hx)) / (2 * n + 1) ** power
            acc.add(term)
            hx += Fraction(2, 2 * n + 1)
        c = float(psi0 + ctx.real(hx)) - math.log(N) if N > 1 else 1.0
        tail = _tail_from_last(float(term), N, float(power - 1), 1, c)
        return _finish(ctx, acc, N, tail)

    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return run()
    return run()


def digamma_half_target(power: int, ctx: PrecisionContext) -> Real:
    """Closed-form limits of digamma_half_sum:

    power 2: -(gamma pi^2 + 7 zeta(3)) / 8
    power 4: -(3 pi^2 zeta(3) + pi^4 gamma + 93 zeta(5)) / 96
    """
    g = const_gamma(ctx)
    p = const_pi(ctx)
    if power == 2:
        return -(g * p * p + 7 * const_zeta(3, ctx)) / 8
    if power == 4:
        return -(3 * p * p * const_zeta(3, ctx) + p**4 * g + 93 * const_zeta(5, ctx)) / 96
    raise DomainError("power must be 2 or 4")


# ----------------------------------------------------------------------
# Dispatch and convergence benchmarking.
# ----------------------------------------------------------------------


def _need_int(v, name: str) -> int:
    if isinstance(v, float) and v.is_integer():
        v = int(v)
    if not isinstance(v, int):
        raise DomainError(f"{name} must be an integer")
    return v


def evaluate(req: EvalRequest) -> SeriesResult:
    """Evaluate one request; the single entry point used by the CLI."""
    f, ctx, N = req.formula, req.ctx, req.N
    x = Fraction(req.x) if req.x is not None else Fraction(1)
    if f in (Formula.HASSE, Formula.HASSE_HURWITZ):
        return hasse_hurwitz(req.s_or_q, x, N, ctx)
    if f is Formula.SONDOW_ALT:
        return sondow_alt(req.s_or_q, N, ctx)
    if f is Formula.ALT_HURWITZ:
        return alt_hurwitz(req.s_or_q, x, N, ctx)
    if f is Formula.EULER_HURWITZ:
        return euler_hurwitz(_need_int(req.s_or_q, "q"), x, N, ctx)
    if f is Formula.STIRLING_ROUTE:
        return stirling_route(_need_int(req.s_or_q, "q"), x, N, ctx)
    if f is Formula.SHEN:
        return shen_series(_need_int(req.s_or_q, "p"), N, ctx)
    if f is Formula.MIXED_Q:
        q = _need_int(req.s_or_q, "q")
        kinds = {4: MixedKind.Z4_457, 5: MixedKind.Z5_457B, 6: MixedKind.Z6_459}
        if q not in kinds:
            raise DomainError("mixed-q supports q in {4, 5, 6}")
        return mixed_q(kinds[q], x, N, ctx)
    if f is Formula.CATALAN_RAMANUJAN:
        return catalan_series(CatalanKind.RAMANUJAN_38, N, ctx)
    if f is Formula.CATALAN_CENTRAL:
        return catalan_series(CatalanKind.CENTRAL_38_1, N, ctx)
    if f is Formula.ZETA2_DUP:
        return catalan_series(CatalanKind.ZETA2_37, N, ctx)
    if f is Formula.ZETA3_HALF:
        return catalan_series(CatalanKind.ZETA3_HALF_45_6, N, ctx)
    if f in (Formula.POLYLOG_14_3, Formula.POLYLOG_14_4):
        which = (
            PolylogIdentity.E14_3 if f is Formula.POLYLOG_14_3 else PolylogIdentity.E14_4
        )
        s = _need_int(req.s_or_q, "s")
        res, _rhs = _polylog_identity(which, s, x, N, ctx)
        return res
    if f is Formula.DIGAMMA_HALF_SUM:
        return digamma_half_sum(_need_int(req.s_or_q, "power"), N, ctx)
    raise DomainError(f"unknown formula {f}")


def reference_value(req: EvalRequest) -> Optional[Real]:
    """Independent reference for a request, or None when unavailable."""
    f, ctx = req.formula, req.ctx
    x = Fraction(req.x) if req.x is not None else Fraction(1)
    if f in (Formula.HASSE, Formula.HASSE_HURWITZ):
        return hurwitz_ref(req.s_or_q, x, ctx) if float(req.s_or_q) > 1 else None
    if f is Formula.SONDOW_ALT:
        s = req.s_or_q
        if float(s) == 1.0:
            return const_log2(ctx)
        if float(s) > 1:
            return _eta_reference(s, Fraction(1), ctx)
        return None
    if f is Formula.ALT_HURWITZ:
        return _eta_reference(req.s_or_q, x, ctx) if float(req.s_or_q) > 1 else None
    if f is Formula.EULER_HURWITZ:
        return hurwitz_ref(int(req.s_or_q) + 1, x, ctx)
    if f is Formula.STIRLING_ROUTE:
        return hurwitz_ref(int(req.s_or_q) + 1, x, ctx)
    if f is Formula.SHEN:
        return const_zeta(int(req.s_or_q) + 1, ctx)
    if f is Formula.MIXED_Q:
        return hurwitz_ref(int(req.s_or_q), x, ctx)
    if f in (Formula.CATALAN_RAMANUJAN, Formula.CATALAN_CENTRAL):
        return const_catalan(ctx)
    if f is Formula.ZETA2_DUP:
        return const_zeta(2, ctx)
    if f is Formula.ZETA3_HALF:
        return 7 * const_zeta(3, ctx)
    if f in (Formula.POLYLOG_14_3, Formula.POLYLOG_14_4):
        which = (
            PolylogIdentity.E14_3 if f is Formula.POLYLOG_14_3 else PolylogIdentity.E14_4
        )
        _lhs, rhs = polylog_identity_check(which, int(req.s_or_q), x, 1, ctx)
        return rhs
    if f is Formula.DIGAMMA_HALF_SUM:
        return digamma_half_target(int(req.s_or_q), ctx)
    return None


def _eta_reference(s, x: Fraction, ctx: PrecisionContext) -> Real:
    """eta(s, x) = 2^-s [zeta(s, x/2) - zeta(s, (1+x)/2)] for s > 1."""
    half = Fraction(1, 2)
    a = hurwitz_ref(s, x * half, ctx)
    b = hurwitz_ref(s, (1 + x) * half, ctx)
    if ctx.mode is Mode.HIGH:
        with working_precision(ctx.dps):
            return +(2 ** (-mpf(s)) * (a - b))
    return 2.0 ** (-float(s)) * (a - b)


def convergence_table(req: EvalRequest, Ns: Sequence[int]) -> List[ConvergenceRow]:
    """Evaluate the request at each term budget against the reference.

    Errors are recomputed here, never trusted from the evaluator; rows
    carry wall-clock seconds.  Ns must be strictly increasing.
    """
    if any(b <= a for a, b in zip(Ns, Ns[1:])):
        raise DomainError("term budgets must be strictly increasing")
    ref = reference_value(req)
    if ref is None:
        raise DomainError("no reference value available for this formula")
    rows = []
    for N in Ns:
        t0 = time.perf_counter()
        res = evaluate(
            EvalRequest(formula=req.formula, s_or_q=req.s_or_q, x=req.x, N=N, ctx=req.ctx)
        )
        dt = time.perf_counter() - t0
        if req.ctx.mode is Mode.HIGH:
            with working_precision(req.ctx.dps):
                err = abs(res.value - ref)
                rel = err / abs(ref) if ref != 0 else +err
        else:
            err = abs(res.value - ref)
            rel = err / abs(ref) if ref != 0 else err
        rows.append(
            ConvergenceRow(
                N=N,
                partial=res.value,
                reference=ref,
                abs_error=err,
                rel_error=rel,
                elapsed_seconds=dt,
            )
        )
    return rows


def fit_convergence_exponent(rows: Sequence[ConvergenceRow]) -> Optional[float]:
    """Least-squares slope of log(abs_error) against log(N)."""
    pts = [(math.log(r.N), math.log(float(r.abs_error))) for r in rows if float(r.abs_error) > 0]
    if len(pts) < 2:
        return None
    n = len(pts)
    sx = sum(p[0] for p in pts)
    sy = sum(p[1] for p in pts)
    sxx = sum(p[0] * p[0] for p in pts)
    sxy = sum(p[0] * p[1] for p in pts)
    denom = n * sxx - sx * sx
    if denom == 0:
        return None
    return (n * sxy - sx * sy) / denom
