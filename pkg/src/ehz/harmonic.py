"""Exact generalized harmonic numbers, shifted harmonic functions, the
alternating binomial sums S_n(m), and the Coppo binomial/Bell identity.

Everything in this module is exact rational arithmetic: binomial
coefficients come from math.comb (arbitrary-precision integers) and no
float ever enters a computation.  The alternating sums suffer catastrophic
cancellation in floating point (terms as large as C(n, n/2)), which is why
the two-sided identity checkers built on top of these functions can demand
strict equality.

Identity evaluators (Coppo, Larcombe, Spiess, Adamchik) return both sides
rather than a boolean so that failures are diagnosable; equality is
asserted by the verification registry.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Dict, List, Tuple

from . import combinatorics
from .numerics import DomainError

__all__ = [
    "H",
    "Hx",
    "HarmonicTable",
    "alt_binom_sum",
    "alt_binom_sum_bell",
    "coppo_lhs",
    "coppo_rhs",
    "coppo_sweep",
    "larcombe_check",
    "spiess_check",
    "adamchik_check",
    "bell_of_shifted_harmonics",
]

_H_CACHE: Dict[int, List[Fraction]] = {}
_H_LOCK = threading.Lock()


def H(n: int, m: int) -> Fraction:
    """Generalized harmonic number: sum of 1/j^m for j = 1..n; H(0, m) = 0."""
    if n < 0 or m < 1:
        raise DomainError("H requires n >= 0 and m >= 1")
    with _H_LOCK:
        col = _H_CACHE.setdefault(m, [Fraction(0)])
        while len(col) <= n:
            j = len(col)
            col.append(col[j - 1] + Fraction(1, j**m))
        return col[n]


def Hx(n: int, m: int, x: Fraction) -> Fraction:
    """Shifted harmonic function: sum of 1/(k+x)^m for k = 0..n-1.

    x must avoid the poles 0, -1, ..., -(n-1); a pole raises DomainError
    naming the offending k.  Hx(n, m, 1) equals H(n, m).
    """
    if n < 0 or m < 1:
        raise DomainError("Hx requires n >= 0 and m >= 1")
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n):
        base = k + x
        if base == 0:
            raise DomainError(f"pole at k = {k}: x = {x} makes k + x vanish")
        total += Fraction(1, 1) / base**m
    return total


class HarmonicTable:
    """Immutable table of H_n^(m)(x) for 0 <= n <= n_max, 1 <= m <= m_max.

    Built in one incremental pass: H_{n+1}^(m)(x) = H_n^(m)(x) + (n+x)^-m.
    """

    def __init__(self, n_max: int, m_max: int, x: Fraction = Fraction(1)):
        x = Fraction(x)
        if x.denominator == 1 and -(n_max - 1) <= x <= 0:
            raise DomainError(f"x = {x} hits a pole below n_max = {n_max}")
        self.n_max = n_max
        self.m_max = m_max
        self.x = x
        rows: List[Tuple[Fraction, ...]] = [tuple(Fraction(0) for _ in range(m_max))]
        cur = [Fraction(0)] * (m_max + 1)
        for n in range(n_max):
            inv = Fraction(1, 1) / (n + x)
            p = inv
            for m in range(1, m_max + 1):
                cur[m] += p
                p *= inv
            rows.append(tuple(cur[1:]))
        self._rows = tuple(rows)

    def value(self, n: int, m: int) -> Fraction:
        """H_n^(m)(x)."""
        return self._rows[n][m - 1]


def alt_binom_sum(n: int, m: int) -> Fraction:
    """S_n(m) = sum_{k=1}^{n} C(n,k) (-1)^k / k^m, exactly."""
    if n < 1 or m < 1:
        raise DomainError("alt_binom_sum requires n, m >= 1")
    num, den = 0, 1
    c = 1  # C(n, 0)
    for k in range(1, n + 1):
        c = c * (n - k + 1) // k
        d = k**m
        t = -c if k & 1 else c
        num = num * d + t * den
        den *= d
    return Fraction(num, den)


def bell_of_shifted_harmonics(m: int, hs: List[Fraction]) -> Fraction:
    """(1/m!) Y_m(0! h_1, 1! h_2, ..., (m-1)! h_m) for given h_j values."""
    args = [math.factorial(j - 1) * hs[j - 1] for j in range(1, m + 1)]
    return Fraction(combinatorics.bell_eval(args), math.factorial(m))


def alt_binom_sum_bell(n: int, m: int) -> Fraction:
    """-S_n(m) from the Bell polynomial of generalized harmonic numbers,

    -(1/m!) Y_m(0! H_n, 1! H_n^(2), ..., (m-1)! H_n^(m)), negated to match
    alt_binom_sum exactly.
    """
    if n < 1 or m < 1:
        raise DomainError("alt_binom_sum_bell requires n, m >= 1")
    return -bell_of_shifted_harmonics(m, [H(n, j) for j in range(1, m + 1)])


def _check_coppo_pole(n: int, x: Fraction) -> None:
    if x.denominator == 1 and -n <= x <= 0:
        raise DomainError(f"pole at k = {-x}: x = {x} lies in 0, -1, ..., -{n}")


def coppo_lhs(n: int, q: int, x: Fraction) -> Fraction:
    """sum_{k=0}^{n} C(n,k) (-1)^k / (k+x)^q with exact binomials."""
    if n < 0 or q < 1:
        raise DomainError("coppo_lhs requires n >= 0 and q >= 1")
    x = Fraction(x)
    _check_coppo_pole(n, x)
    xp, xq = x.numerator, x.denominator
    xqq = xq**q
    num, den = 0, 1
    c = 1
    for k in range(n + 1):
        if k:
            c = c * (n - k + 1) // k
        d = (xq * k + xp) ** q
        t = c * xqq
        if k & 1:
            t = -t
        num = num * d + t * den
        den *= d
    return Fraction(num, den)


def coppo_rhs(n: int, q: int, x: Fraction) -> Fraction:
    """Gamma-ratio times Bell-polynomial side of the same sum:

    [n! / (x (x+1) ... (x+n))] * (1/(q-1)!) * Y_{q-1} of the shifted
    harmonic numbers H_{n+1}^(j)(x); equals coppo_lhs exactly.
    """
    from .gamma_tools import RatioForm, gamma_ratio

    if n < 0 or q < 1:
        raise DomainError("coppo_rhs requires n >= 0 and q >= 1")
    x = Fraction(x)
    _check_coppo_pole(n, x)
    ratio = gamma_ratio(n, x, RatioForm.N_PLUS_1)
    hs = [Hx(n + 1, j, x) for j in range(1, q)]
    return ratio * bell_of_shifted_harmonics(q - 1, hs)


def coppo_sweep(n_max: int, q_max: int, x: Fraction):
    """Yield (n, q, lhs, rhs) over the full grid n <= n_max, q <= q_max.

    Same two routes as coppo_lhs / coppo_rhs, but the gamma ratio and the
    shifted harmonic numbers are maintained incrementally across n so the
    whole grid costs O(n_max^2 q_max) big-integer work instead of
    recomputing every prefix.
    """
    x = Fraction(x)
    _check_coppo_pole(n_max, x)
    facts = [math.factorial(j) for j in range(q_max)]
    hs = [Fraction(0)] * (q_max - 1) if q_max > 1 else []
    ratio = Fraction(1)
    for n in range(n_max + 1):
        inv = Fraction(1, 1) / (n + x)
        p = inv
        for j in range(q_max - 1):
            hs[j] += p
            p *= inv
        ratio = ratio / x if n == 0 else ratio * n / (x + n)
        args = [facts[j] * hs[j] for j in range(q_max - 1)]
        ys = combinatorics.bell_eval_all(args)
        for q in range(1, q_max + 1):
            rhs = ratio * ys[q - 1] / facts[q - 1]
            yield n, q, coppo_lhs(n, q, x), Fraction(rhs)


def larcombe_check(variant: int, m: int, n: int) -> Tuple[Fraction, Fraction]:
    """Both sides of the selected alternating binomial identity.

    Variant v in 1..4 scales the alternating sum of C(n,k)(-1)^k/(m+k)^v by
    (v-1)! m C(m+n, n); the right side is built from the partial harmonic
    sums over k = m .. m+n.
    """
    if variant not in (1, 2, 3, 4):
        raise DomainError("variant must be in 1..4")
    if m < 1 or n < 0:
        raise DomainError("requires m >= 1 and n >= 0")
    front = math.comb(m + n, n)
    s = coppo_lhs(n, variant, Fraction(m))
    h = [None] + [Hx(n + 1, j, Fraction(m)) for j in range(1, 4)]
    if variant == 1:
        lhs = m * front * s
        rhs = Fraction(1)
    elif variant == 2:
        lhs = m * front * s
        rhs = h[1]
    elif variant == 3:
        lhs = 2 * m * front * s
        rhs = h[1] ** 2 + h[2]
    else:
        lhs = 6 * m * front * s
        rhs = h[1] ** 3 + 3 * h[1] * h[2] + 2 * h[3]
    return Fraction(lhs), Fraction(rhs)


def spiess_check(variant: str, n: int) -> Tuple[Fraction, Fraction]:
    """Both sides of one of the three convolution identities for H_n.

    'a': sum 1/(k(n-k+1));  'b': weighted by H_{k-1};  'c': weighted by
    H_{k-1} H_{n-k}.  The right sides are cubic polynomials in the
    generalized harmonic numbers at n.
    """
    if n < 0:
        raise DomainError("n must be >= 0")
    h1, h2, h3 = H(n, 1), H(n, 2), H(n, 3)
    if variant == "a":
        lhs = sum((Fraction(1, k * (n - k + 1)) for k in range(1, n + 1)), Fraction(0))
        rhs = Fraction(2, n + 1) * h1
    elif variant == "b":
        lhs = sum(
            (Fraction(2) / (k * (n - k + 1)) * H(k - 1, 1) for k in range(2, n + 1)),
            Fraction(0),
        )
        rhs = Fraction(3, n + 1) * (h1 * h1 - h2)
    elif variant == "c":
        lhs = sum(
            (
                Fraction(4) / (k * (n - k + 1)) * H(k - 1, 1) * H(n - k, 1)
                for k in range(2, n + 1)
            ),
            Fraction(0),
        )
        rhs = Fraction(4, n + 1) * (h1**3 - 3 * h1 * h2 + 2 * h3)
    else:
        raise DomainError("variant must be 'a', 'b' or 'c'")
    return lhs, rhs


def adamchik_check(variant: int, n: int) -> Tuple[Fraction, Fraction]:
    """Both sides of the three finite Euler-sum identities at depth n.

    1: sum H_k/k                    = (H_n^2 + H_n^(2)) / 2
    2: sum H_k^(2)/k + sum H_k/k^2  = H_n^(3) + H_n H_n^(2)
    3: sum H_k^2/k + sum H_k^(2)/k  = H_n^3/3 + H_n H_n^(2) + 2 H_n^(3)/3
       (variant 3 also equals -2 S_n(3) and the nested double sum;
       callers may check those separately)
    """
    if variant not in (1, 2, 3):
        raise DomainError("variant must be in 1..3")
    if n < 1:
        raise DomainError("n must be >= 1")
    h1, h2, h3 = H(n, 1), H(n, 2), H(n, 3)
    if variant == 1:
        lhs = sum((H(k, 1) / k for k in range(1, n + 1)), Fraction(0))
        rhs = (h1 * h1 + h2) / 2
    elif variant == 2:
        lhs = sum((H(k, 2) / k + H(k, 1) / k**2 for k in range(1, n + 1)), Fraction(0))
        rhs = h3 + h1 * h2
    else:
        lhs = sum(((H(k, 1) ** 2 + H(k, 2)) / k for k in range(1, n + 1)), Fraction(0))
        rhs = Fraction(1, 3) * h1**3 + h1 * h2 + Fraction(2, 3) * h3
    return lhs, rhs
