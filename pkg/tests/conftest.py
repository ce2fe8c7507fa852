from fractions import Fraction

import mpmath
import pytest

from ehz.numerics import Mode, PrecisionContext, working_precision


@pytest.fixture(scope="session")
def high30() -> PrecisionContext:
    return PrecisionContext(30, Mode.HIGH)


@pytest.fixture(scope="session")
def fast30() -> PrecisionContext:
    return PrecisionContext(30, Mode.FAST)


def mp_literal(text: str, dps: int = 60) -> mpmath.mpf:
    """Parse a decimal literal at high precision (not the global default)."""
    with working_precision(dps):
        return mpmath.mpf(text)


def mp_abs_diff(a, b, dps: int = 60) -> float:
    with working_precision(dps):
        return float(abs(mpmath.mpf(a) - mpmath.mpf(b)))


def frac(s: str) -> Fraction:
    return Fraction(s)
