"""Small numeric helpers: conversions between exact and mpmath values."""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf

DEFAULT_PRECISION_BITS = 128
MIN_PRECISION_BITS = 64


def to_mpf(value) -> mpf:
    """Convert int/float/Fraction/mpf to mpf at the current working precision."""
    if isinstance(value, Fraction):
        return mpf(value.numerator) / value.denominator
    return mpf(value)


def to_fraction(value) -> Fraction:
    """Exact rational value of a binary float or mpf (both are dyadic)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    x = mpf(value)
    sign, man, exp, _ = x._mpf_
    if man == 0 and exp != 0:
        raise ValueError(f"cannot convert non-finite value {value!r}")
    frac = Fraction(man) * Fraction(2) ** exp
    return -frac if sign else frac


def check_precision(precision_bits: int) -> int:
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}, got {precision_bits}")
    return int(precision_bits)


def nstr_fixed(value, digits: int = 20) -> str:
    """Deterministic decimal rendering with a fixed significant-digit count."""
    with mp.workprec(max(mp.prec, 4 * digits + 16)):
        return mp.nstr(to_mpf(value), digits)
