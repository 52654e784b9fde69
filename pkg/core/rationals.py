"""Exact scalars.

Every entry, coefficient and eigenvalue in the project is a
``fractions.Fraction``. Floats are rejected outright: a float that happens to
look integral would silently break the integrality tests everything else
depends on.
"""
import numbers
from fractions import Fraction


def as_rational(value):
    """Coerce an int, Fraction or "p/q" string to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational entries")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def is_integer(value):
    return value.denominator == 1


def is_nonnegative_integer(value):
    return value.denominator == 1 and value >= 0


def format_rational(value):
    """Canonical text form: "p" for integers, "p/q" otherwise"""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
