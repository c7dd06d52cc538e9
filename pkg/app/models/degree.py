"""Exact rational numbers used for certainty degrees, offsets and time points."""

from fractions import Fraction
from numbers import Rational
from typing import Union

Degree = Fraction
RationalLike = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """
    Convert an int, a Fraction or a string such as "4/5" or "0.8" to a Fraction.

    Floats are refused: they cannot express 0.8 exactly and inference relies on
    strict comparisons between degrees.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {value!r}")
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {value!r}")


def as_degree(value: RationalLike) -> Fraction:
    degree = as_rational(value)
    if not ZERO <= degree <= ONE:
        raise ValueError(f"degree {degree} is outside [0, 1]")
    return degree
