"""Exact arithmetic primitives.

Naturals are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which normalises to lowest terms on
construction, so equality between rationals is structural.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .exceptions import CrossCheckError, PreconditionError

__all__ = ["Fraction", "binomial", "a_value", "as_integer", "format_fraction"]


def binomial(n: int, k: int) -> int:
    """Return n choose k, with the convention that it is 0 for k < 0 or k > n."""
    if n < 0:
        raise PreconditionError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def a_value(m: int, n: int) -> Fraction:
    """The rational ``binom(m+n, n) / (m+n)`` for positive m and n.

    >>> a_value(2, 2)
    Fraction(3, 2)
    >>> a_value(3, 3)
    Fraction(10, 3)
    """
    if m < 1 or n < 1:
        raise PreconditionError(f"a_value requires m, n >= 1, got ({m}, {n})")
    return Fraction(math.comb(m + n, n), m + n)


def as_integer(x: Fraction | int, what: str = "value") -> int:
    """Return ``x`` as an int, raising CrossCheckError if it is not integral."""
    x = Fraction(x)
    if x.denominator != 1:
        raise CrossCheckError(f"{what} is not an integer: {x}")
    return x.numerator


def format_fraction(x: Fraction | int) -> str:
    """Render ``p/q`` in lowest terms, or just ``p`` when q == 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
