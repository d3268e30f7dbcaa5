"""Exact combinatorial primitives: binomials, factorials, Pochhammer symbols.

All arithmetic is exact. Python's built-in int serves as the
arbitrary-precision integer type and fractions.Fraction as the rational
type; no floating point is used anywhere in the library core.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


class PoleError(ArithmeticError):
    """Negative-index Pochhammer convention hit a zero factor in the denominator."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient under the lattice-path convention.

    Returns 0 whenever k < 0 or k > n; in particular binom(n, k) = 0 for
    every n < 0 (so binom(-1, 3) is 0, not -1).
    """
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def pochhammer(x: Rat, n: int) -> Fraction:
    """Rising factorial (x)_n, extended to negative n.

    For n >= 0: x(x+1)...(x+n-1), empty product = 1.
    For n < 0:  (x)_{-m} = 1/(x-m)_m, the unique extension satisfying
    (x)_{m+n} = (x)_m (x+m)_n.  Raises PoleError when a denominator
    factor vanishes.
    """
    x = Fraction(x)
    if n >= 0:
        out = Fraction(1)
        for t in range(n):
            out *= x + t
        return out
    m = -n
    den = Fraction(1)
    for t in range(m):
        den *= x - m + t
    if den == 0:
        raise PoleError(f"({x})_{n} has a zero factor in its denominator")
    return 1 / den


def as_int(q: Rat, what: str = "value") -> int:
    """Assert that an exact rational reduces to an integer and return it."""
    q = Fraction(q)
    if q.denominator != 1:
        raise ValueError(f"{what} is not an integer: {q}")
    return q.numerator
