"""Exact arithmetic: extended rationals, 2x2 integer matrices, continued fractions.

Slope values are rational numbers or the single formal value ``INFINITY``
(conceptually 1/0; there is no signed infinity).  Continued fractions follow
the convention

    [n1, n2, ..., nk] = n1 + 1/(n2 + 1/( ... + 1/nk))

evaluated with the formal rules 1/0 = INFINITY and x + 1/INFINITY = x.

Two special expansion shapes are provided.  The "even-odd" shape
[2a1, b1, ..., 2an, bn] (even entries in the odd positions) encodes braid
syllables for slopes with odd numerator.  The all-even shape, computed for a
pair (a, b) with a odd, is the normal form behind the 2-bridge formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError

__all__ = [
    "INFINITY",
    "ExtRational",
    "Mat2",
    "MAT_IDENTITY",
    "MAT_U",
    "MAT_L",
    "SimpleSlope",
    "cf_eval",
    "expand_odd_numerator",
    "expand_all_even",
    "mod_inverse",
]


class _Infinity:
    """The formal slope 1/0.  There is a single instance, INFINITY."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

ExtRational = Fraction | _Infinity


@dataclass(frozen=True)
class Mat2:
    """A 2x2 integer matrix [[a, b], [c, d]], row major."""

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            if self.det() != 1:
                raise DomainError("negative power needs determinant 1")
            return Mat2(self.d, -self.b, -self.c, self.a) ** (-n)
        result, base = MAT_IDENTITY, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def column(self, j: int) -> tuple[int, int]:
        return (self.a, self.c) if j == 0 else (self.b, self.d)


MAT_IDENTITY = Mat2(1, 0, 0, 1)
MAT_U = Mat2(1, 1, 0, 1)
MAT_L = Mat2(1, 0, 1, 1)


@dataclass(frozen=True)
class SimpleSlope:
    """A class [p/q] in Q/Z, stored with q >= 1 and 0 <= p < q.

    The trivial class is written 0/1.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise DomainError("simple slope needs q >= 1")
        if not 0 <= self.p < self.q:
            raise DomainError("simple slope needs 0 <= p < q")
        if self.p == 0:
            if self.q != 1:
                raise DomainError("the trivial class is written 0/1")
        elif math.gcd(self.p, self.q) != 1:
            raise DomainError(f"simple slope {self.p}/{self.q} is not reduced")

    @classmethod
    def from_fraction(cls, x: Fraction) -> "SimpleSlope":
        """The class of x modulo 1."""
        return cls(x.numerator % x.denominator, x.denominator)

    def negate(self) -> "SimpleSlope":
        """The class of -p/q modulo 1."""
        return SimpleSlope.from_fraction(Fraction(-self.p, self.q))

    def __str__(self) -> str:
        return f"[ {self.p}/{self.q} ]"


def cf_eval(entries: Sequence[int]) -> ExtRational:
    """Value of the continued fraction [n1, ..., nk].

    Evaluation is total: a zero tail makes the next level INFINITY, and
    x + 1/INFINITY = x, so e.g. [2, 0, 2] = [4] and [1, 0] = INFINITY.
    """
    if not entries:
        raise DomainError("cannot evaluate an empty continued fraction")
    value: ExtRational = INFINITY  # the innermost entry n has n + 1/INFINITY = n
    for n in reversed(entries):
        if value is INFINITY:
            value = Fraction(n)
        elif value == 0:
            value = INFINITY
        else:
            value = n + 1 / value
    return value


def _nearest_even(x: Fraction) -> int:
    """Even integer nearest to x; a tie (x an odd integer) takes the smaller even."""
    return 2 * math.ceil(Fraction(x - 1, 2))


def _nearest_int(x: Fraction) -> int:
    """Integer nearest to x; a tie (x a half-integer) takes the floor."""
    return math.ceil(x - Fraction(1, 2))


def expand_odd_numerator(x: Fraction | int) -> tuple[int, ...]:
    """Greedy expansion of x in the even-odd shape [2a1, b1, ..., 2an, bn].

    At a-steps the quotient is the nearest even integer (ties at odd integers
    go to the smaller even); at b-steps the nearest integer (ties at
    half-integers go to the floor).  Remainder magnitudes strictly shrink, so
    the expansion terminates, always at a b-step.

    Requires x with odd numerator; cf_eval of the result equals x exactly.
    """
    x = Fraction(x)
    if x.numerator % 2 == 0:
        raise DomainError(f"{x} has even numerator, no even-odd expansion exists")
    entries: list[int] = []
    while True:
        a2 = _nearest_even(x)
        entries.append(a2)
        x = 1 / (x - a2)  # odd numerator keeps the remainder nonzero
        b = _nearest_int(x)
        entries.append(b)
        remainder = x - b
        if not remainder:
            return tuple(entries)
        x = 1 / remainder


def expand_all_even(a: int, b: int) -> tuple[int, ...]:
    """All-even expansion for the pair (a, b): the greedy nearest-even
    continued fraction of a/bhat, where bhat = b for even b and b - a for odd b.

    Requires a odd >= 3, 0 < |b| < a, gcd(a, b) = 1.  The result has all
    entries even, even length, and a nonzero last entry; cf_eval of it equals
    a/bhat exactly.
    """
    if a < 3 or a % 2 == 0:
        raise DomainError("a must be odd and at least 3")
    if not 0 < abs(b) < a:
        raise DomainError("b must satisfy 0 < |b| < a")
    if math.gcd(a, b) != 1:
        raise DomainError(f"{a} and {b} are not coprime")
    bhat = b if b % 2 == 0 else b - a
    x = Fraction(a, bhat)
    entries: list[int] = []
    while True:
        e = _nearest_even(x)
        entries.append(e)
        remainder = x - e
        if not remainder:
            break
        x = 1 / remainder
    # parity of the numerator alternates odd/even along the steps, so the
    # greedy walk can only stop after an even number of entries
    assert len(entries) % 2 == 0 and entries[-1] != 0
    return tuple(entries)


def mod_inverse(b: int, a: int) -> int:
    """The inverse of b modulo a, normalized to 0 < result < a.

    Requires a >= 2 and gcd(a, b) = 1.
    """
    if a < 2:
        raise DomainError("modulus must be at least 2")
    if math.gcd(b, a) != 1:
        raise DomainError(f"{b} is not invertible modulo {a}")
    return pow(b, -1, a)
