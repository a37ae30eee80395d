"""Exact arithmetic in Z[sqrt(2)].

The unit alpha = 3 + 2*sqrt(2) satisfies alpha**n = C_n + 2*B_n*sqrt(2),
where B_n and C_n are the n-th balancing and Lucas-balancing numbers, so a
single binary exponentiation recovers both values with no rounding.  The
conjugate beta = 3 - 2*sqrt(2) never needs to be materialized: conjugation
commutes with powers, so alpha**n - beta**n can be read off alpha**n alone.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QuadInt:
    """a + b*sqrt(2) with integer coordinates."""

    a: int
    b: int

    def __add__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        return QuadInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        # (a+b√2)(c+d√2) = (ac+2bd) + (ad+bc)√2
        return QuadInt(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def conjugate(self) -> "QuadInt":
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        """a**2 - 2*b**2; multiplicative over products."""
        return self.a * self.a - 2 * self.b * self.b


ONE = QuadInt(1, 0)
SQRT2 = QuadInt(0, 1)
ALPHA = QuadInt(3, 2)


def qmul(u: QuadInt, v: QuadInt) -> QuadInt:
    """Exact ring product."""
    return u * v


def qpow(u: QuadInt, n: int) -> QuadInt:
    """u**n by binary exponentiation; n >= 0."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    result = ONE
    square = u
    while n:
        if n & 1:
            result = result * square
        n >>= 1
        if n:
            square = square * square
    return result


def binet_extract(n: int) -> tuple[int, int]:
    """(B_n, C_n) extracted from alpha**n, in O(log n) ring products.

    With alpha**n = a + b*sqrt(2), conjugation gives beta**n = a - b*sqrt(2),
    so C_n = a and the sqrt(2) coordinate b equals 2*B_n.  The halving is
    always exact; a failure would mean the ring arithmetic itself is broken.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    w = qpow(ALPHA, n)
    if w.b % 2:
        raise ArithmeticError(f"sqrt(2) coordinate of alpha**{n} is odd")
    return w.b // 2, w.a
