"""Generators and identity evaluators for the balancing family of sequences.

Balancing B (0, 1, 6, 35, 204, ...) and Lucas-balancing C (1, 3, 17, 99, ...)
share the recurrence s_n = 6*s_{n-1} - s_{n-2}; Pell P (0, 1, 2, 5, 12, ...)
and associated Pell Q (1, 1, 3, 7, 17, ...) share s_n = 2*s_{n-1} + s_{n-2}.
They are tied together by B_m = P_m * Q_m and 8*B_n**2 + 1 = C_n**2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from . import quadring


class SequenceKind(Enum):
    BALANCING = "balancing"
    LUCAS_BALANCING = "lucas-balancing"
    PELL = "pell"
    ASSOCIATED_PELL = "associated-pell"


# kind -> ((coefficient of s_{n-1}, coefficient of s_{n-2}), (s_0, s_1))
RECURRENCE: dict[SequenceKind, tuple[tuple[int, int], tuple[int, int]]] = {
    SequenceKind.BALANCING: ((6, -1), (0, 1)),
    SequenceKind.LUCAS_BALANCING: ((6, -1), (1, 3)),
    SequenceKind.PELL: ((2, 1), (0, 1)),
    SequenceKind.ASSOCIATED_PELL: ((2, 1), (1, 1)),
}

# Isolated accesses above this index go through the closed form; dense ranges
# and small indices iterate, which wins on constant factors.
DOUBLING_THRESHOLD = 64


@dataclass(frozen=True)
class SeqTerm:
    kind: SequenceKind
    index: int
    value: int


def _iterate(kind: SequenceKind, n: int) -> int:
    (c1, c2), (s0, s1) = RECURRENCE[kind]
    if n == 0:
        return s0
    prev, cur = s0, s1
    for _ in range(n - 1):
        prev, cur = cur, c1 * cur + c2 * prev
    return cur


def term(kind: SequenceKind, n: int, doubling_threshold: int = DOUBLING_THRESHOLD) -> int:
    """Exact n-th term of the given sequence, n >= 0."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n > doubling_threshold and kind in (
        SequenceKind.BALANCING,
        SequenceKind.LUCAS_BALANCING,
    ):
        b, c = quadring.binet_extract(n)
        return b if kind is SequenceKind.BALANCING else c
    return _iterate(kind, n)


def values_up_to(kind: SequenceKind, hi: int) -> list[int]:
    """Values at indices 0..hi inclusive by forward iteration."""
    if hi < 0:
        raise ValueError("index must be nonnegative")
    (c1, c2), (s0, s1) = RECURRENCE[kind]
    out = [s0, s1]
    while len(out) <= hi:
        out.append(c1 * out[-1] + c2 * out[-2])
    return out[: hi + 1]


def term_range(kind: SequenceKind, lo: int, hi: int) -> list[SeqTerm]:
    """Terms lo..hi inclusive as SeqTerm records; requires 0 <= lo <= hi."""
    if lo < 0 or lo > hi:
        raise ValueError(f"invalid index range [{lo}, {hi}]")
    vals = values_up_to(kind, hi)
    return [SeqTerm(kind, i, vals[i]) for i in range(lo, hi + 1)]


def sum_identity(n: int, m: int) -> tuple[int, int]:
    """Both sides of B_n + B_m = 2 * B_{(n+m)/2} * C_{(n-m)/2}.

    Requires n >= m >= 0 with n and m of the same parity; returns
    (lhs, rhs) so the caller can assert equality.
    """
    _check_identity_pair(n, m)
    b = values_up_to(SequenceKind.BALANCING, n)
    c = values_up_to(SequenceKind.LUCAS_BALANCING, n)
    lhs = b[n] + b[m]
    rhs = 2 * b[(n + m) // 2] * c[(n - m) // 2]
    return lhs, rhs


def diff_identity(n: int, m: int) -> tuple[int, int]:
    """Both sides of B_n - B_m = 2 * B_{(n-m)/2} * C_{(n+m)/2}."""
    _check_identity_pair(n, m)
    b = values_up_to(SequenceKind.BALANCING, n)
    c = values_up_to(SequenceKind.LUCAS_BALANCING, n)
    lhs = b[n] - b[m]
    rhs = 2 * b[(n - m) // 2] * c[(n + m) // 2]
    return lhs, rhs


def _check_identity_pair(n: int, m: int) -> None:
    if m < 0 or n < m:
        raise ValueError(f"need n >= m >= 0, got n={n}, m={m}")
    if (n - m) % 2:
        raise ValueError(f"indices {n} and {m} differ in parity")


def product_identity(m: int) -> tuple[int, int]:
    """(B_m, P_m * Q_m) for asserting the Pell product identity."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    p = term(SequenceKind.PELL, m)
    q = term(SequenceKind.ASSOCIATED_PELL, m)
    return term(SequenceKind.BALANCING, m), p * q


def balancer(value: int) -> int | None:
    """The R with 1 + ... + (B-1) = (B+1) + ... + (B+R), or None.

    B = value is balancing exactly when 8*B**2 + 1 is a perfect square; then
    R solves R**2 + (2B+1)*R - (B**2 - B) = 0, whose discriminant is that
    same square, so no iteration over the sums is needed.
    """
    if value < 1:
        raise ValueError("value must be >= 1")
    disc = 8 * value * value + 1
    c = isqrt(disc)
    if c * c != disc:
        return None
    r = (c - 2 * value - 1) // 2  # c and 2B+1 are both odd, so this is exact
    # recheck against the closed sums: B(B-1)/2 == R(2B+R+1)/2
    if value * (value - 1) != r * (2 * value + r + 1):
        raise ArithmeticError(f"balancer computation inconsistent for {value}")
    return r
