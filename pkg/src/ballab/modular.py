"""Modular views of the balancing family.

Reduced terms, the period of the balancing sequence modulo mu, the mod-9
residue table keyed on the index mod 12, the 2-adic divisibility law
(2**k | B_n exactly when 2**k | n), and a q-th-power residue sieve used to
prune perfect-power searches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .bigmath import is_prime
from .sequences import RECURRENCE, SequenceKind

_Mat = tuple[int, int, int, int]  # row-major 2x2


def _mat_mul(x: _Mat, y: _Mat, m: int) -> _Mat:
    return (
        (x[0] * y[0] + x[1] * y[2]) % m,
        (x[0] * y[1] + x[1] * y[3]) % m,
        (x[2] * y[0] + x[3] * y[2]) % m,
        (x[2] * y[1] + x[3] * y[3]) % m,
    )


def _mat_pow(mat: _Mat, e: int, m: int) -> _Mat:
    result: _Mat = (1 % m, 0, 0, 1 % m)
    while e:
        if e & 1:
            result = _mat_mul(result, mat, m)
        e >>= 1
        if e:
            mat = _mat_mul(mat, mat, m)
    return result


def term_mod(kind: SequenceKind, n: int, modulus: int) -> int:
    """Sequence term at index n reduced mod modulus, in O(log n) steps.

    Uses the 2x2 companion matrix of the recurrence, so it works for any
    modulus (no division by 2 is ever needed).
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if n < 0:
        raise ValueError("index must be nonnegative")
    (c1, c2), (s0, s1) = RECURRENCE[kind]
    if n == 0:
        return s0 % modulus
    # (s_{n+1}, s_n)^T = M**n (s_1, s_0)^T with M = [[c1, c2], [1, 0]]
    mat = _mat_pow((c1 % modulus, c2 % modulus, 1 % modulus, 0), n, modulus)
    return (mat[2] * s1 + mat[3] * s0) % modulus


def residue_range(kind: SequenceKind, lo: int, hi: int, modulus: int) -> list[int]:
    """Reduced values at indices lo..hi inclusive by forward iteration."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if lo < 0 or lo > hi:
        raise ValueError(f"invalid index range [{lo}, {hi}]")
    (c1, c2), (s0, s1) = RECURRENCE[kind]
    prev, cur = s0 % modulus, s1 % modulus
    out = []
    for i in range(hi + 1):
        if i == 0:
            val = prev
        elif i == 1:
            val = cur
        else:
            prev, cur = cur, (c1 * cur + c2 * prev) % modulus
            val = cur
        if i >= lo:
            out.append(val)
    return out


@dataclass(frozen=True)
class PeriodResult:
    modulus: int
    period: int
    prefix_checked: int  # indices over which restart <=> divisibility was confirmed


def period(modulus: int, prefix_multiplier: int = 2) -> PeriodResult:
    """Least t >= 1 with B_t ≡ 0 and B_{t+1} ≡ 1 (mod modulus).

    The state map (B_k, B_{k+1}) -> (B_{k+1}, B_{k+2}) has determinant 1, so
    it is a bijection mod any modulus and the orbit of (0, 1) is a pure
    cycle: the first return exists and is at most modulus**2 by pigeonhole.
    Exceeding that bound means a bug, not a hard instance.

    The defining property additionally asks that t divide every restart
    index.  That holds automatically for a pure cycle, but it is confirmed
    empirically over the first prefix_multiplier * t indices and the checked
    extent is reported in the result.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    bound = modulus * modulus
    start = (0, 1 % modulus)
    prev, cur = start
    t = 0
    while True:
        prev, cur = cur, (6 * cur - prev) % modulus
        t += 1
        if (prev, cur) == start:
            break
        if t > bound:
            raise RuntimeError(
                f"no restart within {bound} iterations mod {modulus}; state map is broken"
            )
    prefix = prefix_multiplier * t
    prev, cur = start
    for k in range(1, prefix + 1):
        prev, cur = cur, (6 * cur - prev) % modulus
        if ((prev, cur) == start) != (k % t == 0):
            raise ArithmeticError(
                f"restart at index {k} is not a multiple of the period {t} mod {modulus}"
            )
    return PeriodResult(modulus=modulus, period=t, prefix_checked=prefix)


# B_n mod 9 depends only on n mod 12.
MOD9_TABLE: dict[int, int] = {
    0: 0, 6: 0,
    1: 1, 5: 1, 9: 1,
    8: 3, 10: 3,
    2: 6, 4: 6,
    3: 8, 7: 8, 11: 8,
}


def residue_class_mod9(n: int) -> int:
    """B_n mod 9, read from the table keyed on n mod 12."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return MOD9_TABLE[n % 12]


def two_adic_law(n: int, k: int) -> bool:
    """Whether 2**k divides B_n; equals (2**k divides n) for all n, k >= 1."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return term_mod(SequenceKind.BALANCING, n, 1 << k) == 0


@lru_cache(maxsize=None)
def default_sieve_moduli(q: int, count: int = 8) -> tuple[int, ...]:
    """First `count` primes p with p ≡ 1 (mod q).

    For such p the q-th-power residues form an index-q subgroup of the units
    mod p, which maximizes the sieve's rejection rate.
    """
    if q < 2:
        raise ValueError("exponent must be >= 2")
    found = []
    p = 2
    while len(found) < count:
        p += 1
        if p % q == 1 and is_prime(p):
            found.append(p)
    return tuple(found)


def power_residue_sieve(value: int, q: int, trial_moduli: tuple[int, ...] | None = None) -> bool:
    """Can value be a q-th power?  False only on a modular proof that it cannot.

    For each listed prime p not dividing value, value mod p must be a q-th
    power residue, i.e. raise to (p-1)/gcd(q, p-1) must give 1.  A genuine
    q-th power passes every such test, so False is always sound; True is
    merely "not excluded".
    """
    if q < 2:
        raise ValueError("exponent must be >= 2")
    if trial_moduli is None:
        trial_moduli = default_sieve_moduli(q)
    for p in trial_moduli:
        r = value % p
        if r == 0:
            continue  # p | value: residue is 0, a q-th power residue; no information
        if pow(r, (p - 1) // math.gcd(q, p - 1), p) != 1:
            return False
    return True
