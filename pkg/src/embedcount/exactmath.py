"""Exact integer helpers shared by every closed-form count.

All counts are plain Python ints. Divisions inside closed forms go through
:func:`exact_div`, which refuses to truncate.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import NamedTuple, Sequence

__all__ = [
    "InexactDivisionError",
    "DivisorPair",
    "exact_div",
    "exact_pow",
    "gcd",
    "factorial",
    "double_factorial",
    "binomial",
    "factorize",
    "phi",
    "divisor_pairs",
    "matchings",
    "sqrt_count",
    "cycle_type",
    "sqrt_count_of",
]

gcd = math.gcd


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, numerator: int, denominator: int) -> None:
        super().__init__(
            f"{numerator} is not divisible by {denominator} "
            f"(remainder {numerator % denominator})"
        )
        self.numerator = numerator
        self.denominator = denominator


class DivisorPair(NamedTuple):
    d: int
    g: int


def exact_div(numerator: int, denominator: int) -> int:
    if denominator == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(numerator, denominator)
    if r:
        raise InexactDivisionError(numerator, denominator)
    return q


def exact_pow(base: int, exponent: int) -> int:
    """``base ** exponent`` restricted to nonnegative integer exponents."""
    if exponent < 0:
        raise ValueError(f"negative exponent {exponent} has no exact integer power")
    return base**exponent


def factorial(n: int) -> int:
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n!! with the convention (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def binomial(n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError(f"phi is defined for n >= 1, got {n}")
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def divisor_pairs(n: int) -> list[DivisorPair]:
    """All ``(d, n // d)`` with ``d | n``, ascending in d."""
    if n < 1:
        raise ValueError(f"divisor_pairs needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return [DivisorPair(d, n // d) for d in small + large[::-1]]


def matchings(n: int, j: int) -> int:
    """Number of j-matchings of an n-set: n! / ((n-2j)! 2^j j!)."""
    if n < 0 or j < 0:
        raise ValueError(f"matchings needs nonnegative arguments, got ({n}, {j})")
    if 2 * j > n:
        return 0
    return binomial(n, 2 * j) * double_factorial(2 * j - 1)


def sqrt_count(l: int, m: int) -> int:
    """Square roots contributed by m cycles of length l.

    Even l: the cycles must be paired up, each pair interleaved in l ways.
    Odd l: any subset of pairs may be interleaved; the rest have a unique root.
    """
    if l < 1:
        raise ValueError(f"cycle length must be >= 1, got {l}")
    if m < 0:
        raise ValueError(f"cycle multiplicity must be >= 0, got {m}")
    if l % 2 == 0:
        if m % 2:
            return 0
        return matchings(m, m // 2) * l ** (m // 2)
    return sum(matchings(m, j) * l**j for j in range(m // 2 + 1))


def cycle_type(perm: Sequence[int]) -> Counter[int]:
    """Map cycle length -> number of cycles of that length."""
    seen = [False] * len(perm)
    counts: Counter[int] = Counter()
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        counts[length] += 1
    return counts


def sqrt_count_of(alpha: Sequence[int]) -> int:
    """Number of permutations tau with tau**2 == alpha."""
    out = 1
    for l, m in cycle_type(alpha).items():
        out *= sqrt_count(l, m)
    return out
