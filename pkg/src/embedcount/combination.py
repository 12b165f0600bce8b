"""Linear combinations of coset averages with exact rational coefficients.

Every family count and split is ``sum(coef * avg(label, n, factor * k))``.
``factor = 2`` is the substitution used for generic (orientable or
nonorientable) embeddings, which correspond to orientable embeddings with
twice as many edge colors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exactmath import exact_div

__all__ = ["Term", "evaluate_combination", "terms", "NegativeCountError"]


class NegativeCountError(ArithmeticError):
    """A count came out negative, which signals a wrong combination."""


@dataclass(frozen=True)
class Term:
    coef: Fraction
    label: str
    color_factor: int = 1


def terms(*spec: tuple) -> tuple[Term, ...]:
    """Build terms from ``(coef, label)`` or ``(coef, label, factor)`` tuples."""
    return tuple(Term(Fraction(t[0]), *t[1:]) for t in spec)


def evaluate_combination(
    combo: Sequence[Term],
    average: Callable[[str, int, int], int],
    n: int,
    k: int = 1,
) -> int:
    """Exact value of the combination; raises if it is not a whole number."""
    denom = 1
    for t in combo:
        denom = math.lcm(denom, t.coef.denominator)
    total = 0
    for t in combo:
        total += int(t.coef * denom) * average(t.label, n, t.color_factor * k)
    value = exact_div(total, denom)
    if value < 0:
        raise NegativeCountError(f"combination evaluated to {value} at n={n}, k={k}")
    return value

