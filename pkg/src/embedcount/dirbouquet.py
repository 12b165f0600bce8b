"""Closed forms for directed bouquets with k arc colors.

A directed bouquet embedding is a k-colored chord diagram on Z_2n in which
every chord joins an even point to an odd one, together with a global sign
saying whether arcs run even-to-odd or odd-to-even.  ``alpha(T, n, k)``
averages fixed objects over the coset of <S> with representative T in
{I, R, F, RF}; F reverses every arc.
"""

from __future__ import annotations

from .combination import Term, evaluate_combination, terms
from .exactmath import divisor_pairs, exact_div, factorial, matchings, phi

__all__ = [
    "DIRBOUQUET_LABELS",
    "DIRBOUQUET_FAMILIES",
    "DIRBOUQUET_PAIRS",
    "alpha",
    "dirbouquet_count",
    "dirbouquet_split",
]

DIRBOUQUET_LABELS = ("I", "R", "F", "RF")


def _alpha_I(n: int, k: int) -> int:
    total = sum(phi(d) * factorial(g) * d**g * k**g for d, g in divisor_pairs(n))
    return exact_div(total, n)


def _alpha_R(n: int, k: int) -> int:
    if n % 2 == 0:
        return 0
    m = (n - 1) // 2
    return factorial(m) * 2**m * k ** (m + 1)


def _alpha_F(n: int, k: int) -> int:
    if n % 2 == 0:
        return 0
    total = 0
    for d, g in divisor_pairs(n):
        if g % 2 == 0:
            continue
        total += phi(2 * d) * sum(
            matchings(g, j) * d**j * k ** (g - j) for j in range(g // 2 + 1)
        )
    return exact_div(total, n)


def _alpha_RF(n: int, k: int) -> int:
    # the sum starts at j = 0 (the empty partial matching)
    return sum(matchings(n, j) * k ** (n - j) for j in range(n // 2 + 1))


_ALPHA = {"I": _alpha_I, "R": _alpha_R, "F": _alpha_F, "RF": _alpha_RF}


def alpha(label: str, n: int, k: int = 1) -> int:
    """Coset average for directed bouquets with n arcs and k colors; 1 at n = 0."""
    if label not in _ALPHA:
        raise KeyError(f"unknown directed bouquet coset label {label!r}")
    _check(n, k)
    if n == 0:
        return 1
    return _ALPHA[label](n, k)


def _check(n: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def _doubled(combo: tuple[Term, ...]) -> tuple[Term, ...]:
    return tuple(Term(t.coef, t.label, 2 * t.color_factor) for t in combo)


def _minus(a: tuple[Term, ...], b: tuple[Term, ...]) -> tuple[Term, ...]:
    return a + tuple(Term(-t.coef, t.label, t.color_factor) for t in b)


_A2 = terms(("1/2", "I"), ("1/2", "R"))
_A4 = terms(("1/4", "I"), ("1/4", "R"), ("1/4", "F"), ("1/4", "RF"))

DIRBOUQUET_FAMILIES: dict[str, tuple[Term, ...]] = {
    "A1": terms((1, "I")),
    "A2": _A2,
    "A3": terms(("1/2", "I"), ("1/2", "F")),
    "A4": _A4,
    "A5": terms(("1/2", "I"), ("1/2", "RF")),
    "A6": _doubled(_A2),
    "A7": _minus(_doubled(_A2), _A2),
    "A8": _doubled(_A4),
    "A9": _minus(_doubled(_A4), _A4),
}

_A2A4_S = terms(("1/2", "F"), ("1/2", "RF"))
_A2A4_AP = terms(("1/4", "I"), ("1/4", "R"), ("-1/4", "F"), ("-1/4", "RF"))

DIRBOUQUET_PAIRS: dict[str, tuple[tuple[Term, ...], tuple[Term, ...]]] = {
    "A1/A2": (terms((1, "R")), terms(("1/2", "I"), ("-1/2", "R"))),
    "A3/A4": (
        terms(("1/2", "R"), ("1/2", "RF")),
        terms(("1/4", "I"), ("1/4", "F"), ("-1/4", "R"), ("-1/4", "RF")),
    ),
    "A1/A3": (terms((1, "F")), terms(("1/2", "I"), ("-1/2", "F"))),
    "A2/A4": (_A2A4_S, _A2A4_AP),
    "A6/A8": (_doubled(_A2A4_S), _doubled(_A2A4_AP)),
    "A7/A9": (
        _minus(_doubled(_A2A4_S), _A2A4_S),
        _minus(_doubled(_A2A4_AP), _A2A4_AP),
    ),
    "A1/A5": (terms((1, "RF")), terms(("1/2", "I"), ("-1/2", "RF"))),
    "A5/A4": (
        terms(("1/2", "R"), ("1/2", "F")),
        terms(("1/4", "I"), ("1/4", "RF"), ("-1/4", "R"), ("-1/4", "F")),
    ),
}


def dirbouquet_count(family: str, n: int, k: int = 1) -> int:
    if family not in DIRBOUQUET_FAMILIES:
        raise KeyError(f"unknown directed bouquet family {family!r}")
    _check(n, k)
    return evaluate_combination(DIRBOUQUET_FAMILIES[family], alpha, n, k)


def dirbouquet_split(pair: str, n: int, k: int = 1) -> tuple[int, int]:
    if pair not in DIRBOUQUET_PAIRS:
        raise KeyError(f"unknown directed bouquet pair {pair!r}")
    _check(n, k)
    sym, ap = DIRBOUQUET_PAIRS[pair]
    return evaluate_combination(sym, alpha, n, k), evaluate_combination(ap, alpha, n, k)
