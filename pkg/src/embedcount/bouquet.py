"""Closed forms for embedded bouquets with k edge colors.

``beta(T, n, k)`` averages fixed k-colored chord diagrams on Z_2n over the
coset of rotations <S> with representative T in {I, R}.
"""

from __future__ import annotations

from .combination import Term, evaluate_combination, terms
from .exactmath import divisor_pairs, exact_div, matchings, phi

__all__ = [
    "BOUQUET_LABELS",
    "BOUQUET_FAMILIES",
    "BOUQUET_PAIRS",
    "beta",
    "bouquet_count",
    "bouquet_split",
]

BOUQUET_LABELS = ("I", "R")


def _beta_I(n: int, k: int) -> int:
    total = 0
    for d, g in divisor_pairs(2 * n):
        if d % 2:
            # g is even here; every cycle must be matched to its antipode
            total += phi(d) * matchings(g, g // 2) * d ** (g // 2) * k ** (g // 2)
        else:
            total += phi(d) * sum(
                matchings(g, j) * d**j * k ** (g - j) for j in range(g // 2 + 1)
            )
    return exact_div(total, 2 * n)


def _beta_R(n: int, k: int) -> int:
    a = sum(matchings(n, j) * 2**j * k ** (n - j) for j in range(n // 2 + 1))
    b = sum(matchings(n - 1, j) * 2**j * k ** (n - j) for j in range((n - 1) // 2 + 1))
    return exact_div(a + b, 2)


_BETA = {"I": _beta_I, "R": _beta_R}


def beta(label: str, n: int, k: int = 1) -> int:
    """Coset average for bouquets with n loops and k colors; 1 at n = 0."""
    if label not in _BETA:
        raise KeyError(f"unknown bouquet coset label {label!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n == 0:
        return 1
    return _BETA[label](n, k)


BOUQUET_FAMILIES: dict[str, tuple[Term, ...]] = {
    "B1": terms((1, "I")),
    "B2": terms(("1/2", "I"), ("1/2", "R")),
    "B3": terms(("1/2", "I", 2), ("1/2", "R", 2)),
    "B4": terms(("1/2", "I", 2), ("1/2", "R", 2), ("-1/2", "I"), ("-1/2", "R")),
}

BOUQUET_PAIRS: dict[str, tuple[tuple[Term, ...], tuple[Term, ...]]] = {
    "B1/B2": (terms((1, "R")), terms(("1/2", "I"), ("-1/2", "R"))),
}


def _check(n: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def bouquet_count(family: str, n: int, k: int = 1) -> int:
    if family not in BOUQUET_FAMILIES:
        raise KeyError(f"unknown bouquet family {family!r}")
    _check(n, k)
    return evaluate_combination(BOUQUET_FAMILIES[family], beta, n, k)


def bouquet_split(pair: str, n: int, k: int = 1) -> tuple[int, int]:
    if pair not in BOUQUET_PAIRS:
        raise KeyError(f"unknown bouquet pair {pair!r}")
    _check(n, k)
    sym, ap = BOUQUET_PAIRS[pair]
    return evaluate_combination(sym, beta, n, k), evaluate_combination(ap, beta, n, k)
