"""Closed forms for dipole embeddings.

``delta(T, n)`` is the average number of labeled dipoles (permutations of
Z_n) fixed by an element of the coset of the shift subgroup <S0, S1> with
representative T.  Every family D1..D8 and every symmetric/asymmetric split
is a fixed rational combination of these averages.
"""

from __future__ import annotations

import logging

from .combination import Term, evaluate_combination, terms
from .exactmath import divisor_pairs, exact_div, factorial, matchings, phi, sqrt_count

log = logging.getLogger(__name__)

__all__ = [
    "DIPOLE_LABELS",
    "DIPOLE_ALIASES",
    "DIPOLE_FAMILIES",
    "DIPOLE_PAIRS",
    "resolve_label",
    "delta",
    "dipole_count",
    "dipole_split",
]

DIPOLE_LABELS = ("I", "X", "R", "R1", "R1X")
# conjugate cosets have equal averages
DIPOLE_ALIASES = {"R0": "R1", "RX": "X", "R0X": "R1X"}


def resolve_label(label: str) -> str:
    if label in DIPOLE_LABELS:
        return label
    if label in DIPOLE_ALIASES:
        target = DIPOLE_ALIASES[label]
        log.info("delta(%s) evaluated as delta(%s) (conjugate coset)", label, target)
        return target
    raise KeyError(f"unknown dipole coset label {label!r}")


def _delta_I(n: int) -> int:
    total = sum(phi(d) ** 2 * factorial(g - 1) * d ** (g - 1) for d, g in divisor_pairs(n))
    return exact_div(total, n)


def _delta_X(n: int) -> int:
    return exact_div(sum(phi(d) * sqrt_count(d, g) for d, g in divisor_pairs(n)), n)


def _delta_R(n: int) -> int:
    if n % 2:
        m = (n - 1) // 2
        return factorial(m) * 2**m
    m = n // 2
    # (n+2) (m-1)! 2^(m-3), kept integral for n = 2, 4
    return exact_div((n + 2) * factorial(m - 1) * 2**m, 8)


def _delta_R1(n: int) -> int:
    if n <= 2:
        return 1
    if n % 2:
        return 0
    m = n // 2
    return exact_div(factorial(m) * 2 ** (m - 1), n)


def _delta_R1X(n: int) -> int:
    r = n % 4
    if r == 3:
        return 0
    if r == 0:
        return exact_div(matchings(n // 2, n // 4) * 2 ** (n // 4), 2)
    m = (n - r) // 2
    return matchings(m, m // 2) * 2 ** (m // 2)


_DELTA = {"I": _delta_I, "X": _delta_X, "R": _delta_R, "R1": _delta_R1, "R1X": _delta_R1X}


def delta(label: str, n: int) -> int:
    """Coset average for dipoles with n edges; 1 at n = 0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    label = resolve_label(label)
    if n == 0:
        return 1
    return _DELTA[label](n)


DIPOLE_FAMILIES: dict[str, tuple[Term, ...]] = {
    "D1": terms((1, "I")),
    "D2": terms(("1/2", "I"), ("1/2", "X")),
    "D3": terms(("1/2", "I"), ("1/2", "R")),
    "D4": terms(("1/4", "I"), ("1/4", "R"), ("1/2", "X")),
    "D5": terms(("1/4", "I"), ("1/4", "R"), ("1/2", "R1")),
    "D6": terms(("1/8", "I"), ("1/8", "R"), ("1/4", "R1"), ("1/4", "X"), ("1/4", "R1X")),
    "D7": terms(("1/2", "I"), ("1/2", "R1")),
    "D8": terms(("1/4", "I"), ("1/4", "R"), ("1/2", "R1X")),
}

# pair -> (symmetric, asymmetric pairs); objects family first
DIPOLE_PAIRS: dict[str, tuple[tuple[Term, ...], tuple[Term, ...]]] = {
    "D1/D3": (terms((1, "R")), terms(("1/2", "I"), ("-1/2", "R"))),
    "D2/D4": (terms(("1/2", "R"), ("1/2", "X")), terms(("1/4", "I"), ("-1/4", "R"))),
    "D1/D2": (terms((1, "X")), terms(("1/2", "I"), ("-1/2", "X"))),
    "D3/D4": (terms((1, "X")), terms(("1/4", "I"), ("1/4", "R"), ("-1/2", "X"))),
    "D5/D6": (
        terms(("1/2", "X"), ("1/2", "R1X")),
        terms(("1/8", "I"), ("1/8", "R"), ("1/4", "R1"), ("-1/4", "X"), ("-1/4", "R1X")),
    ),
    "D3/D5": (terms((1, "R1")), terms(("1/4", "I"), ("1/4", "R"), ("-1/2", "R1"))),
    "D4/D6": (
        terms(("1/2", "R1"), ("1/2", "R1X")),
        terms(("1/8", "I"), ("1/8", "R"), ("1/4", "X"), ("-1/4", "R1"), ("-1/4", "R1X")),
    ),
    "D1/D7": (terms((1, "R1")), terms(("1/2", "I"), ("-1/2", "R1"))),
    "D7/D5": (terms(("1/2", "R"), ("1/2", "R1")), terms(("1/4", "I"), ("-1/4", "R"))),
    "D3/D8": (terms((1, "R1X")), terms(("1/4", "I"), ("1/4", "R"), ("-1/2", "R1X"))),
    "D8/D6": (
        terms(("1/2", "R1"), ("1/2", "X")),
        terms(("1/8", "I"), ("1/8", "R"), ("1/4", "R1X"), ("-1/4", "R1"), ("-1/4", "X")),
    ),
}


def _avg(label: str, n: int, k: int) -> int:
    return delta(label, n)


def dipole_count(family: str, n: int) -> int:
    if family not in DIPOLE_FAMILIES:
        raise KeyError(f"unknown dipole family {family!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return evaluate_combination(DIPOLE_FAMILIES[family], _avg, n)


def dipole_split(pair: str, n: int) -> tuple[int, int]:
    """(symmetric objects, asymmetric pairs) for the involution relating the pair."""
    if pair not in DIPOLE_PAIRS:
        raise KeyError(f"unknown dipole pair {pair!r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    sym, ap = DIPOLE_PAIRS[pair]
    return evaluate_combination(sym, _avg, n), evaluate_combination(ap, _avg, n)
