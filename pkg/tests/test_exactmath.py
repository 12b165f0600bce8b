from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from embedcount.exactmath import (
    InexactDivisionError,
    divisor_pairs,
    double_factorial,
    exact_div,
    exact_pow,
    matchings,
    phi,
    sqrt_count,
    sqrt_count_of,
)


def brute_roots(alpha: tuple[int, ...]) -> int:
    m = len(alpha)
    return sum(
        1 for tau in itertools.permutations(range(m)) if all(tau[tau[i]] == alpha[i] for i in range(m))
    )


def brute_partial_matchings(n: int, j: int) -> int:
    pairs = list(itertools.combinations(range(n), 2))
    return sum(1 for chosen in itertools.combinations(pairs, j) if len({x for p in chosen for x in p}) == 2 * j)


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 2), (12, 4)])
def test_phi_examples(n, expected):
    assert phi(n) == expected


def test_phi_matches_gcd_scan():
    for n in range(1, 300):
        assert phi(n) == sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


@settings(max_examples=200)
@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_phi_multiplicative_on_coprime(a, b):
    if math.gcd(a, b) == 1:
        assert phi(a * b) == phi(a) * phi(b)


def test_phi_rejects_nonpositive():
    with pytest.raises(ValueError):
        phi(0)


@pytest.mark.parametrize("n, j, expected", [(5, 0, 1), (4, 2, 3), (5, 2, 15), (3, 2, 0)])
def test_matchings_examples(n, j, expected):
    assert matchings(n, j) == expected


def test_matchings_against_enumeration():
    for n in range(9):
        for j in range(n // 2 + 1):
            assert matchings(n, j) == brute_partial_matchings(n, j)


def test_matchings_factorial_identity():
    for n in range(31):
        for j in range(n // 2 + 1):
            assert matchings(n, j) * math.factorial(n - 2 * j) * 2**j * math.factorial(j) == math.factorial(n)


def test_total_matchings_against_enumeration():
    for n in range(11):
        involutions = sum(matchings(n, j) for j in range(n // 2 + 1))
        if n <= 7:
            assert involutions == brute_roots(tuple(range(n)))
        # telephone numbers
        assert involutions == [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496][n]


@pytest.mark.parametrize("l, m, expected", [(2, 1, 0), (2, 2, 2), (1, 3, 4)])
def test_sqrt_count_examples(l, m, expected):
    assert sqrt_count(l, m) == expected


@pytest.mark.parametrize(
    "alpha, expected",
    [((0,), 1), ((1, 2, 3, 0), 0), ((1, 0, 3, 2), 2)],
)
def test_sqrt_count_of_examples(alpha, expected):
    assert sqrt_count_of(alpha) == expected


def test_sqrt_count_of_brute_force_small():
    for m in range(5):
        for alpha in itertools.permutations(range(m)):
            assert sqrt_count_of(alpha) == brute_roots(alpha)


def test_divisor_pairs():
    assert divisor_pairs(1) == [(1, 1)]
    assert divisor_pairs(6) == [(1, 6), (2, 3), (3, 2), (6, 1)]
    pairs = divisor_pairs(12)
    assert len(pairs) == 6
    assert all(p.d * p.g == 12 for p in pairs)


@given(st.integers(1, 5000))
def test_divisor_pairs_complete(n):
    pairs = divisor_pairs(n)
    assert [p.d for p in pairs] == [d for d in range(1, n + 1) if n % d == 0]
    assert all(p.d * p.g == n for p in pairs)


def test_exact_div_refuses_remainder():
    assert exact_div(12, 4) == 3
    with pytest.raises(InexactDivisionError):
        exact_div(13, 4)
    with pytest.raises(ZeroDivisionError):
        exact_div(1, 0)


def test_exact_pow_rejects_negative_exponent():
    assert exact_pow(3, 4) == 81
    with pytest.raises(ValueError):
        exact_pow(2, -1)


def test_double_factorial_convention():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(7) == 105
