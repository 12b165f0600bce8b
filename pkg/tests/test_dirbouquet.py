from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from embedcount.dirbouquet import (
    DIRBOUQUET_FAMILIES,
    DIRBOUQUET_LABELS,
    DIRBOUQUET_PAIRS,
    alpha,
    dirbouquet_count,
    dirbouquet_split,
)
from embedcount.oracle import coset_average_bruteforce


@pytest.mark.parametrize("label, n, expected", [("I", 7, 726), ("R", 9, 384), ("RF", 6, 76)])
def test_alpha_examples(label, n, expected):
    assert alpha(label, n) == expected


def test_alpha_rf_starts_at_empty_matching():
    # involution counts 1, 1, 2, 4, 10, 26, 76
    assert [alpha("RF", n) for n in range(7)] == [1, 1, 2, 4, 10, 26, 76]


@pytest.mark.parametrize("family, n, expected", [("A1", 10, 363288), ("A4", 8, 1466), ("A6", 5, 420)])
def test_count_examples(family, n, expected):
    assert dirbouquet_count(family, n) == expected


@pytest.mark.parametrize("pair, n, expected", [("A1/A2", 5, (8, 10)), ("A6/A8", 4, (38, 8)), ("A5/A4", 7, (41, 219))])
def test_split_examples(pair, n, expected):
    assert dirbouquet_split(pair, n) == expected


def test_alpha_matches_oracle():
    for k in (1, 2):
        for n in range(0, 6):
            for label in DIRBOUQUET_LABELS:
                assert alpha(label, n, k) == coset_average_bruteforce("dirbouquet", label, n, k)


def test_reflection_and_reversal_vanish_for_even_n():
    for n in range(2, 60, 2):
        for k in (1, 2, 3):
            assert alpha("R", n, k) == 0
            assert alpha("F", n, k) == 0
            assert dirbouquet_split("A1/A2", n, k)[0] == 0
            assert dirbouquet_split("A1/A3", n, k)[0] == 0


def test_integrality():
    for n in range(1, 201):
        for k in range(1, 6):
            for label in DIRBOUQUET_LABELS:
                assert isinstance(alpha(label, n, k), int)


@given(st.integers(0, 100), st.integers(1, 3))
def test_four_coset_identity(n, k):
    c = {f: dirbouquet_count(f, n, k) for f in ("A1", "A2", "A3", "A4", "A5")}
    assert c["A2"] + c["A3"] + c["A5"] == c["A1"] + 2 * c["A4"]


@given(st.integers(0, 50), st.integers(1, 3))
def test_doubled_colors(n, k):
    assert dirbouquet_count("A6", n, k) == dirbouquet_count("A2", n, 2 * k)
    assert dirbouquet_count("A8", n, k) == dirbouquet_count("A4", n, 2 * k)
    assert dirbouquet_count("A7", n, k) >= 0
    assert dirbouquet_count("A9", n, k) >= 0


@given(st.integers(0, 100), st.integers(1, 3), st.sampled_from(sorted(DIRBOUQUET_PAIRS)))
def test_split_consistency(n, k, pair):
    objects, classes = pair.split("/")
    s, ap = dirbouquet_split(pair, n, k)
    assert dirbouquet_count(objects, n, k) == s + 2 * ap
    assert dirbouquet_count(classes, n, k) == s + ap


def test_n_zero():
    values = {f: dirbouquet_count(f, 0) for f in DIRBOUQUET_FAMILIES}
    assert values == {"A1": 1, "A2": 1, "A3": 1, "A4": 1, "A5": 1, "A6": 1, "A7": 0, "A8": 1, "A9": 0}
