from __future__ import annotations

import math

import numpy as np
import pytest

from embedcount import oracle
from embedcount.actions import (
    GROUP_SPECS,
    BouquetSym,
    DipoleSym,
    act,
    expand,
    full_group,
    group_spec,
)
from embedcount.objects import (
    count_colored_matchings,
    count_dipoles,
    encode,
    gen_colored_matchings,
    gen_dipoles,
    gen_signed_colored_matchings,
)
from embedcount.oracle import (
    OracleLimits,
    ResourceCapExceeded,
    coset_average_bruteforce,
    coset_fixed_sum,
    fixed_count,
    orbit_count,
    orbit_counts,
)


def test_fixed_count_examples():
    assert fixed_count(DipoleSym(4)) == 24
    assert fixed_count(DipoleSym(3, h=1, k=1)) == 3
    assert fixed_count(BouquetSym(2, h=1)) == 1


def test_fixed_count_identity_is_object_count():
    for n in range(1, 6):
        assert fixed_count(DipoleSym(n)) == count_dipoles(n)
        assert fixed_count(BouquetSym(n), k=2) == count_colored_matchings(n, 2)


def test_fixed_count_matches_scalar_scan():
    for n in range(1, 5):
        for g in expand(full_group("dipole"), n):
            assert fixed_count(g) == sum(1 for x in gen_dipoles(n) if act(g, x) == x)


@pytest.mark.parametrize(
    "family, label, n, expected",
    [("dipole", "I", 5, 8), ("dipole", "X", 5, 6), ("bouquet", "R", 4, 16)],
)
def test_coset_average_examples(family, label, n, expected):
    assert coset_average_bruteforce(family, label, n) == expected


@pytest.mark.parametrize(
    "name, family, n, expected",
    [("<S0,S1>", "dipole", 5, 8), ("<S0,S1,R0,R1,X>", "dipole", 6, 10), ("<S>", "bouquet", 3, 5)],
)
def test_orbit_count_examples(name, family, n, expected):
    rep = orbit_count(group_spec(family, name), n)
    assert rep.orbit_count_burnside == rep.orbit_count_canonical == expected
    assert sum(rep.per_coset_fixed_sums.values()) == expected * rep.group.order(n)


def test_conjugate_coset_sums_agree():
    for n in range(1, 7):
        for a, b in (("R0", "R1"), ("RX", "X"), ("R0X", "R1X")):
            assert coset_fixed_sum("dipole", a, n) == coset_fixed_sum("dipole", b, n)


def _scalar_orbits(spec, n, objects):
    elems = expand(spec, n)
    seen = set()
    sizes = []
    for x in objects:
        kx = encode(x)
        if kx in seen:
            continue
        orbit = {encode(act(g, x)) for g in elems}
        seen |= orbit
        sizes.append(len(orbit))
    return sizes


def test_orbit_sizes_divide_group_order():
    cases = [("dipole", n, lambda n: list(gen_dipoles(n))) for n in (1, 2, 3, 4, 5)]
    cases += [("bouquet", n, lambda n: list(gen_colored_matchings(n, 2))) for n in (1, 2, 3)]
    cases += [("dirbouquet", n, lambda n: list(gen_signed_colored_matchings(n, 2))) for n in (1, 2, 3)]
    for family, n, gen in cases:
        objects = gen(n)
        for spec in GROUP_SPECS.values():
            if spec.family != family:
                continue
            sizes = _scalar_orbits(spec, n, objects)
            assert sum(sizes) == len(objects)
            assert all(spec.order(n) % s == 0 for s in sizes)
            k = 1 if family == "dipole" else 2
            assert orbit_count(spec, n, k).orbit_count_canonical == len(sizes)


def test_partitioning_does_not_change_result():
    specs = [s for s in GROUP_SPECS.values() if s.family == "bouquet"]
    ref = orbit_counts(specs, 4, 2)
    for batch in (1, 7, 50, 1000):
        got = orbit_counts(specs, 4, 2, batch_size=batch)
        for name in ref:
            assert got[name] == ref[name]


def test_parallel_workers_match_serial():
    specs = [s for s in GROUP_SPECS.values() if s.family == "dipole"]
    serial = orbit_counts(specs, 5)
    parallel = orbit_counts(specs, 5, batch_size=17, workers=2)
    assert serial == parallel


def test_lexicographic_fallback_matches_packed_keys():
    rng = np.random.default_rng(0)
    a = rng.integers(0, 4, size=(500, 6))
    b = rng.integers(0, 4, size=(500, 6))
    w = oracle._weights(6, 4)
    packed = oracle._pack(a.T.copy(), w) <= oracle._pack(b.T.copy(), w)
    assert (oracle._lex_le(a, b) == packed).all()
    assert oracle._weights(40, 100) is None


def test_unpacked_path_gives_same_counts(monkeypatch):
    spec = group_spec("dirbouquet", "<S,R,F>")
    ref = orbit_count(spec, 3, 2)
    monkeypatch.setattr(oracle, "_weights", lambda width, base: None)
    assert orbit_count(spec, 3, 2) == ref


def test_n_zero_is_trivial():
    for spec in GROUP_SPECS.values():
        rep = orbit_count(spec, 0)
        assert rep.orbit_count_burnside == rep.orbit_count_canonical == 1
    assert coset_average_bruteforce("dipole", "R1X", 0) == 1


def test_resource_cap():
    with pytest.raises(ResourceCapExceeded):
        orbit_count(group_spec("dipole", "<S0,S1>"), 9)
    with pytest.raises(ResourceCapExceeded):
        orbit_count(group_spec("bouquet", "<S>"), 3, 4)
    tight = OracleLimits(dipole_max_n=3)
    with pytest.raises(ResourceCapExceeded):
        fixed_count(DipoleSym(4), limits=tight)


def test_mixed_families_rejected():
    with pytest.raises(ValueError):
        orbit_counts([group_spec("dipole", "<S0,S1>"), group_spec("bouquet", "<S>")], 2)


def test_dipole_orbit_counts_reach_necklace_bound():
    # every orbit of <S0,S1> has at most n^2 elements
    for n in range(1, 7):
        rep = orbit_count(group_spec("dipole", "<S0,S1>"), n)
        assert rep.orbit_count_canonical >= math.ceil(math.factorial(n) / n**2)
