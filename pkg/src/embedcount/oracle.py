"""Brute-force orbit counting over explicitly generated labeled objects.

Two independent counts are produced for every group:

* Burnside: the average number of fixed objects over all group elements.
* Canonical: the number of objects whose key is the minimum of its orbit,
  found by applying every group element to every object.

Objects are processed in numpy blocks.  Each block yields a partial tally
(fixed-point counts per element, minimal-representative counts per group);
partial tallies are merged by addition, so any partitioning of the object
stream gives the same result.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .actions import (
    BouquetSym,
    DipoleSym,
    DirBouquetSym,
    GroupElement,
    GroupSpec,
    coset,
    full_group,
)
from .exactmath import exact_div
from .objects import colored_matching_batches, dipole_batches, signed_matching_batches

log = logging.getLogger(__name__)

__all__ = [
    "ResourceCapExceeded",
    "OracleLimits",
    "DEFAULT_LIMITS",
    "OrbitCountReport",
    "batch_act",
    "fixed_count",
    "coset_fixed_sum",
    "coset_average_bruteforce",
    "orbit_count",
    "orbit_counts",
]


class ResourceCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    dipole_max_n: int = 8
    bouquet_max_n: int = 6
    bouquet_max_k: int = 3
    dirbouquet_max_n: int = 5
    dirbouquet_max_k: int = 2

    def check(self, family: str, n: int, k: int) -> None:
        if family == "dipole":
            ok = n <= self.dipole_max_n
        elif family == "bouquet":
            ok = n <= self.bouquet_max_n and k <= self.bouquet_max_k
        elif family == "dirbouquet":
            ok = n <= self.dirbouquet_max_n and k <= self.dirbouquet_max_k
        else:
            raise ValueError(f"unknown family {family!r}")
        if not ok:
            raise ResourceCapExceeded(
                f"{family} enumeration with n={n}, k={k} exceeds the oracle cap {self}"
            )


DEFAULT_LIMITS = OracleLimits()
UNLIMITED = OracleLimits(10**9, 10**9, 10**9, 10**9, 10**9)


@dataclass
class OrbitCountReport:
    group: GroupSpec
    n: int
    k: int
    orbit_count_burnside: int
    orbit_count_canonical: int
    per_coset_fixed_sums: dict[str, int] = field(default_factory=dict)
    object_count: int = 0

    @property
    def consistent(self) -> bool:
        return self.orbit_count_burnside == self.orbit_count_canonical


# ---------------------------------------------------------------------------
# vectorized actions on object blocks

def _sign(bit: int) -> int:
    return -1 if bit else 1


def batch_act(g: GroupElement, rows: np.ndarray, k: int = 1) -> np.ndarray:
    """Apply g to every object row of a block (row layout as in objects.py)."""
    out = np.empty_like(rows)
    if isinstance(g, DipoleSym):
        n = g.n
        idx = np.arange(n)
        if g.s:
            # pair (pi(i), i) -> new[(+-pi(i) + h)] = +-i + k
            cols = (_sign(g.p) * rows + g.h) % n
            vals = np.broadcast_to((_sign(g.q) * idx + g.k) % n, rows.shape)
            np.put_along_axis(out, cols, vals, axis=1)
        else:
            out[:, (_sign(g.p) * idx + g.h) % n] = (_sign(g.q) * rows + g.k) % n
        return out
    size = 2 * g.n
    pos = (_sign(g.r) * np.arange(size) + g.h) % size
    # lookup table on the packed value partner * k + color
    values = np.arange(size * k)
    table = pos[values // k] * k + values % k
    out[:, pos] = table[rows[:, :size]]
    if isinstance(g, DirBouquetSym):
        out[:, size] = rows[:, size] ^ int(g.flips_sign())
    return out


def _weights(width: int, base: int) -> np.ndarray | None:
    """Place values of an order-preserving int64 key, or None on overflow."""
    if base**width >= 2**63:
        return None
    return base ** np.arange(width - 1, -1, -1, dtype=np.int64)


def _pack(cols: np.ndarray, weights: np.ndarray) -> np.ndarray:
    key = np.zeros(cols.shape[1], dtype=np.int64)
    for c, w in zip(cols, weights):
        key += c * w
    return key


def _image_key(g: GroupElement, cols: np.ndarray, k: int, weights: np.ndarray) -> np.ndarray:
    """Packed key of g applied to every object, without building the images.

    ``cols`` is the transposed block: one contiguous array per position.
    """
    key = np.zeros(cols.shape[1], dtype=np.int64)
    if isinstance(g, DipoleSym):
        n = g.n
        idx = np.arange(n)
        if g.s:
            # object column i holds pi(i); its image lands at +-pi(i) + h with value +-i + k
            wt = weights[(_sign(g.p) * idx + g.h) % n]
            vals = (_sign(g.q) * idx + g.k) % n
            for i in range(n):
                key += wt[cols[i]] * vals[i]
        else:
            table = (_sign(g.q) * idx + g.k) % n
            wpos = weights[(_sign(g.p) * idx + g.h) % n]
            for a in range(n):
                key += table[cols[a]] * wpos[a]
        return key
    size = 2 * g.n
    pos = (_sign(g.r) * np.arange(size) + g.h) % size
    values = np.arange(size * k)
    table = pos[values // k] * k + values % k
    wpos = weights[pos]
    for a in range(size):
        key += table[cols[a]] * wpos[a]
    if isinstance(g, DirBouquetSym):
        key += (cols[size] ^ int(g.flips_sign())) * weights[size]
    return key


def _lex_le(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    diff = a != b
    first = diff.argmax(axis=1)
    r = np.arange(len(a))
    return ~diff.any(axis=1) | (a[r, first] < b[r, first])


# ---------------------------------------------------------------------------
# object streams

def _base(family: str, n: int, k: int) -> int:
    if family == "dipole":
        return max(n, 1)
    return max(2 * n * k, 2)


def _batches(family: str, n: int, k: int, batch_size: int) -> Iterator[np.ndarray]:
    if family == "dipole":
        return dipole_batches(n, batch_size)
    if family == "bouquet":
        return colored_matching_batches(n, k, batch_size)
    if family == "dirbouquet":
        return signed_matching_batches(n, k, batch_size)
    raise ValueError(f"unknown family {family!r}")


@dataclass
class _Tally:
    objects: int
    fixed: list[int]  # per element of the element list
    minimal: list[int]  # per group (mask over the element list)

    def __add__(self, other: "_Tally") -> "_Tally":
        return _Tally(
            self.objects + other.objects,
            [a + b for a, b in zip(self.fixed, other.fixed)],
            [a + b for a, b in zip(self.minimal, other.minimal)],
        )


def _tally_block(rows: np.ndarray, family: str, n: int, k: int,
                 elements: Sequence[GroupElement], masks: Sequence[np.ndarray]) -> _Tally:
    weights = _weights(rows.shape[1], _base(family, n, k))
    fixed = []
    is_min = [np.ones(len(rows), dtype=bool) for _ in masks]
    if weights is not None:
        cols = np.ascontiguousarray(rows.T)
        key = _pack(cols, weights)
    for idx, g in enumerate(elements):
        if weights is not None:
            img_key = _image_key(g, cols, k, weights)
            fixed.append(int(np.count_nonzero(img_key == key)))
            le = key <= img_key
        else:
            img = batch_act(g, rows, k)
            fixed.append(int(np.count_nonzero((img == rows).all(axis=1))))
            le = _lex_le(rows, img)
        for m, flags in zip(masks, is_min):
            if m[idx]:
                flags &= le
    return _Tally(len(rows), fixed, [int(np.count_nonzero(f)) for f in is_min])


def _tally_job(args) -> _Tally:
    rows, family, n, k, elements, masks = args
    return _tally_block(rows, family, n, k, elements, masks)


def _run(family: str, n: int, k: int, elements: Sequence[GroupElement],
         masks: Sequence[np.ndarray], batch_size: int, workers: int) -> _Tally:
    total = _Tally(0, [0] * len(elements), [0] * len(masks))
    jobs = ((rows, family, n, k, elements, masks) for rows in _batches(family, n, k, batch_size))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_job, jobs):
                total = total + part
    else:
        for job in jobs:
            total = total + _tally_job(job)
    return total


# ---------------------------------------------------------------------------
# public surface

def _family_of(g: GroupElement) -> str:
    if isinstance(g, DipoleSym):
        return "dipole"
    if isinstance(g, DirBouquetSym):
        return "dirbouquet"
    if isinstance(g, BouquetSym):
        return "bouquet"
    raise TypeError(f"not a group element: {g!r}")


def fixed_count(g: GroupElement, n: int | None = None, k: int = 1, *,
                limits: OracleLimits = DEFAULT_LIMITS, batch_size: int = 1 << 18) -> int:
    """Number of generated objects fixed by g."""
    family = _family_of(g)
    n = g.n if n is None else n
    if n != g.n:
        raise ValueError(f"element for n={g.n} used with n={n}")
    if family == "dipole":
        k = 1
    limits.check(family, n, k)
    return _run(family, n, k, [g], [], batch_size, 1).fixed[0]


def coset_fixed_sum(family: str, label: str, n: int, k: int = 1, *,
                    limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Total number of fixed points over the coset (shift subgroup) * T."""
    limits.check(family, n, k)
    elements = coset(family, label, n)
    return sum(_run(family, n, k, elements, [], 1 << 18, 1).fixed)


def coset_average_bruteforce(family: str, label: str, n: int, k: int = 1, *,
                             limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Average fixed-point count over a coset of the shift subgroup.

    n = 0 gives 1: the single empty object is fixed by everything.
    """
    if n == 0:
        return 1
    if family == "dipole":
        k = 1
    size = n * n if family == "dipole" else 2 * n
    return exact_div(coset_fixed_sum(family, label, n, k, limits=limits), size)


def orbit_counts(specs: Iterable[GroupSpec], n: int, k: int = 1, *,
                 limits: OracleLimits = DEFAULT_LIMITS, batch_size: int = 1 << 18,
                 workers: int = 1) -> dict[str, OrbitCountReport]:
    """Orbit counts for several groups of one family, sharing one object pass.

    Keys of the result are group names.
    """
    specs = list(specs)
    if not specs:
        return {}
    family = specs[0].family
    if any(s.family != family for s in specs):
        raise ValueError("all specs must belong to one family")
    if family == "dipole":
        k = 1
    if n == 0:
        return {
            s.name: OrbitCountReport(s, 0, k, 1, 1, {label: 1 for label in s.cosets}, 1)
            for s in specs
        }
    limits.check(family, n, k)
    whole = full_group(family)
    labels = [label for label in whole.cosets if any(label in s.cosets for s in specs)]
    elements: list[GroupElement] = []
    label_of: list[str] = []
    for label in labels:
        members = coset(family, label, n)
        elements += members
        label_of += [label] * len(members)
    masks = [np.array([lab in s.cosets for lab in label_of]) for s in specs]
    tally = _run(family, n, k, elements, masks, batch_size, workers)
    sums = {label: 0 for label in labels}
    for label, fx in zip(label_of, tally.fixed):
        sums[label] += fx
    out = {}
    for spec, minimal in zip(specs, tally.minimal):
        per = {label: sums[label] for label in spec.cosets}
        burnside = exact_div(sum(per.values()), spec.order(n))
        out[spec.name] = OrbitCountReport(spec, n, k, burnside, minimal, per, tally.objects)
        log.debug("%s n=%d k=%d: burnside=%d canonical=%d", spec.name, n, k, burnside, minimal)
    return out


def orbit_count(spec: GroupSpec, n: int, k: int = 1, **kwargs) -> OrbitCountReport:
    return orbit_counts([spec], n, k, **kwargs)[spec.name]
