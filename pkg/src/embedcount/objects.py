"""Labeled objects enumerated by the orbit oracle.

Three families:

* :class:`LabeledDipole`: a permutation of Z_n (edge with 0-label i has
  1-label ``pi[i]``).
* :class:`ColoredMatching`: a k-colored perfect matching (chord diagram)
  on Z_2n.
* :class:`SignedColoredMatching`: a colored matching pairing every even
  label with an odd one, plus the sign carried by the even labels.

Each family has a scalar generator that yields immutable objects in
lexicographic key order, and a batch generator that yields the same set as
numpy blocks for the vectorized oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np

from .exactmath import double_factorial

__all__ = [
    "LabeledDipole",
    "ColoredMatching",
    "SignedColoredMatching",
    "LabeledObject",
    "gen_dipoles",
    "gen_matchings",
    "gen_bipartite_matchings",
    "gen_colored_matchings",
    "gen_signed_colored_matchings",
    "count_dipoles",
    "count_colored_matchings",
    "count_signed_colored_matchings",
    "encode",
    "decode",
    "dipole_batches",
    "colored_matching_batches",
    "signed_matching_batches",
]


def _check_involution(partner: tuple[int, ...]) -> None:
    for a, b in enumerate(partner):
        if not 0 <= b < len(partner) or b == a or partner[b] != a:
            raise ValueError(f"partner is not a fixed-point-free involution: {partner}")


def _check_colors(partner: tuple[int, ...], color: tuple[int, ...], k: int) -> None:
    if len(color) != len(partner):
        raise ValueError("color must give one entry per label")
    for a, c in enumerate(color):
        if not 0 <= c < k:
            raise ValueError(f"color {c} outside Z_{k}")
        if color[partner[a]] != c:
            raise ValueError(f"labels {a} and {partner[a]} of one edge carry different colors")


@dataclass(frozen=True)
class LabeledDipole:
    pi: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.pi) != list(range(len(self.pi))):
            raise ValueError(f"{self.pi} is not a permutation of Z_{len(self.pi)}")

    @property
    def n(self) -> int:
        return len(self.pi)


@dataclass(frozen=True)
class ColoredMatching:
    """Colored chord diagram. ``color[a]`` is the color of the edge at label a."""

    partner: tuple[int, ...]
    color: tuple[int, ...]
    k: int = 1

    def __post_init__(self) -> None:
        if len(self.partner) % 2:
            raise ValueError("a perfect matching needs an even number of labels")
        _check_involution(self.partner)
        _check_colors(self.partner, self.color, self.k)

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def edges(self) -> dict[tuple[int, int], int]:
        return {(a, b): self.color[a] for a, b in enumerate(self.partner) if a < b}

    @classmethod
    def from_edges(cls, n: int, edges, k: int = 1) -> "ColoredMatching":
        """Build from ``{(a, b): color}`` or an iterable of pairs (color 0)."""
        if not isinstance(edges, dict):
            edges = {tuple(e): 0 for e in edges}
        partner = [-1] * (2 * n)
        color = [0] * (2 * n)
        for (a, b), c in edges.items():
            partner[a], partner[b] = b, a
            color[a] = color[b] = c
        return cls(tuple(partner), tuple(color), k)


@dataclass(frozen=True)
class SignedColoredMatching:
    """Colored matching between even and odd labels; ``epsilon`` is +1 or -1."""

    partner: tuple[int, ...]
    color: tuple[int, ...]
    epsilon: int = 1
    k: int = 1

    def __post_init__(self) -> None:
        if len(self.partner) % 2:
            raise ValueError("a perfect matching needs an even number of labels")
        _check_involution(self.partner)
        _check_colors(self.partner, self.color, self.k)
        for a, b in enumerate(self.partner):
            if (a - b) % 2 == 0:
                raise ValueError(f"edge {{{a}, {b}}} does not join an even and an odd label")
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon}")
        if not self.partner and self.epsilon != 1:
            raise ValueError("the empty object carries epsilon = +1")

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def edges(self) -> dict[tuple[int, int], int]:
        return {(a, b): self.color[a] for a, b in enumerate(self.partner) if a < b}

    @classmethod
    def from_edges(cls, n: int, edges, epsilon: int = 1, k: int = 1) -> "SignedColoredMatching":
        base = ColoredMatching.from_edges(n, edges, k)
        return cls(base.partner, base.color, epsilon, k)


LabeledObject = Union[LabeledDipole, ColoredMatching, SignedColoredMatching]


# ---------------------------------------------------------------------------
# counts

def count_dipoles(n: int) -> int:
    return math.factorial(n)


def count_colored_matchings(n: int, k: int) -> int:
    return double_factorial(2 * n - 1) * k**n


def count_signed_colored_matchings(n: int, k: int) -> int:
    if n == 0:
        return 1
    return 2 * count_dipoles(n) * k**n


def _require_colors(n: int, k: int) -> None:
    if k < 1 and n >= 1:
        raise ValueError(f"need at least one color, got k={k}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


# ---------------------------------------------------------------------------
# scalar generators (lexicographic in the key order of :func:`encode`)

def gen_dipoles(n: int) -> Iterator[LabeledDipole]:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    for pi in itertools.permutations(range(n)):
        yield LabeledDipole(pi)


def _matchings(size: int, bipartite: bool, k: int) -> Iterator[tuple[list[int], list[int]]]:
    partner = [-1] * size
    color = [0] * size

    def rec(a: int) -> Iterator[tuple[list[int], list[int]]]:
        while a < size and partner[a] != -1:
            a += 1
        if a == size:
            yield partner, color
            return
        # a + 1 has the opposite parity, so stepping by 2 keeps edges bipartite
        for b in range(a + 1, size, 2 if bipartite else 1):
            if partner[b] != -1:
                continue
            partner[a], partner[b] = b, a
            for c in range(k):
                color[a] = color[b] = c
                yield from rec(a + 1)
            partner[a] = partner[b] = -1
        color[a] = 0

    yield from rec(0)


def gen_matchings(n: int) -> Iterator[tuple[int, ...]]:
    """Uncolored perfect matchings of Z_2n as partner tuples, lexicographic."""
    for partner, _ in _matchings(2 * n, False, 1):
        yield tuple(partner)


def gen_bipartite_matchings(n: int) -> Iterator[tuple[int, ...]]:
    """Perfect matchings of Z_2n pairing evens with odds, lexicographic."""
    for partner, _ in _matchings(2 * n, True, 1):
        yield tuple(partner)


def gen_colored_matchings(n: int, k: int = 1) -> Iterator[ColoredMatching]:
    _require_colors(n, k)
    for partner, color in _matchings(2 * n, False, k):
        yield ColoredMatching(tuple(partner), tuple(color), k)


def gen_signed_colored_matchings(n: int, k: int = 1) -> Iterator[SignedColoredMatching]:
    _require_colors(n, k)
    if n == 0:
        yield SignedColoredMatching((), (), 1, k)
        return
    for partner, color in _matchings(2 * n, True, k):
        p, c = tuple(partner), tuple(color)
        yield SignedColoredMatching(p, c, 1, k)
        yield SignedColoredMatching(p, c, -1, k)


# ---------------------------------------------------------------------------
# keys

_TAGS = {LabeledDipole: b"D", ColoredMatching: b"B", SignedColoredMatching: b"A"}
_HEADER = 9  # tag, n (4 bytes), k (4 bytes)


def _width(n: int, k: int) -> int:
    top = max(2 * n, k, 2)
    return (top.bit_length() + 7) // 8


def encode(obj: LabeledObject) -> bytes:
    """Byte key; within one (family, n, k) byte order is lexicographic order.

    Dipoles: digits ``pi[0..n-1]``. Matchings: ``partner[a], color[a]`` for
    each label a, then one sign byte (0 for +, 1 for -) for signed ones.
    """
    tag = _TAGS[type(obj)]
    if isinstance(obj, LabeledDipole):
        n, k, digits = obj.n, 1, obj.pi
    else:
        n, k = obj.n, obj.k
        digits = [x for pair in zip(obj.partner, obj.color) for x in pair]
    w = _width(n, k)
    body = b"".join(x.to_bytes(w, "big") for x in digits)
    key = tag + n.to_bytes(4, "big") + k.to_bytes(4, "big") + body
    if isinstance(obj, SignedColoredMatching):
        key += b"\x00" if obj.epsilon == 1 else b"\x01"
    return key


def decode(key: bytes) -> LabeledObject:
    tag = key[:1]
    n = int.from_bytes(key[1:5], "big")
    k = int.from_bytes(key[5:9], "big")
    w = _width(n, k)
    body = key[_HEADER:]
    sign = None
    if tag == b"A":
        body, sign = body[:-1], body[-1]
    digits = [int.from_bytes(body[i:i + w], "big") for i in range(0, len(body), w)]
    if tag == b"D":
        return LabeledDipole(tuple(digits))
    partner, color = tuple(digits[0::2]), tuple(digits[1::2])
    if tag == b"B":
        return ColoredMatching(partner, color, k)
    if tag == b"A":
        return SignedColoredMatching(partner, color, -1 if sign else 1, k)
    raise ValueError(f"unknown object tag {tag!r}")


# ---------------------------------------------------------------------------
# batch generators for the vectorized oracle
#
# Dipole rows are image sequences.  Matching rows hold ``partner[a] * k +
# color[a]`` per label a; signed rows carry one extra trailing column with
# the sign bit (0 for +, 1 for -).  Row order inside a batch is irrelevant to
# the oracle, only the set of rows matters.

def dipole_batches(n: int, batch_size: int = 1 << 16) -> Iterator[np.ndarray]:
    if n == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    perms = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(perms, batch_size))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def _colored_rows(partners: np.ndarray, n: int, k: int) -> np.ndarray:
    """Expand uncolored partner rows by every edge coloring."""
    m, size = partners.shape
    # edge index of each label, edges numbered by their smaller endpoint
    lo = np.minimum(np.arange(size), partners)
    edge_of = np.empty_like(partners)
    for r in range(m):
        order = {a: i for i, a in enumerate(sorted(set(lo[r].tolist())))}
        edge_of[r] = [order[a] for a in lo[r].tolist()]
    colorings = np.array(list(itertools.product(range(k), repeat=n)), dtype=np.int64)
    col = colorings[:, edge_of]  # (k^n, m, size)
    rows = partners[None, :, :] * k + col
    return rows.reshape(-1, size)


def _matching_batches(partner_iter, n: int, k: int, batch_size: int) -> Iterator[np.ndarray]:
    per_matching = k**n
    step = max(1, batch_size // per_matching)
    while True:
        block = list(itertools.islice(partner_iter, step))
        if not block:
            return
        yield _colored_rows(np.array(block, dtype=np.int64), n, k)


def colored_matching_batches(n: int, k: int = 1, batch_size: int = 1 << 18) -> Iterator[np.ndarray]:
    _require_colors(n, k)
    if n == 0:
        yield np.zeros((1, 0), dtype=np.int64)
        return
    yield from _matching_batches(gen_matchings(n), n, k, batch_size)


def signed_matching_batches(n: int, k: int = 1, batch_size: int = 1 << 18) -> Iterator[np.ndarray]:
    _require_colors(n, k)
    if n == 0:
        yield np.zeros((1, 1), dtype=np.int64)
        return
    for rows in _matching_batches(gen_bipartite_matchings(n), n, k, max(1, batch_size // 2)):
        signs = np.repeat(np.array([[0], [1]], dtype=np.int64), len(rows), axis=0)
        yield np.hstack([np.vstack([rows, rows]), signs])
