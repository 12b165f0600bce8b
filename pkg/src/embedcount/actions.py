"""Symmetry groups in normal form and their actions on labeled objects.

Dipole elements are ``S0^h S1^k R0^p R1^q X^s`` acting on label pairs
``(a, b)``: swap if s, negate the first coordinate if p and the second if q,
then add ``(h, k)``.  Bouquet elements ``S^h R^r`` act on Z_2n by
``a -> (-1)^r a + h``; directed-bouquet elements add the sign flip ``F^f``.

Elements are stored only in normal form and composition renormalizes, so
two elements are equal exactly when their tuples are equal.  This holds for
every n, including n = 1, 2 where the action on objects is not faithful.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .objects import ColoredMatching, LabeledDipole, SignedColoredMatching

__all__ = [
    "DipoleSym",
    "BouquetSym",
    "DirBouquetSym",
    "GroupElement",
    "GroupSpec",
    "DIPOLE_COSETS",
    "BOUQUET_COSETS",
    "DIRBOUQUET_COSETS",
    "GROUP_SPECS",
    "group_spec",
    "coset_element",
    "coset",
    "expand",
    "act",
    "act_dipole",
    "act_bouquet",
    "act_dirbouquet",
]


@dataclass(frozen=True)
class DipoleSym:
    n: int
    h: int = 0
    k: int = 0
    p: int = 0
    q: int = 0
    s: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("dipole symmetries need n >= 1")
        object.__setattr__(self, "h", self.h % self.n)
        object.__setattr__(self, "k", self.k % self.n)
        for bit in (self.p, self.q, self.s):
            if bit not in (0, 1):
                raise ValueError(f"p, q, s must be 0 or 1, got {(self.p, self.q, self.s)}")

    def point(self, a: int, b: int) -> tuple[int, int]:
        if self.s:
            a, b = b, a
        a = -a if self.p else a
        b = -b if self.q else b
        return (a + self.h) % self.n, (b + self.k) % self.n

    def __mul__(self, other: "DipoleSym") -> "DipoleSym":
        """``self * other`` applies other first."""
        if other.n != self.n:
            raise ValueError("cannot compose elements for different n")
        if self.s:
            p2, q2, t0, t1 = other.q, other.p, other.k, other.h
        else:
            p2, q2, t0, t1 = other.p, other.q, other.h, other.k
        h = (-t0 if self.p else t0) + self.h
        k = (-t1 if self.q else t1) + self.k
        return DipoleSym(self.n, h, k, self.p ^ p2, self.q ^ q2, self.s ^ other.s)

    def inverse(self) -> "DipoleSym":
        # x -> D P x + t  has inverse  y -> P D y - P D t
        p, q = (self.q, self.p) if self.s else (self.p, self.q)
        t0, t1 = (self.k, self.h) if self.s else (self.h, self.k)
        h = t0 if p else -t0
        k = t1 if q else -t1
        return DipoleSym(self.n, h, k, p, q, self.s)

    def coset_label(self) -> str:
        return _DIPOLE_LABEL_OF[(self.p, self.q, self.s)]


@dataclass(frozen=True)
class BouquetSym:
    n: int
    h: int = 0
    r: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("bouquet symmetries need n >= 1")
        object.__setattr__(self, "h", self.h % (2 * self.n))
        if self.r not in (0, 1):
            raise ValueError(f"r must be 0 or 1, got {self.r}")

    def point(self, a: int) -> int:
        return ((-a if self.r else a) + self.h) % (2 * self.n)

    def __mul__(self, other: "BouquetSym") -> "BouquetSym":
        if other.n != self.n:
            raise ValueError("cannot compose elements for different n")
        return BouquetSym(self.n, self.h + (-other.h if self.r else other.h), self.r ^ other.r)

    def inverse(self) -> "BouquetSym":
        return BouquetSym(self.n, self.h if self.r else -self.h, self.r)

    def coset_label(self) -> str:
        return "R" if self.r else "I"


@dataclass(frozen=True)
class DirBouquetSym:
    n: int
    h: int = 0
    r: int = 0
    f: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("directed bouquet symmetries need n >= 1")
        object.__setattr__(self, "h", self.h % (2 * self.n))
        if self.r not in (0, 1) or self.f not in (0, 1):
            raise ValueError(f"r, f must be 0 or 1, got {(self.r, self.f)}")

    def point(self, a: int) -> int:
        return ((-a if self.r else a) + self.h) % (2 * self.n)

    def flips_sign(self) -> bool:
        # odd shifts swap label parity; F flips every sign
        return bool(self.h % 2) != bool(self.f)

    def __mul__(self, other: "DirBouquetSym") -> "DirBouquetSym":
        if other.n != self.n:
            raise ValueError("cannot compose elements for different n")
        h = self.h + (-other.h if self.r else other.h)
        return DirBouquetSym(self.n, h, self.r ^ other.r, self.f ^ other.f)

    def inverse(self) -> "DirBouquetSym":
        return DirBouquetSym(self.n, self.h if self.r else -self.h, self.r, self.f)

    def coset_label(self) -> str:
        return {(0, 0): "I", (1, 0): "R", (0, 1): "F", (1, 1): "RF"}[(self.r, self.f)]


GroupElement = Union[DipoleSym, BouquetSym, DirBouquetSym]

# coset representatives of the pure-shift subgroup, as (p, q, s) / r / (r, f)
DIPOLE_COSETS: dict[str, tuple[int, int, int]] = {
    "I": (0, 0, 0),
    "X": (0, 0, 1),
    "R": (1, 1, 0),
    "RX": (1, 1, 1),
    "R0": (1, 0, 0),
    "R1": (0, 1, 0),
    "R0X": (1, 0, 1),
    "R1X": (0, 1, 1),
}
_DIPOLE_LABEL_OF = {v: key for key, v in DIPOLE_COSETS.items()}
BOUQUET_COSETS: dict[str, int] = {"I": 0, "R": 1}
DIRBOUQUET_COSETS: dict[str, tuple[int, int]] = {"I": (0, 0), "R": (1, 0), "F": (0, 1), "RF": (1, 1)}

FAMILIES = ("dipole", "bouquet", "dirbouquet")


@dataclass(frozen=True)
class GroupSpec:
    """One of the named groups between the shift subgroup and the full group.

    ``counts`` is the catalog family whose value is the orbit count.
    """

    family: str
    name: str
    cosets: tuple[str, ...]
    counts: str

    def order(self, n: int) -> int:
        base = n * n if self.family == "dipole" else 2 * n
        return base * len(self.cosets)


def _spec(family: str, name: str, cosets: str, counts: str) -> GroupSpec:
    return GroupSpec(family, name, tuple(cosets.split()), counts)


_SPECS = [
    _spec("dipole", "<S0,S1>", "I", "D1"),
    _spec("dipole", "<S0,S1,X>", "I X", "D2"),
    _spec("dipole", "<S0,S1,RX>", "I RX", "D2"),
    _spec("dipole", "<S0,S1,R>", "I R", "D3"),
    _spec("dipole", "<S0,S1,R,X>", "I R X RX", "D4"),
    _spec("dipole", "<S0,S1,R0,R1>", "I R0 R1 R", "D5"),
    _spec("dipole", "<S0,S1,R0,R1,X>", "I R0 R1 R X R0X R1X RX", "D6"),
    _spec("dipole", "<S0,S1,R1>", "I R1", "D7"),
    _spec("dipole", "<S0,S1,R0>", "I R0", "D7"),
    _spec("dipole", "<S0,S1,R1X>", "I R R0X R1X", "D8"),
    _spec("bouquet", "<S>", "I", "B1"),
    _spec("bouquet", "<S,R>", "I R", "B2"),
    _spec("dirbouquet", "<S>", "I", "A1"),
    _spec("dirbouquet", "<S,R>", "I R", "A2"),
    _spec("dirbouquet", "<S,F>", "I F", "A3"),
    _spec("dirbouquet", "<S,R,F>", "I R F RF", "A4"),
    _spec("dirbouquet", "<S,RF>", "I RF", "A5"),
]
GROUP_SPECS: dict[str, GroupSpec] = {f"{s.family}:{s.name}": s for s in _SPECS}


def group_spec(family: str, name: str) -> GroupSpec:
    try:
        return GROUP_SPECS[f"{family}:{name}"]
    except KeyError:
        raise KeyError(f"unknown {family} group {name!r}") from None


def full_group(family: str) -> GroupSpec:
    return {
        "dipole": group_spec("dipole", "<S0,S1,R0,R1,X>"),
        "bouquet": group_spec("bouquet", "<S,R>"),
        "dirbouquet": group_spec("dirbouquet", "<S,R,F>"),
    }[family]


def coset_element(family: str, label: str, n: int, shift: tuple[int, ...] = ()) -> GroupElement:
    """Element ``shift * T`` of the coset labelled T."""
    if family == "dipole":
        h, k = shift or (0, 0)
        return DipoleSym(n, h, k, *DIPOLE_COSETS[label])
    if family == "bouquet":
        (h,) = shift or (0,)
        return BouquetSym(n, h, BOUQUET_COSETS[label])
    if family == "dirbouquet":
        (h,) = shift or (0,)
        return DirBouquetSym(n, h, *DIRBOUQUET_COSETS[label])
    raise ValueError(f"unknown family {family!r}")


def coset(family: str, label: str, n: int) -> list[GroupElement]:
    """All elements of the coset (shift subgroup) * T, in shift order."""
    if family == "dipole":
        return [coset_element(family, label, n, (h, k)) for h in range(n) for k in range(n)]
    return [coset_element(family, label, n, (h,)) for h in range(2 * n)]


def expand(spec: GroupSpec, n: int) -> list[GroupElement]:
    if n < 1:
        raise ValueError(f"groups are defined for n >= 1, got {n}")
    if GROUP_SPECS.get(f"{spec.family}:{spec.name}") != spec:
        raise KeyError(f"unknown group spec {spec}")
    return [g for label in spec.cosets for g in coset(spec.family, label, n)]


# ---------------------------------------------------------------------------
# actions on scalar objects

def act_dipole(g: DipoleSym, x: LabeledDipole) -> LabeledDipole:
    if g.n != x.n:
        raise ValueError(f"element for n={g.n} applied to dipole with n={x.n}")
    out = [0] * x.n
    for a, b in enumerate(x.pi):
        a2, b2 = g.point(a, b)
        out[a2] = b2
    return LabeledDipole(tuple(out))


def act_bouquet(g: BouquetSym, x: ColoredMatching) -> ColoredMatching:
    if g.n != x.n:
        raise ValueError(f"element for n={g.n} applied to matching with n={x.n}")
    partner = [0] * len(x.partner)
    color = [0] * len(x.partner)
    for a, b in enumerate(x.partner):
        partner[g.point(a)] = g.point(b)
        color[g.point(a)] = x.color[a]
    return ColoredMatching(tuple(partner), tuple(color), x.k)


def act_dirbouquet(g: DirBouquetSym, x: SignedColoredMatching) -> SignedColoredMatching:
    if g.n != x.n:
        raise ValueError(f"element for n={g.n} applied to matching with n={x.n}")
    partner = [0] * len(x.partner)
    color = [0] * len(x.partner)
    for a, b in enumerate(x.partner):
        partner[g.point(a)] = g.point(b)
        color[g.point(a)] = x.color[a]
    eps = -x.epsilon if g.flips_sign() else x.epsilon
    return SignedColoredMatching(tuple(partner), tuple(color), eps, x.k)


def act(g: GroupElement, x):
    if isinstance(g, DipoleSym):
        return act_dipole(g, x)
    if isinstance(g, DirBouquetSym):
        return act_dirbouquet(g, x)
    if isinstance(g, BouquetSym):
        return act_bouquet(g, x)
    raise TypeError(f"not a group element: {g!r}")
