"""Registry of every named sequence, table export, and oracle verification.

Tokens are family names ("D1", "B3", "A7") or split tokens "PAIR:S" and
"PAIR:AP" ("D1/D3:S").  All sequences start at n = 0.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import bouquet, dipole, dirbouquet
from .actions import GROUP_SPECS, GroupSpec
from .oracle import DEFAULT_LIMITS, OracleLimits, orbit_counts

log = logging.getLogger(__name__)

__all__ = [
    "FamilyId",
    "RegistryEntry",
    "SequenceRecord",
    "REGISTRY",
    "ALIASES",
    "OEIS_IDS",
    "parse_family",
    "canonical_tokens",
    "evaluate",
    "table",
    "FORMATS",
    "format_record",
    "VerifyCell",
    "VerifyReport",
    "DEFAULT_VERIFY_FAMILIES",
    "verify",
]

OEIS_IDS = {
    "D1": "A002619",
    "D5": "A000940",
    "D6": "A006841",
    "D7": "A000939",
    "B1": "A007769",
    "B2": "A054499",
    "B1/B2:S": "A018191",
    "B1/B2:AP": "A054938",
    "A1": "A061417",
    "A1/A5:S": "A000085",
}

# tokens whose values coincide with another split and are not listed separately
ALIASES = {
    "D3/D4:S": "D1/D2:S",
    "D1/D7:S": "D3/D5:S",
    "D7/D5:AP": "D2/D4:AP",
}


@dataclass(frozen=True)
class FamilyId:
    token: str
    family: str  # "dipole", "bouquet" or "dirbouquet"
    base: str  # family name or pair "X/Y"
    part: str | None = None  # None, "S" or "AP"

    @property
    def colored(self) -> bool:
        return self.family != "dipole"

    @property
    def is_split(self) -> bool:
        return self.part is not None

    def __str__(self) -> str:
        return self.token


@dataclass(frozen=True)
class RegistryEntry:
    family: FamilyId
    evaluator: Callable[[int, int], int]
    oeis: str | None = None


def _family_kind(name: str) -> str:
    return {"D": "dipole", "B": "bouquet", "A": "dirbouquet"}[name[0]]


def _count_eval(kind: str, name: str) -> Callable[[int, int], int]:
    if kind == "dipole":
        return lambda n, k: dipole.dipole_count(name, n)
    if kind == "bouquet":
        return lambda n, k: bouquet.bouquet_count(name, n, k)
    return lambda n, k: dirbouquet.dirbouquet_count(name, n, k)


def _split_eval(kind: str, pair: str, part: str) -> Callable[[int, int], int]:
    i = 0 if part == "S" else 1
    if kind == "dipole":
        return lambda n, k: dipole.dipole_split(pair, n)[i]
    if kind == "bouquet":
        return lambda n, k: bouquet.bouquet_split(pair, n, k)[i]
    return lambda n, k: dirbouquet.dirbouquet_split(pair, n, k)[i]


def _build_registry() -> dict[str, RegistryEntry]:
    reg: dict[str, RegistryEntry] = {}
    sources = [
        ("dipole", dipole.DIPOLE_FAMILIES, dipole.DIPOLE_PAIRS),
        ("bouquet", bouquet.BOUQUET_FAMILIES, bouquet.BOUQUET_PAIRS),
        ("dirbouquet", dirbouquet.DIRBOUQUET_FAMILIES, dirbouquet.DIRBOUQUET_PAIRS),
    ]
    for kind, families, pairs in sources:
        for name in families:
            reg[name] = RegistryEntry(FamilyId(name, kind, name), _count_eval(kind, name), OEIS_IDS.get(name))
        for pair in pairs:
            for part in ("S", "AP"):
                token = f"{pair}:{part}"
                if token in ALIASES:
                    continue
                reg[token] = RegistryEntry(
                    FamilyId(token, kind, pair, part), _split_eval(kind, pair, part), OEIS_IDS.get(token)
                )
    return reg


REGISTRY: dict[str, RegistryEntry] = _build_registry()


def canonical_tokens() -> list[str]:
    return list(REGISTRY)


def parse_family(token: str) -> FamilyId:
    """FamilyId for a token; alias tokens keep their own spelling."""
    token = token.strip()
    if token in REGISTRY:
        return REGISTRY[token].family
    if token in ALIASES:
        target = REGISTRY[ALIASES[token]].family
        pair, _, part = token.partition(":")
        return FamilyId(token, target.family, pair, part)
    raise KeyError(f"unknown family {token!r}; see list-families")


def _entry(fid: FamilyId) -> RegistryEntry:
    return REGISTRY[ALIASES.get(fid.token, fid.token)]


def _resolve_k(fid: FamilyId, k: int | None) -> int | None:
    if not fid.colored:
        if k is not None:
            raise ValueError(f"{fid.token} has no color parameter; do not pass k")
        return None
    if k is None:
        return 1
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return k


def evaluate(family: str | FamilyId, n: int, k: int | None = None) -> int:
    fid = family if isinstance(family, FamilyId) else parse_family(family)
    k = _resolve_k(fid, k)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if fid.token in ALIASES:
        log.info("%s evaluated as %s", fid.token, ALIASES[fid.token])
    return _entry(fid).evaluator(n, k or 1)


@dataclass
class SequenceRecord:
    family: str
    offset: int
    values: list[int]
    k: int | None = None
    oeis: str | None = None


def table(family: str | FamilyId, n_max: int, k: int | None = None) -> SequenceRecord:
    fid = family if isinstance(family, FamilyId) else parse_family(family)
    k = _resolve_k(fid, k)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    values = [evaluate(fid, n, k) for n in range(n_max + 1)]
    return SequenceRecord(fid.token, 0, values, k, _entry(fid).oeis)


FORMATS = ("plain", "csv", "json", "bfile")


def format_record(record: SequenceRecord, fmt: str = "plain", start: int = 0) -> str:
    """Render a record; ``start`` drops rows with n < start."""
    if start < 0:
        raise ValueError(f"start must be >= 0, got {start}")
    rows = [(record.offset + i, v) for i, v in enumerate(record.values) if record.offset + i >= start]
    if fmt == "plain":
        return "".join(f"{v}\n" for _, v in rows)
    if fmt == "bfile":
        return "".join(f"{n} {v}\n" for n, v in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "value"])
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        obj = asdict(record)
        obj["offset"] = rows[0][0] if rows else start
        obj["values"] = [v for _, v in rows]
        return json.dumps(obj) + "\n"
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


# ---------------------------------------------------------------------------
# verification against the brute-force oracle

DEFAULT_VERIFY_FAMILIES = ("D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "B1", "B2", "A1", "A2", "A3", "A4", "A5")
DEFAULT_MAX_N = {"dipole": 7, "bouquet": 6, "dirbouquet": 5}
DEFAULT_MAX_K = {"dipole": 1, "bouquet": 3, "dirbouquet": 2}

# colored families defined through 2k colors: name -> (orientable family, minus family or None)
_DOUBLED = {
    "B3": ("B2", None),
    "B4": ("B2", "B2"),
    "A6": ("A2", None),
    "A7": ("A2", "A2"),
    "A8": ("A4", None),
    "A9": ("A4", "A4"),
}


@dataclass(frozen=True)
class VerifyCell:
    family: str
    n: int
    k: int | None
    check: str
    expected: int
    got: int | Fraction

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def describe(self) -> str:
        kk = "-" if self.k is None else self.k
        status = "ok" if self.ok else "MISMATCH"
        return f"{status} {self.family} n={self.n} k={kk} {self.check}: expected={self.expected} got={self.got}"


@dataclass
class VerifyReport:
    cells: list[VerifyCell] = field(default_factory=list)

    @property
    def mismatches(self) -> list[VerifyCell]:
        return [c for c in self.cells if not c.ok]

    @property
    def passed(self) -> bool:
        return not self.mismatches


class _OracleCache:
    def __init__(self, limits: OracleLimits) -> None:
        self.limits = limits
        self._reports: dict[tuple[str, int, int], dict] = {}

    def reports(self, kind: str, n: int, k: int):
        key = (kind, n, k)
        if key not in self._reports:
            specs = [s for s in GROUP_SPECS.values() if s.family == kind]
            self._reports[key] = orbit_counts(specs, n, k, limits=self.limits)
        return self._reports[key]

    def family_value(self, name: str, n: int, k: int) -> int:
        """Orbit count for a base family, built from 2k colors where needed."""
        if name in _DOUBLED:
            plus, minus = _DOUBLED[name]
            value = self.family_value(plus, n, 2 * k)
            return value - self.family_value(minus, n, k) if minus else value
        kind = _family_kind(name)
        spec = _specs_for(name)[0]
        return self.reports(kind, n, 1 if kind == "dipole" else k)[spec.name].orbit_count_burnside


def _specs_for(name: str) -> list[GroupSpec]:
    return [s for s in GROUP_SPECS.values() if s.counts == name]


def _closed_average(kind: str, label: str, n: int, k: int) -> int:
    if kind == "dipole":
        return dipole.delta(label, n)
    if kind == "bouquet":
        return bouquet.beta(label, n, k)
    return dirbouquet.alpha(label, n, k)


def _verify_cell(fid: FamilyId, n: int, k: int, cache: _OracleCache, fault: int) -> list[VerifyCell]:
    kk = k if fid.colored else None
    expected = evaluate(fid, n, kk) + fault
    cells = []
    if fid.is_split:
        objects, classes = fid.base.split("/")
        obj_v = cache.family_value(objects, n, k)
        cls_v = cache.family_value(classes, n, k)
        got = 2 * cls_v - obj_v if fid.part == "S" else obj_v - cls_v
        return [VerifyCell(fid.token, n, kk, "split from orbit counts", expected, got)]
    if fid.base in _DOUBLED:
        got = cache.family_value(fid.base, n, k)
        return [VerifyCell(fid.token, n, kk, "orbit count with 2k colors", expected, got)]
    kind = fid.family
    reports = cache.reports(kind, n, 1 if kind == "dipole" else k)
    for spec in _specs_for(fid.base):
        rep = reports[spec.name]
        cells.append(VerifyCell(fid.token, n, kk, f"burnside {spec.name}", expected, rep.orbit_count_burnside))
        cells.append(VerifyCell(fid.token, n, kk, f"canonical {spec.name}", expected, rep.orbit_count_canonical))
        if n == 0:
            continue
        size = n * n if kind == "dipole" else 2 * n
        for label, total in rep.per_coset_fixed_sums.items():
            closed = _closed_average(kind, label, n, k)
            # an inexact average stays a Fraction and cannot match
            got = Fraction(total, size)
            got = got.numerator if got.denominator == 1 else got
            cells.append(VerifyCell(fid.token, n, kk, f"coset average {label}", closed + fault, got))
    return cells


def verify(
    families: Iterable[str] | None = None,
    max_n: int | None = None,
    max_k: int | None = None,
    limits: OracleLimits = DEFAULT_LIMITS,
    inject_fault: bool = False,
) -> VerifyReport:
    """Compare closed forms against brute-force orbit counts.

    Raises ResourceCapExceeded when a requested cell is beyond ``limits``.
    """
    tokens = list(families) if families else list(DEFAULT_VERIFY_FAMILIES)
    fids = [parse_family(t) for t in tokens]
    cache = _OracleCache(limits)
    report = VerifyReport()
    first = True
    for fid in fids:
        top_n = DEFAULT_MAX_N[fid.family] if max_n is None else max_n
        top_k = 1 if not fid.colored else (DEFAULT_MAX_K[fid.family] if max_k is None else max_k)
        for k in range(1, top_k + 1):
            for n in range(top_n + 1):
                fault = 1 if inject_fault and first else 0
                first = False
                report.cells.extend(_verify_cell(fid, n, k, cache, fault))
    return report
