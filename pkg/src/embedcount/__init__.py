"""Exact enumeration of embedded dipoles, bouquets and directed bouquets."""

from .bouquet import beta, bouquet_count, bouquet_split
from .catalog import evaluate, table, verify
from .dipole import delta, dipole_count, dipole_split
from .dirbouquet import alpha, dirbouquet_count, dirbouquet_split

__version__ = "0.1.0"

__all__ = [
    "alpha",
    "beta",
    "bouquet_count",
    "bouquet_split",
    "delta",
    "dipole_count",
    "dipole_split",
    "dirbouquet_count",
    "dirbouquet_split",
    "evaluate",
    "table",
    "verify",
]
