"""Counting integer partitions that avoid consecutive-difference patterns."""
from .core import (
    Partition,
    Pattern,
    PatternSet,
    avoids_set,
    contains,
    differences,
    instantiate,
    overlap,
    overlap1,
    parse_patterns,
)
from .negative import neg_sequence
from .oracle import brute_count, enumerate_partitions, pentagonal_sequence
from .positive import count_sequence, count_table
from .scheme import build_scheme, export_scheme
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "Pattern",
    "PatternSet",
    "TruncatedSeries",
    "avoids_set",
    "brute_count",
    "build_scheme",
    "contains",
    "count_sequence",
    "count_table",
    "differences",
    "enumerate_partitions",
    "export_scheme",
    "instantiate",
    "neg_sequence",
    "overlap",
    "overlap1",
    "parse_patterns",
    "pentagonal_sequence",
]
