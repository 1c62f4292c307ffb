"""Patterns, partitions, containment and overlap primitives.

A pattern ``[a_1, ..., a_r]`` is a list of non-negative integers read as
consecutive differences between adjacent parts of a partition.  A partition
contains the pattern when some run of ``r + 1`` consecutive parts has exactly
those differences.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, NamedTuple

__all__ = [
    "InvalidPattern",
    "InvalidPartition",
    "InvalidInstantiation",
    "Pattern",
    "PatternSet",
    "Partition",
    "OverlapEntry",
    "MIN_OVERLAP_SLACK",
    "differences",
    "contains",
    "contains_at_start",
    "avoids_set",
    "instantiate",
    "overlap",
    "overlap1",
    "parse_patterns",
    "format_patterns",
    "reduce_factors",
]


class InvalidPattern(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


class InvalidInstantiation(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class Pattern:
    """Immutable difference pattern.  Ordered by (length, entries)."""

    diffs: tuple[int, ...]

    def __init__(self, diffs: Iterable[int] = ()):
        diffs = tuple(int(d) for d in diffs)
        if any(d < 0 for d in diffs):
            raise InvalidPattern(f"pattern entries must be non-negative: {list(diffs)}")
        object.__setattr__(self, "diffs", diffs)

    def __len__(self) -> int:
        return len(self.diffs)

    def __iter__(self):
        return iter(self.diffs)

    def __getitem__(self, i):
        return self.diffs[i]

    def __lt__(self, other: "Pattern") -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return (len(self.diffs), self.diffs) < (len(other.diffs), other.diffs)

    def __repr__(self) -> str:
        return f"Pattern({list(self.diffs)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.diffs)) + "]"

    @property
    def total(self) -> int:
        return sum(self.diffs)

    @property
    def head(self) -> int:
        if not self.diffs:
            raise InvalidPattern("the empty pattern has no head")
        return self.diffs[0]

    @property
    def tail(self) -> "Pattern":
        return Pattern(self.diffs[1:])

    def is_empty(self) -> bool:
        return not self.diffs

    def startswith(self, other: "Pattern") -> bool:
        return self.diffs[: len(other.diffs)] == other.diffs

    def has_factor(self, other: "Pattern") -> bool:
        """True if ``other`` occurs as a consecutive sublist of this pattern."""
        r, s = len(self.diffs), len(other.diffs)
        return any(self.diffs[i : i + s] == other.diffs for i in range(r - s + 1))


def _as_pattern(a) -> Pattern:
    return a if isinstance(a, Pattern) else Pattern(a)


@dataclass(frozen=True)
class PatternSet:
    """Deduplicated, canonically ordered set of patterns.

    User-level sets may not contain the empty pattern; pass
    ``allow_empty=True`` for internal use.
    """

    patterns: tuple[Pattern, ...]

    def __init__(self, patterns: Iterable = (), allow_empty: bool = False):
        pats = tuple(sorted({_as_pattern(a) for a in patterns}))
        if not allow_empty and any(p.is_empty() for p in pats):
            raise InvalidPattern("the empty pattern is not allowed in a pattern set")
        object.__setattr__(self, "patterns", pats)

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, item) -> bool:
        return _as_pattern(item) in self.patterns

    def __repr__(self) -> str:
        return f"PatternSet({self.to_lists()})"

    def __str__(self) -> str:
        return format_patterns(self)

    def to_lists(self) -> list[list[int]]:
        return [list(p.diffs) for p in self.patterns]

    def issubset(self, other: "PatternSet") -> bool:
        return set(self.patterns) <= set(other.patterns)

    def union(self, other: Iterable) -> "PatternSet":
        return PatternSet(list(self.patterns) + list(other))

    @property
    def max_length(self) -> int:
        return max((len(p) for p in self.patterns), default=0)


def _as_pattern_set(A) -> PatternSet:
    return A if isinstance(A, PatternSet) else PatternSet(A)


@dataclass(frozen=True)
class Partition:
    """Non-increasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts):
            raise InvalidPartition(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartition(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    @property
    def total(self) -> int:
        return sum(self.parts)


class OverlapEntry(NamedTuple):
    exponent: int  # sum of the non-shared head of the first partition
    overlap_len: int  # number of shared parts


# An overlap of j parts requires j <= min(|u1|, |u2|) - MIN_OVERLAP_SLACK, i.e.
# the second mark starts strictly after, and ends strictly after, the first.
MIN_OVERLAP_SLACK = 1


def differences(p) -> list[int]:
    parts = tuple(p)
    return [parts[i] - parts[i + 1] for i in range(len(parts) - 1)]


def contains(p, a) -> bool:
    a = _as_pattern(a)
    if a.is_empty():
        raise InvalidPattern("containment of the empty pattern is undefined")
    d = differences(p)
    r = len(a)
    return any(tuple(d[i : i + r]) == a.diffs for i in range(len(d) - r + 1))


def contains_at_start(p, a) -> bool:
    """True if the partition begins with the pattern ``a``.

    The empty pattern is contained at the start of every partition.
    """
    a = _as_pattern(a)
    return tuple(differences(p)[: len(a)]) == a.diffs


def avoids_set(p, A) -> bool:
    return not any(contains(p, a) for a in _as_pattern_set(A))


def instantiate(v, k: int) -> Partition:
    """Partition with largest part ``k`` whose consecutive differences are ``v``."""
    v = _as_pattern(v)
    if k < v.total + 1:
        raise InvalidInstantiation(f"{v} needs a first part of at least {v.total + 1}, got {k}")
    parts = [k]
    for d in v:
        parts.append(parts[-1] - d)
    return Partition(parts)


def overlap(u1, u2) -> set[OverlapEntry]:
    """All ways a suffix of ``u1`` equals a prefix of ``u2``."""
    a, b = tuple(u1), tuple(u2)
    out = set()
    for j in range(1, min(len(a), len(b)) - MIN_OVERLAP_SLACK + 1):
        if a[len(a) - j :] == b[:j]:
            out.add(OverlapEntry(sum(a[: len(a) - j]), j))
    return out


def overlap1(v, u, k1: int, k2: int) -> set[OverlapEntry]:
    return overlap(instantiate(v, k1), instantiate(u, k2))


def reduce_factors(A) -> PatternSet:
    """Drop every pattern that has another member of ``A`` as a factor.

    Avoiding a pattern forbids every pattern that contains it consecutively,
    so the reduced set has exactly the same avoiders.
    """
    A = _as_pattern_set(A)
    keep = [a for a in A if not any(b != a and a.has_factor(b) for b in A)]
    return PatternSet(keep)


_PATTERN_RE = re.compile(r"\[([^\[\]]*)\]")


def parse_patterns(text: str) -> PatternSet:
    """Parse ``"[0],[1,2]"`` into a pattern set.  An empty string is the empty set."""
    s = re.sub(r"\s+", "", text or "")
    if not s:
        return PatternSet()
    pats = []
    pos = 0
    while pos < len(s):
        m = _PATTERN_RE.match(s, pos)
        if m is None:
            raise InvalidPattern(f"cannot parse pattern set at {s[pos:]!r}")
        body = m.group(1)
        if not body:
            raise InvalidPattern("empty brackets are not a valid pattern")
        entries = body.split(",")
        if not all(e.isdigit() for e in entries):
            raise InvalidPattern(f"pattern entries must be non-negative integers: [{body}]")
        pats.append(Pattern(int(e) for e in entries))
        pos = m.end()
        if pos < len(s):
            if s[pos] != ",":
                raise InvalidPattern(f"expected ',' between patterns at {s[pos:]!r}")
            pos += 1
            if pos == len(s):
                raise InvalidPattern("trailing comma in pattern set")
    return PatternSet(pats)


def format_patterns(A) -> str:
    return ",".join(str(p) for p in _as_pattern_set(A))
