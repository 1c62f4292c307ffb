"""Cluster sieve for partitions avoiding a pattern set.

A *marked* partition is a partition together with any set of occurrences
("marks") of forbidden patterns, weighted by ``(-1)^(#marks) q^(sum)``.
Summing these weights over all marked partitions leaves exactly the avoiders.
Marks that share parts chain into *clusters*; a marked partition is a run of
unmarked parts and clusters, which gives the recurrences below.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Pattern, PatternSet, instantiate, overlap1, reduce_factors
from .series import TruncatedSeries, monomial_shift

__all__ = [
    "ClusterKey",
    "MarkedKey",
    "ClusterSieve",
    "cluster_weight",
    "cluster_total",
    "marked_weight",
    "neg_sequence",
]


@dataclass(frozen=True)
class ClusterKey:
    v: Pattern  # pattern of the first mark
    k: int  # first part
    l: int  # last part
    w: int  # width, i.e. number of parts


@dataclass(frozen=True)
class MarkedKey:
    k: int  # first part
    m: int  # number of parts


class ClusterSieve:
    """Memoized weight enumerators for one pattern set and truncation degree.

    ``A`` is used exactly as given; :func:`neg_sequence` first drops patterns
    that contain another member as a factor, which the chain-of-marks
    recursion requires.
    """

    def __init__(self, A, N: int):
        self.A = A if isinstance(A, PatternSet) else PatternSet(A)
        self.N = N
        self._zero = TruncatedSeries.zero(N)
        self._one = TruncatedSeries.one(N)
        self._cluster: dict[tuple, TruncatedSeries] = {}
        self._total: dict[tuple, TruncatedSeries] = {}
        self._marked: dict[tuple[int, int], TruncatedSeries] = {}
        # _prefix[j][l] = sum_{r=1}^{l} marked(r, j)
        self._prefix: dict[int, list[TruncatedSeries]] = {}

    def cluster_weight(self, v, k: int, l: int, w: int) -> TruncatedSeries:
        v = v if isinstance(v, Pattern) else Pattern(v)
        key = (v, k, l, w)
        hit = self._cluster.get(key)
        if hit is not None:
            return hit
        res = self._cluster_weight(v, k, l, w)
        self._cluster[key] = res
        return res

    def _cluster_weight(self, v: Pattern, k: int, l: int, w: int) -> TruncatedSeries:
        r = len(v)
        if r == 0 or w < r + 1 or l < 1 or l > k or k < v.total + 1:
            return self._zero
        # cheapest cluster: first part k, all others equal to l
        if k + (w - 1) * l > self.N:
            return self._zero
        mark = instantiate(v, k)
        res = self._zero
        if k == l + v.total and w == r + 1:
            res = TruncatedSeries.monomial(self.N, mark.total, -1)
        # the second mark must start at one of the parts after the first
        starts = sorted(set(mark.parts[1:]))
        for u in self.A:
            for k1 in starts:
                if k1 < u.total + 1 or k1 < l:
                    continue
                for i, j in overlap1(v, u, k, k1):
                    rest = self.cluster_weight(u, k1, l, w - (r + 1) + j)
                    if rest:
                        res = res - monomial_shift(rest, i)
        return res

    def cluster_total(self, k: int, l: int, w: int) -> TruncatedSeries:
        key = (k, l, w)
        hit = self._total.get(key)
        if hit is not None:
            return hit
        res = self._zero
        for v in self.A:
            c = self.cluster_weight(v, k, l, w)
            if c:
                res = res + c
        self._total[key] = res
        return res

    def _prefix_row(self, j: int) -> list[TruncatedSeries]:
        row = self._prefix.get(j)
        if row is None:
            row = [self._zero]
            acc = self._zero
            for r in range(1, self.N + 1):
                acc = acc + self.marked_weight(r, j)
                row.append(acc)
            self._prefix[j] = row
        return row

    def tail_sum(self, l: int, j: int) -> TruncatedSeries:
        """Weight of marked partitions with j parts and first part at most l."""
        if j == 0:
            return self._one
        return self._prefix_row(j)[min(l, self.N)]

    def marked_weight(self, k: int, m: int) -> TruncatedSeries:
        if m == 0:
            return self._one
        if m == 1:
            return TruncatedSeries.monomial(self.N, k)
        if k + m - 1 > self.N:
            return self._zero
        key = (k, m)
        hit = self._marked.get(key)
        if hit is not None:
            return hit
        N = self.N
        res = monomial_shift(self.tail_sum(k, m - 1), k)
        for w in range(2, m + 1):
            rest_parts = m - w
            for l in range(1, k + 1):
                if k + (w - 1) * l + rest_parts > N:
                    break
                c = self.cluster_total(k, l, w)
                if c:
                    res = res + c * self.tail_sum(l, rest_parts)
        self._marked[key] = res
        return res

    def sequence(self) -> list[int]:
        N = self.N
        total = [0] * (N + 1)
        total[0] = 1
        # fill bottom-up in m so the prefix rows never recurse deeply
        for m in range(1, N + 1):
            for k in range(1, N - m + 2):
                s = self.marked_weight(k, m)
                for n, c in enumerate(s.coeffs):
                    total[n] += c
        return total


def _key_args(key):
    if isinstance(key, ClusterKey):
        return key.v, key.k, key.l, key.w
    return tuple(key)


def cluster_weight(A, key, N: int) -> TruncatedSeries:
    return ClusterSieve(A, N).cluster_weight(*_key_args(key))


def cluster_total(A, k: int, l: int, w: int, N: int) -> TruncatedSeries:
    return ClusterSieve(A, N).cluster_total(k, l, w)


def marked_weight(A, k: int, m: int, N: int) -> TruncatedSeries:
    return ClusterSieve(A, N).marked_weight(k, m)


def neg_sequence(A, N: int) -> list[int]:
    """Number of partitions of n avoiding ``A``, n = 0..N, by the cluster sieve."""
    if N < 0:
        raise ValueError("N must be non-negative")
    return ClusterSieve(reduce_factors(A), N).sequence()
