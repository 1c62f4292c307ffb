"""Reference counts that share no code with the engines."""
from __future__ import annotations

from typing import Iterator

from .core import Partition, PatternSet, avoids_set

__all__ = [
    "BRUTE_CEILING",
    "CeilingExceeded",
    "enumerate_partitions",
    "brute_count",
    "pentagonal_sequence",
    "unrestricted_table",
]

BRUTE_CEILING = 40


class CeilingExceeded(ValueError):
    pass


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Every partition of n once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _partitions(n, n):
        yield Partition(parts)


def brute_count(A, N: int, ceiling: int = BRUTE_CEILING) -> list[int]:
    if N > ceiling:
        raise CeilingExceeded(f"brute force refuses N={N} above the ceiling {ceiling}")
    A = A if isinstance(A, PatternSet) else PatternSet(A)
    return [sum(1 for p in enumerate_partitions(n) if avoids_set(p, A)) for n in range(N + 1)]


def pentagonal_sequence(N: int) -> list[int]:
    """p(0..N) by Euler's pentagonal number recurrence."""
    p = [1] + [0] * N
    for n in range(1, N + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            g2 = j * (3 * j + 1) // 2
            term = p[n - g1] + (p[n - g2] if g2 <= n else 0)
            total += term if j % 2 else -term
            j += 1
        p[n] = total
    return p


def unrestricted_table(N: int) -> list[list[int]]:
    """T[n][m] = partitions of n with largest part exactly m, 0 <= m <= n.

    Built from P(n, m) = P(n-1, m-1) + P(n-m, m) with P(m, m) = 1.
    """
    T = [[1]] + [[0] * (n + 1) for n in range(1, N + 1)]
    for n in range(1, N + 1):
        for m in range(1, n + 1):
            if m == n:
                T[n][m] = 1
                continue
            a = T[n - 1][m - 1] if m - 1 >= 1 else 0
            b = T[n - m][m] if m <= n - m else 0
            T[n][m] = a + b
    return T
