"""Quadratic dynamic programming over the scheme states.

For each live state ``B`` the table holds ``P_B(n, m)``: the number of
partitions of ``n`` with largest part ``m`` that avoid every pattern of ``A``
and, at their very beginning, every pattern of ``B``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import PatternSet
from .scheme import DEAD, Scheme, build_scheme

__all__ = ["CountTable", "count_table", "count_sequence"]


@dataclass
class CountTable:
    scheme: Scheme
    N: int
    # P[b][n][m] for 0 <= m <= n; S[b][n][m] = sum_{m' <= m} P[b][n][m']
    P: list[list[list[int]]]
    S: list[list[list[int]]]

    def value(self, state: int, n: int, m: int) -> int:
        if m < 0 or m > n:
            return 0
        return self.P[state][n][m]

    def prefix(self, state: int, n: int, m: int) -> int:
        if m < 0:
            return 0
        return self.S[state][n][min(m, n)]

    def row_total(self, n: int, state: int = 0) -> int:
        return 1 if n == 0 else self.S[state][n][n]


def count_table(A, N: int) -> CountTable:
    if N < 0:
        raise ValueError("N must be non-negative")
    A = A if isinstance(A, PatternSet) else PatternSet(A)
    scheme = build_scheme(A)
    nstates = len(scheme)
    # per state: list of (d, child id or None for DEAD)
    special = [
        [(d, None if scheme.step(b, d) == DEAD else scheme.step(b, d)) for d in scheme.special_diffs(b)]
        for b in range(nstates)
    ]
    P = [[[0]] for _ in range(nstates)]
    S = [[[0]] for _ in range(nstates)]
    for n in range(1, N + 1):
        for b in range(nstates):
            row = [0] * (n + 1)
            for m in range(1, n):
                r = n - m
                # second part m' ranges over 1..min(m, r); start from all of
                # them going to state 0, then patch the special differences
                S0 = S[0][r]
                total = S0[m if m < r else r]
                P0 = P[0][r]
                for d, c in special[b]:
                    mp = m - d
                    if mp < 1 or mp > r:
                        continue
                    total -= P0[mp]
                    if c is not None:
                        total += P[c][r][mp]
                row[m] = total
            row[n] = 1
            P[b].append(row)
            acc = 0
            srow = [0] * (n + 1)
            for m in range(n + 1):
                acc += row[m]
                srow[m] = acc
            S[b].append(srow)
    return CountTable(scheme, N, P, S)


def count_sequence(A, N: int) -> list[int]:
    """Number of partitions of n avoiding ``A``, for n = 0..N."""
    if N == 0:
        return [1]
    t = count_table(A, N)
    return [t.row_total(n) for n in range(N + 1)]
