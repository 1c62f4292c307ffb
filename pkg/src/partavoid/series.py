"""Power series in q truncated at a fixed degree, with exact integer coefficients."""
from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "CapMismatch",
    "TruncatedSeries",
    "add",
    "mul",
    "monomial_shift",
    "euler_product",
    "distinct_product",
    "residue_product",
]


class CapMismatch(ValueError):
    pass


class TruncatedSeries:
    """Polynomial representative of a power series modulo q^(cap+1).

    Coefficients are Python ints, so nothing overflows.
    """

    __slots__ = ("cap", "coeffs")

    def __init__(self, cap: int, coeffs: Iterable[int] = ()):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        c = [int(x) for x in coeffs][: cap + 1]
        c.extend([0] * (cap + 1 - len(c)))
        self.cap = cap
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, cap: int) -> "TruncatedSeries":
        return cls(cap)

    @classmethod
    def one(cls, cap: int) -> "TruncatedSeries":
        return cls(cap, [1])

    @classmethod
    def monomial(cls, cap: int, e: int, c: int = 1) -> "TruncatedSeries":
        if e > cap:
            return cls(cap)
        return cls(cap, [0] * e + [c])

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.cap, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*q^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries(cap={self.cap}, {' + '.join(terms) or '0'})"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, other.scale(-1))

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        return mul(self, other)

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(self.cap, [c * x for x in self.coeffs])

    def truncate(self, cap: int) -> "TruncatedSeries":
        return TruncatedSeries(cap, self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]


def _check_caps(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.cap != b.cap:
        raise CapMismatch(f"cannot combine series with caps {a.cap} and {b.cap}")


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_caps(a, b)
    return TruncatedSeries(a.cap, [x + y for x, y in zip(a.coeffs, b.coeffs)])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_caps(a, b)
    cap = a.cap
    out = [0] * (cap + 1)
    bnz = [(j, y) for j, y in enumerate(b.coeffs) if y]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in bnz:
            if i + j > cap:
                break
            out[i + j] += x * y
    return TruncatedSeries(cap, out)


def monomial_shift(a: TruncatedSeries, e: int, c: int = 1) -> TruncatedSeries:
    """Return c * q^e * a, truncated."""
    if e < 0:
        raise ValueError("shift exponent must be non-negative")
    cap = a.cap
    if e > cap:
        return TruncatedSeries(cap)
    return TruncatedSeries(cap, [0] * e + [c * x for x in a.coeffs[: cap + 1 - e]])


def _inverse_product(N: int, part_values: Iterable[int]) -> TruncatedSeries:
    # Multiplying by 1/(1 - q^v) is the in-place running sum c[n] += c[n - v].
    c = [1] + [0] * N
    for v in part_values:
        for n in range(v, N + 1):
            c[n] += c[n - v]
    return TruncatedSeries(N, c)


def euler_product(N: int) -> TruncatedSeries:
    """prod_{i>=1} 1/(1 - q^i) mod q^(N+1)."""
    return _inverse_product(N, range(1, N + 1))


def distinct_product(N: int) -> TruncatedSeries:
    """prod_{i>=1} (1 + q^i) mod q^(N+1)."""
    c = [1] + [0] * N
    for v in range(1, N + 1):
        for n in range(N, v - 1, -1):
            c[n] += c[n - v]
    return TruncatedSeries(N, c)


def residue_product(modulus: int, residues: Sequence[int], N: int) -> TruncatedSeries:
    """Generating function of partitions whose parts lie in the given residue classes."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    residues = set(residues)
    bad = [r for r in residues if not 0 <= r < modulus]
    if bad:
        raise ValueError(f"residues {sorted(bad)} are outside [0, {modulus})")
    return _inverse_product(N, (v for v in range(1, N + 1) if v % modulus in residues))
