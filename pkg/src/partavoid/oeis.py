"""OEIS identifications, local sequence fixtures and b-file cross-checks."""
from __future__ import annotations

import json
import re
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .core import PatternSet

__all__ = [
    "GENERATED",
    "FETCHED",
    "SequenceFixture",
    "MapEntry",
    "PatternOeisMap",
    "builtin_map",
    "BFileError",
    "BFileParseError",
    "NetworkDisabled",
    "FetchError",
    "HTTPStatusError",
    "parse_bfile",
    "fetch_bfile",
    "CompareReport",
    "compare",
    "read_fixture",
    "write_fixture",
    "builtin_fixture",
    "generate_fixtures",
]

GENERATED = "generated-by-oracle"
FETCHED = "fetched-b-file"

_ID_RE = re.compile(r"^A\d{6}$")


def normalize_id(oeis_id: str) -> str:
    m = re.fullmatch(r"[Aa]?0*(\d+)", oeis_id.strip())
    if not m:
        raise ValueError(f"not an OEIS A-number: {oeis_id!r}")
    return f"A{int(m.group(1)):06d}"


@dataclass
class SequenceFixture:
    oeis_id: str
    offset: int
    terms: list[int]
    provenance: str = GENERATED
    avoid: Optional[PatternSet] = None

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a fixture needs at least one term")
        if self.provenance not in (GENERATED, FETCHED):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.provenance == GENERATED and self.avoid is None:
            raise ValueError("generated fixtures must record their pattern set")

    def term(self, index: int) -> int:
        return self.terms[index - self.offset]

    def to_json(self) -> str:
        doc = {
            "id": self.oeis_id,
            "offset": self.offset,
            "avoid": None if self.avoid is None else self.avoid.to_lists(),
            "provenance": self.provenance,
            "terms": [str(t) for t in self.terms],
        }
        return json.dumps(doc) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SequenceFixture":
        doc = json.loads(text)
        avoid = doc.get("avoid")
        return cls(
            oeis_id=doc["id"],
            offset=int(doc["offset"]),
            terms=[int(t) for t in doc["terms"]],
            provenance=doc["provenance"],
            avoid=None if avoid is None else PatternSet(avoid),
        )


@dataclass(frozen=True)
class MapEntry:
    avoid: PatternSet
    oeis_id: Optional[str]  # None: not in the OEIS when the identifications were made
    align: int = 0  # our index n corresponds to the OEIS index n + align


@dataclass
class PatternOeisMap:
    entries: list[MapEntry] = field(default_factory=list)

    def __post_init__(self):
        for e in self.entries:
            if e.oeis_id is not None and not _ID_RE.match(e.oeis_id):
                raise ValueError(f"malformed OEIS id {e.oeis_id!r}")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, A) -> Optional[MapEntry]:
        A = A if isinstance(A, PatternSet) else PatternSet(A)
        for e in self.entries:
            if e.avoid == A:
                return e
        return None

    def by_id(self, oeis_id: str) -> Optional[MapEntry]:
        oeis_id = normalize_id(oeis_id)
        for e in self.entries:
            if e.oeis_id == oeis_id:
                return e
        return None

    def identified(self) -> list[MapEntry]:
        return [e for e in self.entries if e.oeis_id is not None]


_BUILTIN = [
    ([], "A000041"),
    ([[0]], "A000009"),
    ([[0], [1]], "A003114"),
    ([[1]], "A116931"),
    ([[1], [0, 0]], "A070047"),
    ([[0, 0]], "A000726"),
    ([[0, 0, 0]], "A001935"),
    ([[0, 0, 0, 0]], "A035957"),
    ([[2]], None),
    ([[2], [0, 0]], None),
    ([[0, 1]], None),
    ([[1, 0]], None),
]


def builtin_map() -> PatternOeisMap:
    return PatternOeisMap([MapEntry(PatternSet(a), i, 0) for a, i in _BUILTIN])


class BFileError(Exception):
    pass


class BFileParseError(BFileError):
    pass


class NetworkDisabled(BFileError):
    pass


class FetchError(BFileError):
    pass


class HTTPStatusError(FetchError):
    def __init__(self, status: int, url: str):
        super().__init__(f"HTTP {status} for {url}")
        self.status = status
        self.url = url


def parse_bfile(text: str, oeis_id: str) -> SequenceFixture:
    """Parse ``"<n> <a(n)>"`` lines; blank lines and '#' comments are skipped."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(f"line {lineno}: expected '<n> <value>', got {raw!r}")
        try:
            n, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(f"line {lineno}: non-integer field in {raw!r}") from None
        if pairs and n != pairs[-1][0] + 1:
            raise BFileParseError(f"line {lineno}: index {n} does not follow {pairs[-1][0]}")
        pairs.append((n, value))
    if not pairs:
        raise BFileParseError("b-file has no terms")
    return SequenceFixture(normalize_id(oeis_id), pairs[0][0], [v for _, v in pairs], FETCHED)


def bfile_url(oeis_id: str) -> str:
    oeis_id = normalize_id(oeis_id)
    return f"https://oeis.org/{oeis_id}/b{oeis_id[1:]}.txt"


def fetch_bfile(oeis_id: str, net: bool = False, timeout: float = 30.0) -> SequenceFixture:
    if not net:
        raise NetworkDisabled("network access was not enabled")
    url = bfile_url(oeis_id)
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            status = getattr(resp, "status", 200)
            if status != 200:
                raise HTTPStatusError(status, url)
            body = resp.read().decode("utf-8", errors="replace")
    except urllib.error.HTTPError as e:
        raise HTTPStatusError(e.code, url) from None
    except (urllib.error.URLError, OSError) as e:
        raise FetchError(f"could not fetch {url}: {e}") from None
    return parse_bfile(body, oeis_id)


@dataclass
class CompareReport:
    overlap: int  # number of compared indices
    matched: int  # length of the matching prefix of the overlap
    first_mismatch: Optional[tuple[int, int, int]] = None  # (n, ours, theirs)

    @property
    def ok(self) -> bool:
        return self.overlap > 0 and self.first_mismatch is None

    def describe(self) -> str:
        if self.overlap == 0:
            return "no overlapping terms"
        if self.first_mismatch is None:
            return f"all {self.overlap} overlapping terms match"
        n, ours, theirs = self.first_mismatch
        return f"mismatch at n={n}: computed {ours}, reference {theirs} ({self.matched} terms matched before)"


def compare(seq: Sequence[int], fixture: SequenceFixture, align: int = 0) -> CompareReport:
    lo = max(0, fixture.offset - align)
    hi = min(len(seq), fixture.offset + len(fixture.terms) - align)
    if hi <= lo:
        return CompareReport(0, 0)
    for n in range(lo, hi):
        theirs = fixture.term(n + align)
        if seq[n] != theirs:
            return CompareReport(hi - lo, n - lo, (n, seq[n], theirs))
    return CompareReport(hi - lo, hi - lo)


def read_fixture(path) -> SequenceFixture:
    return SequenceFixture.from_json(Path(path).read_text())


def write_fixture(fixture: SequenceFixture, path) -> None:
    Path(path).write_text(fixture.to_json())


def builtin_fixture(oeis_id: str) -> SequenceFixture:
    oeis_id = normalize_id(oeis_id)
    res = resources.files("partavoid").joinpath("fixtures", f"{oeis_id}.json")
    if not res.is_file():
        raise FileNotFoundError(f"no committed fixture for {oeis_id}")
    return SequenceFixture.from_json(res.read_text())


def generate_fixtures(directory, N: int = 50, brute_limit: int = 40) -> list[Path]:
    """Write one fixture per identified pattern set.

    Terms up to ``brute_limit`` come from exhaustive enumeration, the rest
    from the positive engine.
    """
    from .oracle import brute_count
    from .positive import count_sequence

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for e in builtin_map().identified():
        terms = brute_count(e.avoid, min(N, brute_limit))
        if N > brute_limit:
            terms += count_sequence(e.avoid, N)[brute_limit + 1 :]
        path = directory / f"{e.oeis_id}.json"
        write_fixture(SequenceFixture(e.oeis_id, e.align, terms, GENERATED, e.avoid), path)
        written.append(path)
    return written


if __name__ == "__main__":  # regenerate the committed fixtures
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "fixtures"
    for p in generate_fixtures(target):
        print(p)
