import os

import pytest

from partavoid.core import PatternSet
from partavoid.oeis import (
    FETCHED,
    BFileParseError,
    NetworkDisabled,
    SequenceFixture,
    builtin_fixture,
    builtin_map,
    compare,
    fetch_bfile,
    parse_bfile,
    read_fixture,
    write_fixture,
)
from partavoid.positive import count_sequence


def test_builtin_map_lookups():
    m = builtin_map()
    assert m.lookup([[0]]).oeis_id == "A000009"
    assert m.lookup([[2]]).oeis_id is None
    assert m.lookup([[0, 0, 0]]).oeis_id == "A001935"
    assert m.lookup([[1], [0, 0]]).oeis_id == "A070047"
    assert m.lookup([[5]]) is None
    assert len(m.identified()) == 8
    assert m.by_id("A3114").avoid == PatternSet([[0], [1]])


def test_parse_bfile():
    f = parse_bfile("0 1\n1 1", "A000009")
    assert (f.offset, f.terms, f.provenance) == (0, [1, 1], FETCHED)
    f = parse_bfile("# A comment\n\n5 8\n6 10\n", "A9")
    assert (f.oeis_id, f.offset, f.terms) == ("A000009", 5, [8, 10])
    with pytest.raises(BFileParseError):
        parse_bfile("abc", "A000009")
    with pytest.raises(BFileParseError):
        parse_bfile("0 1\n2 1", "A000009")


def test_fetch_needs_flag():
    with pytest.raises(NetworkDisabled):
        fetch_bfile("A000009")


def _fixture(terms, offset=0):
    return SequenceFixture("A000001", offset, terms, FETCHED)


def test_compare():
    r = compare([1, 1, 2, 3], _fixture([1, 1, 2, 3, 5]))
    assert r.ok and r.overlap == 4 and r.first_mismatch is None
    r = compare([1, 1, 2, 4, 5], _fixture([1, 1, 2, 3, 5]))
    assert not r.ok and r.first_mismatch == (3, 4, 3) and r.matched == 3
    r = compare([1, 1], _fixture([7, 7], offset=10))
    assert r.overlap == 0 and not r.ok


def test_compare_alignment():
    fx = _fixture([1, 2, 3], offset=1)
    assert compare([1, 2, 3], fx, align=1).ok
    r = compare([1, 1, 2, 3], fx)
    assert r.ok and r.overlap == 3
    assert compare([1, 1, 2, 3], fx, align=1).first_mismatch == (1, 1, 2)


def test_fixture_round_trip(tmp_path):
    f = SequenceFixture("A000041", 0, [1, 1, 2, 3, 5, 10**40], avoid=PatternSet())
    path = tmp_path / "A000041.json"
    write_fixture(f, path)
    g = read_fixture(path)
    assert (g.oeis_id, g.offset, g.terms, g.avoid) == (f.oeis_id, f.offset, f.terms, f.avoid)


def test_generated_fixture_needs_pattern_set():
    with pytest.raises(ValueError):
        SequenceFixture("A000041", 0, [1])
    with pytest.raises(ValueError):
        SequenceFixture("A000041", 0, [], avoid=PatternSet())


@pytest.mark.parametrize("entry", builtin_map().identified(), ids=lambda e: e.oeis_id)
def test_committed_fixtures_match(entry):
    fx = builtin_fixture(entry.oeis_id)
    assert fx.avoid == entry.avoid
    assert len(fx.terms) == 51
    report = compare(count_sequence(entry.avoid, 50), fx, entry.align)
    assert report.ok and report.overlap == 51


@pytest.mark.network
@pytest.mark.skipif(os.environ.get("PARTAVOID_NET") != "1", reason="set PARTAVOID_NET=1 to reach oeis.org")
@pytest.mark.parametrize("entry", builtin_map().identified(), ids=lambda e: e.oeis_id)
def test_live_bfiles(entry):
    remote = fetch_bfile(entry.oeis_id, net=True)
    n = min(200, remote.offset + len(remote.terms) - 1)
    assert compare(count_sequence(entry.avoid, n), remote, entry.align).ok
