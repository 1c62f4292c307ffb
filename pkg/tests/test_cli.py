import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from partavoid import cli
from partavoid.cli import RunConfig, cmd_verify, main
from partavoid.core import PatternSet
from partavoid.positive import count_sequence


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_count_lines():
    code, out = run("count", "--avoid", "[0]", "--n", "10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0 1" and lines[-1] == "10 10" and len(lines) == 11


def test_count_csv_empty_avoid():
    assert run("count", "--avoid", "", "--n", "5", "--format", "csv") == (0, "1,1,2,3,5,7\n")


@pytest.mark.parametrize("engine", ["negative", "brute"])
def test_count_engines_agree(engine):
    _, pos = run("count", "--avoid", "[0],[1]", "--n", "9")
    code, other = run("count", "--avoid", "[0],[1]", "--n", "9", "--engine", engine)
    assert code == 0 and other == pos


def test_count_json_schema():
    schema = json.loads(resources.files("partavoid").joinpath("schemas/count.schema.json").read_text())
    code, out = run("count", "--avoid", "[1],[0,0]", "--n", "60", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["avoid"] == [[1], [0, 0]] and doc["n"] == 60
    assert [int(c) for c in doc["counts"]] == count_sequence([[1], [0, 0]], 60)


def test_scheme_outputs():
    code, out = run("scheme", "--avoid", "[1,1,1]", "--format", "text")
    assert code == 0 and "states: 3" in out
    code, out = run("scheme", "--avoid", "[0]")
    assert "states: 1" in out and "d=0 -> DEAD" in out
    code, out = run("scheme", "--avoid", "")
    assert "states: 1" in out and "d=" not in out
    code, out = run("scheme", "--avoid", "[1,1,1]", "--format", "json")
    assert len(json.loads(out)["edges"]) == 3


@pytest.mark.parametrize("avoid", ["[0],[1]", "[1,0]", "", "[0]"])
def test_verify_passes(avoid):
    code, out = run("verify", "--avoid", avoid, "--n", "30")
    assert code == 0, out
    assert out.rstrip().endswith("n=30") and "PASS" in out


def test_verify_reports_injected_fault():
    A = PatternSet([[0], [1]])
    good = count_sequence(A, 20)
    bad = list(good)
    bad[13] += 1
    out = io.StringIO()
    code = cmd_verify(RunConfig(avoid=A, n=20), out=out, routes={"faulty": lambda: bad, "ok": lambda: good})
    assert code == 1
    text = out.getvalue()
    assert f"MISMATCH faulty at n=13: positive={good[13]} faulty={bad[13]}" in text
    assert "ok ok" in text


def test_oeis_fixture_match():
    code, out = run("oeis", "--avoid", "[0]")
    assert code == 0 and "A000009" in out and "match" in out


def test_oeis_unknown():
    code, out = run("oeis", "--avoid", "[2]")
    assert code == 0 and "no OEIS id on record" in out


def test_oeis_by_id():
    code, out = run("oeis", "--id", "A3114")
    assert code == 0 and "A003114" in out


def test_oeis_fetch_without_network():
    code, out = run("oeis", "--avoid", "[0]", "--fetch")
    assert code == 4 and "network" in out


def test_oeis_fetch_failure(monkeypatch):
    def boom(oeis_id, net=False):
        raise cli.oeis_mod.FetchError("unreachable")

    monkeypatch.setattr(cli.oeis_mod, "fetch_bfile", boom)
    assert run("oeis", "--avoid", "[0]", "--fetch", "--net")[0] == 4


def test_oeis_fetch_mismatch(monkeypatch):
    fake = cli.oeis_mod.parse_bfile("0 1\n1 1\n2 1\n3 5\n", "A000009")
    monkeypatch.setattr(cli.oeis_mod, "fetch_bfile", lambda oeis_id, net=False: fake)
    code, out = run("oeis", "--avoid", "[0]", "--fetch", "--net")
    assert code == 1 and "mismatch at n=3" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["count", "--avoid", "[]"], 2),
        (["count", "--avoid", "[1"], 2),
        (["count", "--avoid", "[-1]"], 2),
        (["count", "--n", "-3"], 2),
        (["count", "--engine", "brute", "--n", "41"], 3),
        (["count", "--engine", "brute", "--n", "12", "--brute-ceiling", "10"], 3),
        (["count", "--engine", "negative", "--n", "30", "--neg-ceiling", "20"], 3),
        (["count", "--n", "3"], 0),
        (["scheme", "--avoid", "[0],"], 2),
        (["verify", "--avoid", "[2]", "--n", "15"], 0),
    ],
)
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


@pytest.mark.parametrize("argv", [["count", "--engine", "quantum"], ["count", "--format", "xml"], ["frobnicate"]])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as e:
        main(argv, out=io.StringIO())
    assert e.value.code == 2


def test_deterministic_output():
    argv = ["count", "--avoid", "[2,1],[1,1]", "--n", "80", "--format", "json"]
    assert run(*argv) == run(*argv)
    argv = ["scheme", "--avoid", "[0,1],[1,0,1]", "--format", "dot"]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "partavoid.cli", "count", "--avoid", "[0]", "--n", "6", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout == "1,1,1,2,2,3,4\n"
