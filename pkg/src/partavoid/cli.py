"""Command-line interface: ``partavoid count|scheme|verify|oeis``.

Exit codes: 0 success, 1 mismatch, 2 bad input, 3 engine refusal,
4 network failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import oeis as oeis_mod
from .core import InvalidPattern, PatternSet, parse_patterns
from .negative import neg_sequence
from .oracle import BRUTE_CEILING, CeilingExceeded, brute_count, pentagonal_sequence
from .positive import count_sequence
from .scheme import build_scheme, export_scheme
from .series import distinct_product, euler_product, residue_product

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_ENGINE = 3
EXIT_NETWORK = 4

NEG_CEILING = 40
ENGINES = ("positive", "negative", "brute")


class EngineRefused(Exception):
    pass


@dataclass
class RunConfig:
    avoid: PatternSet = field(default_factory=PatternSet)
    n: int = 20
    engine: str = "positive"
    format: str = "lines"
    brute_ceiling: int = BRUTE_CEILING
    neg_ceiling: int = NEG_CEILING
    fetch: bool = False
    net: bool = False
    oeis_id: Optional[str] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")


def run_engine(name: str, A: PatternSet, n: int, cfg: RunConfig) -> list[int]:
    if name == "positive":
        return count_sequence(A, n)
    if name == "negative":
        if n > cfg.neg_ceiling:
            raise EngineRefused(f"negative engine refuses n={n} above its ceiling {cfg.neg_ceiling}")
        return neg_sequence(A, n)
    if name == "brute":
        try:
            return brute_count(A, n, ceiling=cfg.brute_ceiling)
        except CeilingExceeded as e:
            raise EngineRefused(str(e)) from None
    raise ValueError(f"unknown engine {name!r}")


def format_counts(cfg: RunConfig, counts: list[int]) -> str:
    if cfg.format == "lines":
        return "".join(f"{i} {c}\n" for i, c in enumerate(counts))
    if cfg.format == "csv":
        return ",".join(str(c) for c in counts) + "\n"
    if cfg.format == "json":
        doc = {
            "avoid": cfg.avoid.to_lists(),
            "n": cfg.n,
            "engine": cfg.engine,
            "counts": [str(c) for c in counts],
        }
        return json.dumps(doc) + "\n"
    raise ValueError(f"unknown output format {cfg.format!r}")


def cmd_count(cfg: RunConfig, out=sys.stdout) -> int:
    try:
        counts = run_engine(cfg.engine, cfg.avoid, cfg.n, cfg)
    except EngineRefused as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ENGINE
    out.write(format_counts(cfg, counts))
    return EXIT_OK


def cmd_scheme(cfg: RunConfig, out=sys.stdout) -> int:
    out.write(export_scheme(build_scheme(cfg.avoid), cfg.format) + "\n")
    return EXIT_OK


def product_reference(A: PatternSet, n: int) -> dict[str, Callable[[], list[int]]]:
    """Classical product formulas that are known to count ``A``-avoiders."""
    refs = {}
    if A == PatternSet():
        refs["euler_product"] = lambda: list(euler_product(n))
        refs["pentagonal"] = lambda: pentagonal_sequence(n)
    elif A == PatternSet([[0]]):
        refs["distinct_product"] = lambda: list(distinct_product(n))
        refs["odd_parts_product"] = lambda: list(residue_product(2, {1}, n))
    elif A == PatternSet([[0], [1]]):
        refs["rogers_ramanujan_product"] = lambda: list(residue_product(5, {1, 4}, n))
    return refs


@dataclass
class Mismatch:
    route: str
    n: int
    expected: int
    got: int

    def __str__(self) -> str:
        return f"MISMATCH {self.route} at n={self.n}: positive={self.expected} {self.route}={self.got}"


def verify(cfg: RunConfig, routes: Optional[dict[str, Callable[[], list[int]]]] = None):
    """Compare the positive engine against every other applicable route.

    Returns ``(lines, mismatches)``.  ``routes`` overrides the default set of
    comparison routes (each a zero-argument callable returning counts).
    """
    A, n = cfg.avoid, cfg.n
    base = count_sequence(A, n)
    if routes is None:
        routes = {}
        nb = min(n, cfg.brute_ceiling)
        routes[f"brute(n<={nb})"] = lambda: brute_count(A, nb, ceiling=cfg.brute_ceiling)
        nn = min(n, cfg.neg_ceiling)
        routes[f"negative(n<={nn})"] = lambda: neg_sequence(A, nn)
        routes.update(product_reference(A, n))
    lines = []
    mismatches = []
    for name, fn in routes.items():
        other = fn()
        bad = next((i for i, c in enumerate(other) if i >= len(base) or c != base[i]), None)
        if bad is None:
            lines.append(f"ok {name}: {len(other)} terms agree")
        else:
            mm = Mismatch(name, bad, base[bad] if bad < len(base) else None, other[bad])
            mismatches.append(mm)
            lines.append(str(mm))
    return lines, mismatches


def cmd_verify(cfg: RunConfig, out=sys.stdout, routes=None) -> int:
    lines, mismatches = verify(cfg, routes)
    for line in lines:
        out.write(line + "\n")
    out.write(("FAIL" if mismatches else "PASS") + f" avoid={cfg.avoid} n={cfg.n}\n")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_oeis(cfg: RunConfig, out=sys.stdout) -> int:
    table = oeis_mod.builtin_map()
    if cfg.oeis_id:
        oeis_id = oeis_mod.normalize_id(cfg.oeis_id)
        known = table.by_id(oeis_id)
        if known is not None and not len(cfg.avoid):
            cfg.avoid = known.avoid
        entry = table.lookup(cfg.avoid)
        align = entry.align if entry is not None and entry.oeis_id == oeis_id else 0
    else:
        entry = table.lookup(cfg.avoid)
        if entry is None or entry.oeis_id is None:
            out.write(f"no OEIS id on record for avoid={cfg.avoid}\n")
            return EXIT_OK
        oeis_id, align = entry.oeis_id, entry.align

    status = EXIT_OK
    try:
        fixture = oeis_mod.builtin_fixture(oeis_id)
    except FileNotFoundError:
        fixture = None
        if not cfg.fetch:
            out.write(f"{oeis_id}: no committed fixture; use --fetch --net to compare online\n")
            return EXIT_USAGE
    if fixture is not None:
        if fixture.avoid is not None and fixture.avoid != cfg.avoid:
            out.write(f"note: fixture {oeis_id} was generated for avoid={fixture.avoid}\n")
        n = fixture.offset + len(fixture.terms) - 1 - align
        report = oeis_mod.compare(count_sequence(cfg.avoid, max(n, 0)), fixture, align)
        out.write(f"{oeis_id} fixture: {report.describe()}\n")
        if not report.ok:
            status = EXIT_MISMATCH

    if cfg.fetch:
        try:
            remote = oeis_mod.fetch_bfile(oeis_id, net=cfg.net)
        except oeis_mod.BFileParseError as e:
            out.write(f"{oeis_id} b-file: unparseable ({e})\n")
            return EXIT_NETWORK
        except oeis_mod.BFileError as e:
            out.write(f"{oeis_id} b-file: network failure ({e})\n")
            return EXIT_NETWORK
        n = min(cfg.n, remote.offset + len(remote.terms) - 1 - align)
        report = oeis_mod.compare(count_sequence(cfg.avoid, max(n, 0)), remote, align)
        out.write(f"{oeis_id} b-file: {report.describe()}\n")
        if not report.ok:
            status = EXIT_MISMATCH
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--avoid", default="", help='pattern set, e.g. "[0],[1]"; empty means no restriction')
    common.add_argument("--n", type=int, default=20, help="largest n to count (default 20)")
    common.add_argument("--brute-ceiling", type=int, default=BRUTE_CEILING)
    common.add_argument("--neg-ceiling", type=int, default=NEG_CEILING)

    parser = argparse.ArgumentParser(prog="partavoid", description="Count partitions avoiding difference patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="print p_A(0..n)")
    p.add_argument("--engine", choices=ENGINES, default="positive")
    p.add_argument("--format", choices=("lines", "json", "csv"), default="lines")

    p = sub.add_parser("scheme", parents=[common], help="print the state scheme for A")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")

    sub.add_parser("verify", parents=[common], help="cross-check all engines and product formulas")

    p = sub.add_parser("oeis", parents=[common], help="compare against OEIS fixtures or b-files")
    p.add_argument("--id", dest="oeis_id", default=None)
    p.add_argument("--fetch", action="store_true", help="also compare against the live b-file")
    p.add_argument("--net", action="store_true", help="permit network access")
    p.set_defaults(n=50)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        avoid = parse_patterns(args.avoid)
        cfg = RunConfig(
            avoid=avoid,
            n=args.n,
            engine=getattr(args, "engine", "positive"),
            format=getattr(args, "format", "lines"),
            brute_ceiling=args.brute_ceiling,
            neg_ceiling=args.neg_ceiling,
            fetch=getattr(args, "fetch", False),
            net=getattr(args, "net", False),
            oeis_id=getattr(args, "oeis_id", None),
        )
    except (InvalidPattern, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    commands = {"count": cmd_count, "scheme": cmd_scheme, "verify": cmd_verify, "oeis": cmd_oeis}
    return commands[args.command](cfg, out=out)


if __name__ == "__main__":
    sys.exit(main())
