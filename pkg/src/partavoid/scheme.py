"""Automatic construction of the beginning-condition state machine.

Removing the largest part of a partition that must avoid ``A`` everywhere and
the patterns of a local set ``B`` at its very beginning leaves a partition that
must avoid ``A`` everywhere and some new local set at *its* beginning.  Which
new set depends only on the difference ``d`` between the first two parts.
Starting from the empty local set and closing under this rule gives a finite
machine; its states index the auxiliary tables of the positive engine.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .core import Pattern, PatternSet

__all__ = ["DEAD", "SchemeState", "Scheme", "child", "build_scheme", "export_scheme"]

DEAD = "DEAD"


@dataclass(frozen=True)
class SchemeState:
    """A prefix-reduced set of patterns to be avoided at the beginning."""

    local: tuple[Pattern, ...]

    def __iter__(self):
        return iter(self.local)

    def __len__(self) -> int:
        return len(self.local)

    def to_lists(self) -> list[list[int]]:
        return [list(p.diffs) for p in self.local]


EMPTY_STATE = SchemeState(())


def _prefix_reduce(patterns) -> tuple[Pattern, ...]:
    pats = sorted(set(patterns))
    # sorted by length first, so any prefix of p is already in `kept`
    kept: list[Pattern] = []
    for p in pats:
        if not any(p.startswith(q) for q in kept):
            kept.append(p)
    return tuple(sorted(kept))


def child(A, B, d: int):
    """State reached from local set ``B`` when the first difference is ``d``.

    Returns ``DEAD`` when some forbidden pattern is completed by this step.
    """
    if B == DEAD:
        raise ValueError("the DEAD state has no children")
    tails = [a.tail for a in (*A, *B) if a.head == d]
    if any(t.is_empty() for t in tails):
        return DEAD
    return SchemeState(_prefix_reduce(tails))


@dataclass
class Scheme:
    pattern_set: PatternSet
    states: list[SchemeState]
    # (state id, d) -> state id or DEAD; only special differences are stored
    transitions: dict[tuple[int, int], object] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.states)

    def special_diffs(self, sid: int) -> list[int]:
        return sorted({a.head for a in (*self.pattern_set, *self.states[sid])})

    def step(self, sid: int, d: int):
        return self.transitions.get((sid, d), 0)

    def edges(self) -> list[tuple[int, int, object]]:
        return [(s, d, t) for (s, d), t in sorted(self.transitions.items())]


def build_scheme(A) -> Scheme:
    A = A if isinstance(A, PatternSet) else PatternSet(A)
    states = [EMPTY_STATE]
    index = {EMPTY_STATE: 0}
    transitions = {}
    queue = deque([0])
    while queue:
        sid = queue.popleft()
        B = states[sid]
        for d in sorted({a.head for a in (*A, *B)}):
            c = child(A, B, d)
            if c == DEAD:
                transitions[(sid, d)] = DEAD
                continue
            if c not in index:
                index[c] = len(states)
                states.append(c)
                queue.append(index[c])
            transitions[(sid, d)] = index[c]
    return Scheme(A, states, transitions)


def _fmt(pats) -> str:
    return "{" + ", ".join(str(p) for p in pats) + "}"


def export_scheme(s: Scheme, format: str = "text") -> str:
    if format == "json":
        doc = {
            "avoid": s.pattern_set.to_lists(),
            "states": [{"id": i, "local": st.to_lists()} for i, st in enumerate(s.states)],
            "edges": [{"from": a, "d": d, "to": t} for a, d, t in s.edges()],
        }
        return json.dumps(doc, indent=2)
    if format == "dot":
        lines = ["digraph scheme {", "  rankdir=LR;"]
        for i, st in enumerate(s.states):
            lines.append(f'  s{i} [label="{i}: {_fmt(st)}"];')
        if any(t == DEAD for _, _, t in s.edges()):
            lines.append('  DEAD [shape=doublecircle];')
        for a, d, t in s.edges():
            target = "DEAD" if t == DEAD else f"s{t}"
            lines.append(f'  s{a} -> {target} [label="d={d}"];')
        lines.append("}")
        return "\n".join(lines)
    if format == "text":
        lines = [f"avoid: {_fmt(s.pattern_set)}", f"states: {len(s.states)}"]
        for i, st in enumerate(s.states):
            lines.append(f"state {i}: local {_fmt(st)}")
            for a, d, t in s.edges():
                if a == i:
                    lines.append(f"  d={d} -> {t}")
            lines.append("  otherwise -> 0")
        return "\n".join(lines)
    raise ValueError(f"unknown scheme format {format!r}")
