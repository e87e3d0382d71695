"""Line-based text formats for automata, transition systems, relations,
and partitions.

Writers emit a canonical form (transitions sorted by source, label index,
target), so emit(parse(emit(x))) == emit(x) byte for byte.
"""

from __future__ import annotations

import re

from .automata import Dfa
from .errors import ParseError
from .lts import Lts
from .simulation import Partition, SimRelation


def _content_lines(text: str):
    """Yield (line number, content) with comments and blanks stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def write_dfa(a: Dfa) -> str:
    lines = [f"dfa {a.num_states} {len(a.alphabet)}"]
    lines.append("symbols" + "".join(f" {tok}" for tok in a.alphabet))
    lines.append(f"init {a.initial}")
    lines.append("accept" + "".join(f" {q}" for q in sorted(a.accepting)))
    for q in range(a.num_states):
        for i, tok in enumerate(a.alphabet):
            lines.append(f"trans {q} {tok} {a.delta[q][i]}")
    return "\n".join(lines) + "\n"


def read_dfa(text: str) -> Dfa:
    """Parse the DFA format; missing transitions route to an added sink."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty DFA file")
    pos = 0

    def expect(keyword: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(lines[-1][0], f"unexpected end of file, expected {keyword!r}")
        lineno, line = lines[pos]
        parts = line.split()
        if parts[0] != keyword:
            raise ParseError(lineno, f"expected {keyword!r}, got {parts[0]!r}")
        pos += 1
        return lineno, parts[1:]

    lineno, args = expect("dfa")
    if len(args) != 2:
        raise ParseError(lineno, "expected 'dfa <nstates> <nsymbols>'")
    try:
        nstates, nsymbols = int(args[0]), int(args[1])
    except ValueError:
        raise ParseError(lineno, "state and symbol counts must be integers")
    if nstates < 1 or nsymbols < 0:
        raise ParseError(lineno, "counts out of range")

    lineno, symbols = expect("symbols")
    if len(symbols) != nsymbols:
        raise ParseError(lineno, f"expected {nsymbols} symbols, got {len(symbols)}")
    if len(set(symbols)) != len(symbols):
        raise ParseError(lineno, "duplicate symbols")

    def parse_state(lineno: int, tok: str) -> int:
        try:
            q = int(tok)
        except ValueError:
            raise ParseError(lineno, f"bad state identifier {tok!r}")
        if not 0 <= q < nstates:
            raise ParseError(lineno, f"state {q} out of range 0..{nstates - 1}")
        return q

    lineno, args = expect("init")
    if len(args) != 1:
        raise ParseError(lineno, "expected 'init <state>'")
    initial = parse_state(lineno, args[0])

    lineno, args = expect("accept")
    accepting = [parse_state(lineno, tok) for tok in args]

    transitions: dict[tuple[int, str], int] = {}
    while pos < len(lines):
        lineno, args = expect("trans")
        if len(args) != 3:
            raise ParseError(lineno, "expected 'trans <src> <symbol> <dst>'")
        src = parse_state(lineno, args[0])
        if args[1] not in symbols:
            raise ParseError(lineno, f"undeclared symbol {args[1]!r}")
        dst = parse_state(lineno, args[2])
        if (src, args[1]) in transitions:
            raise ParseError(lineno, f"duplicate transition for state {src} on {args[1]!r}")
        transitions[(src, args[1])] = dst
    return Dfa.from_partial(nstates, symbols, transitions, accepting, initial)


_LTS_TRANSITION = re.compile(r'^\(\s*(\d+)\s*,\s*"([^"]*)"\s*,\s*(\d+)\s*\)$')


def write_lts(m: Lts) -> str:
    lines = [f"lts {m.num_states} {m.num_transitions} {m.initial}"]
    for src, label, dst in m.transitions:
        lines.append(f'({src}, "{label}", {dst})')
    return "\n".join(lines) + "\n"


def read_lts(text: str) -> Lts:
    """Parse the LTS format; label order is first appearance."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty LTS file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "lts":
        raise ParseError(lineno, "expected 'lts <nstates> <ntransitions> <init>'")
    try:
        nstates, ntrans, initial = int(parts[1]), int(parts[2]), int(parts[3])
    except ValueError:
        raise ParseError(lineno, "header fields must be integers")
    if len(lines) - 1 != ntrans:
        raise ParseError(lineno, f"header declares {ntrans} transitions, found {len(lines) - 1}")
    labels: list[str] = []
    transitions = []
    seen = set()
    for lineno, line in lines[1:]:
        match = _LTS_TRANSITION.match(line)
        if not match:
            raise ParseError(lineno, f"bad transition line {line!r}")
        src, label, dst = int(match.group(1)), match.group(2), int(match.group(3))
        for state in (src, dst):
            if not 0 <= state < nstates:
                raise ParseError(lineno, f"state {state} out of range 0..{nstates - 1}")
        if label not in labels:
            labels.append(label)
        if (src, label, dst) in seen:
            raise ParseError(lineno, f"duplicate transition {line}")
        seen.add((src, label, dst))
        transitions.append((src, label, dst))
    if not 0 <= initial < nstates:
        raise ParseError(lines[0][0], f"initial state {initial} out of range")
    return Lts(nstates, tuple(labels), tuple(transitions), initial)


def write_relation(rel: SimRelation) -> str:
    return "".join(f"({s}, {t})\n" for s, t in rel.pairs())


def write_partition(p: Partition) -> str:
    return "".join(" ".join(str(q) for q in block) + "\n" for block in p.blocks)
