"""CNF formulas, the split-language DFA construction, and the brute-force
satisfiability oracle.

A formula over an even number n of variables and m clauses is turned into
two DFAs over {0, 1} accepting words of length n + m: n assignment bits
followed by m clause bits. The first automaton demands that a clause with
bit 0 is already satisfied by the first half of the variables, the second
that a clause with bit 1 is satisfied by the second half. Their
intersection is non-empty exactly when the formula is satisfiable, and
the first n bits of any witness are a satisfying assignment.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Optional, Sequence

from .automata import Dfa, Word, minimize
from .errors import InputError, OracleScaleError, ParseError
from .limits import DEFAULT_GADGET_MAX_STATES, DEFAULT_SAT_MAX_VARS

Assignment = tuple[int, ...]

BIT_TOKENS = ("0", "1")


class Half(Enum):
    FIRST = "1"
    SECOND = "2"


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula with DIMACS-style signed-integer literals.

    The variable count is required to be even; parsers pad odd inputs
    with one unused variable. Empty clauses are legal and make the
    formula unsatisfiable.
    """

    num_vars: int
    clauses: tuple[frozenset[int], ...]
    padded: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(frozenset(c) for c in self.clauses))
        if self.num_vars < 0 or self.num_vars % 2 != 0:
            raise InputError(f"variable count must be even and non-negative, got {self.num_vars}")
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InputError(f"literal {lit} out of range 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def half_vars(self, half: Half) -> range:
        h = self.num_vars // 2
        return range(1, h + 1) if half is Half.FIRST else range(h + 1, self.num_vars + 1)

    def clause_satisfied(self, clause_idx: int, rho: Assignment) -> bool:
        return any(self._lit_true(lit, rho) for lit in self.clauses[clause_idx])

    def clause_satisfied_by_half(self, clause_idx: int, rho: Assignment, half: Half) -> bool:
        hv = self.half_vars(half)
        return any(
            self._lit_true(lit, rho) and abs(lit) in hv for lit in self.clauses[clause_idx]
        )

    def satisfies(self, rho: Assignment) -> bool:
        if len(rho) != self.num_vars:
            raise InputError(f"assignment has {len(rho)} bits, expected {self.num_vars}")
        return all(self.clause_satisfied(i, rho) for i in range(self.num_clauses))

    @staticmethod
    def _lit_true(lit: int, rho: Assignment) -> bool:
        value = rho[abs(lit) - 1]
        return value == 1 if lit > 0 else value == 0


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text.

    Comment lines start with 'c', the header is ``p cnf <vars>
    <clauses>``, and clauses are 0-terminated (possibly spanning lines).
    An odd declared variable count is padded to the next even number and
    flagged on the result.
    """
    declared_vars: Optional[int] = None
    declared_clauses = 0
    clauses: list[frozenset[int]] = []
    current: list[int] = []
    open_clause_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if declared_vars is not None:
                raise ParseError(lineno, "duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError(lineno, f"malformed header {line!r}")
            try:
                declared_vars = int(parts[2])
                declared_clauses = int(parts[3])
            except ValueError:
                raise ParseError(lineno, f"malformed header {line!r}")
            if declared_vars < 0 or declared_clauses < 0:
                raise ParseError(lineno, "negative counts in header")
            continue
        if declared_vars is None:
            raise ParseError(lineno, "clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(lineno, f"bad literal {tok!r}")
            if lit == 0:
                clauses.append(frozenset(current))
                current = []
                open_clause_line = 0
            else:
                if abs(lit) > declared_vars:
                    raise ParseError(lineno, f"literal {lit} out of range 1..{declared_vars}")
                if not current:
                    open_clause_line = lineno
                current.append(lit)
    if declared_vars is None:
        raise ParseError(1, "missing 'p cnf' header")
    if current:
        raise ParseError(open_clause_line, "missing 0 terminator for last clause")
    if len(clauses) != declared_clauses:
        raise ParseError(
            1, f"header declares {declared_clauses} clauses, found {len(clauses)}"
        )
    padded = declared_vars % 2 != 0
    num_vars = declared_vars + 1 if padded else declared_vars
    return CnfFormula(num_vars, tuple(clauses), padded=padded)


def brute_force_sat(f: CnfFormula, max_vars: Optional[int] = None) -> Optional[Assignment]:
    """First satisfying assignment in ascending binary order, or None.

    Bit i of the assignment is variable i+1; the all-zero assignment is
    tried first. Refuses formulas above the variable cap.
    """
    cap = DEFAULT_SAT_MAX_VARS if max_vars is None else max_vars
    if f.num_vars > cap:
        raise OracleScaleError(
            f"{f.num_vars} variables exceeds the brute-force cap of {cap}"
        )
    for bits in product((0, 1), repeat=f.num_vars):
        if f.satisfies(bits):
            return bits
    return None


def build_split_dfa(
    f: CnfFormula, half: Half, max_states: Optional[int] = None
) -> Dfa:
    """DFA over {0, 1} for one half of the split-language pair.

    States are (position, satisfied-clause set) pairs, where the set
    records the clauses already satisfied by this half's variables among
    the assignment bits read so far, plus one sink. Positions belonging
    to the other half only advance the position. At clause position i the
    penalized bit (0 for the first half, 1 for the second) requires
    clause i in the set, otherwise the word is dead. Acceptance is
    reaching position n + m alive. Construction is breadth-first over
    reachable states only.
    """
    cap = DEFAULT_GADGET_MAX_STATES if max_states is None else max_states
    n, m = f.num_vars, f.num_clauses
    length = n + m
    half_range = f.half_vars(half)
    # clause indices newly satisfied when variable v reads bit 0 / bit 1
    sat_on = {
        v: (
            frozenset(i for i, c in enumerate(f.clauses) if -v in c),
            frozenset(i for i, c in enumerate(f.clauses) if v in c),
        )
        for v in half_range
    }
    penalty_bit = 0 if half is Half.FIRST else 1

    start = (0, frozenset())
    ids: dict[object, int] = {start: 0}
    order: list[object] = [start]
    transitions: dict[tuple[int, str], int] = {}
    sink_key = "sink"
    queue = deque([start])

    def intern(key) -> int:
        sid = ids.get(key)
        if sid is None:
            sid = len(ids)
            if sid > cap:
                raise OracleScaleError(
                    f"gadget construction exceeds the {cap}-state cap"
                )
            ids[key] = sid
            order.append(key)
            if key != sink_key:
                queue.append(key)
        return sid

    while queue:
        key = queue.popleft()
        pos, sat = key
        sid = ids[key]
        for bit in (0, 1):
            if pos >= length:
                target = sink_key
            elif pos < n:
                var = pos + 1
                new_sat = sat | sat_on[var][bit] if var in half_range else sat
                # drop the set on the last assignment bit of an m = 0 formula
                target = (pos + 1, new_sat if pos + 1 < length else frozenset())
            else:
                clause = pos - n
                if bit == penalty_bit and clause not in sat:
                    target = sink_key
                else:
                    target = (pos + 1, sat if pos + 1 < length else frozenset())
            transitions[(sid, BIT_TOKENS[bit])] = intern(target)

    accepting = [ids[key] for key in order if key != sink_key and key[0] == length]
    delta = [
        tuple(transitions[(sid, tok)] if key != sink_key else ids[sink_key] for tok in BIT_TOKENS)
        for sid, key in enumerate(order)
    ]
    return Dfa(BIT_TOKENS, tuple(delta), frozenset(accepting), 0)


def state_bound_check(f: CnfFormula) -> tuple[int, int, int]:
    """Minimized sizes of both split DFAs against the m*n*2^(n/2) bound.

    The bound counts partial-automaton states, so the totalizing sink is
    allowed as one extra state on top of it.
    """
    if f.num_clauses < 1 or f.num_vars < 2:
        raise InputError("state bound check needs at least one clause and two variables")
    first = minimize(build_split_dfa(f, Half.FIRST)).num_states
    second = minimize(build_split_dfa(f, Half.SECOND)).num_states
    bound = f.num_clauses * f.num_vars * 2 ** (f.num_vars // 2)
    if first > bound + 1 or second > bound + 1:
        raise RuntimeError(
            f"state bound violated: {first}/{second} states against bound {bound} + sink"
        )
    return first, second, bound


def assignment_to_witness(f: CnfFormula, rho: Assignment) -> Word:
    """Canonical intersection witness for a satisfying assignment.

    Clause bit i is 0 when clause i is satisfied by the first half of the
    variables under rho, otherwise 1 (the second half must then satisfy
    it, which a satisfying rho guarantees). The result is accepted by
    both split DFAs.
    """
    if not f.satisfies(rho):
        raise InputError("assignment does not satisfy the formula")
    bits = [BIT_TOKENS[b] for b in rho]
    for i in range(f.num_clauses):
        bits.append(BIT_TOKENS[0] if f.clause_satisfied_by_half(i, rho, Half.FIRST) else BIT_TOKENS[1])
    return tuple(bits)


def decode_assignment(f: CnfFormula, word: Sequence[str]) -> Assignment:
    """Read the assignment from the first n symbols of a witness word."""
    if len(word) < f.num_vars:
        raise InputError(
            f"witness of length {len(word)} is shorter than {f.num_vars} assignment bits"
        )
    bits = []
    for tok in word[: f.num_vars]:
        if tok not in BIT_TOKENS:
            raise InputError(f"witness symbol {tok!r} is not a bit")
        bits.append(int(tok))
    return tuple(bits)


def witness_string(f: CnfFormula, word: Sequence[str]) -> str:
    """Human form of a witness: assignment bits, a bar, clause bits."""
    text = "".join(word)
    return text[: f.num_vars] + "|" + text[f.num_vars :]
