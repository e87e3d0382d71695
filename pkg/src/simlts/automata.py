"""Deterministic finite automata: language tests, product emptiness,
canonical minimization, and the embedding into deterministic LTSs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError, OracleScaleError
from .limits import enumeration_cap
from .lts import Lts

CHECK_LABEL = "✓"

Word = tuple[str, ...]
EPSILON: Word = ()


@dataclass(frozen=True)
class Dfa:
    """A total deterministic finite automaton.

    ``delta[q][i]`` is the successor of state ``q`` on ``alphabet[i]``.
    The table must be total; parsers complete partial tables with a sink.
    The token "✓" is reserved for the LTS embedding and may not appear in
    the alphabet.
    """

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    accepting: frozenset[int]
    initial: int

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        n = len(self.delta)
        if n < 1:
            raise InputError("a DFA needs at least one state")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("duplicate alphabet symbols")
        for tok in self.alphabet:
            if not tok or any(c.isspace() for c in tok):
                raise InputError(f"bad alphabet token {tok!r}")
            if tok == CHECK_LABEL:
                raise InputError(f"alphabet token {CHECK_LABEL!r} is reserved")
        for q, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise InputError(f"transition row of state {q} is not total")
            for dst in row:
                if not 0 <= dst < n:
                    raise InputError(f"transition target {dst} out of range")
        if not 0 <= self.initial < n:
            raise InputError(f"initial state {self.initial} out of range")
        if not self.accepting <= set(range(n)):
            raise InputError("accepting set contains unknown states")

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def symbol_index(self, symbol: str) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise InputError(f"unknown symbol {symbol!r}")

    @classmethod
    def from_partial(
        cls,
        num_states: int,
        alphabet: Sequence[str],
        transitions: dict[tuple[int, str], int],
        accepting: Sequence[int],
        initial: int,
    ) -> "Dfa":
        """Build a total DFA, routing missing transitions to an added sink.

        The sink (a fresh non-accepting state with index ``num_states``) is
        only added when at least one transition is missing.
        """
        alphabet = tuple(alphabet)
        complete = all(
            (q, a) in transitions for q in range(num_states) for a in alphabet
        )
        n = num_states if complete else num_states + 1
        sink = num_states
        delta = []
        for q in range(n):
            row = []
            for a in alphabet:
                if q < num_states:
                    row.append(transitions.get((q, a), sink))
                else:
                    row.append(sink)
            delta.append(tuple(row))
        return cls(alphabet, tuple(delta), frozenset(accepting), initial)


def run_word(a: Dfa, w: Sequence[str]) -> bool:
    """Accept or reject a word; the empty word tests the initial state."""
    index = {tok: i for i, tok in enumerate(a.alphabet)}
    q = a.initial
    for pos, sym in enumerate(w, start=1):
        i = index.get(sym)
        if i is None:
            raise InputError(f"unknown symbol {sym!r} at position {pos}")
        q = a.delta[q][i]
    return q in a.accepting


def complement(a: Dfa) -> Dfa:
    """Swap accepting and non-accepting states; total tables make this exact."""
    return Dfa(a.alphabet, a.delta, frozenset(range(a.num_states)) - a.accepting, a.initial)


def _require_shared_alphabet(dfas: Sequence[Dfa]) -> None:
    first = dfas[0].alphabet
    for other in dfas[1:]:
        if other.alphabet != first:
            raise InputError(f"alphabet mismatch: {list(first)} vs {list(other.alphabet)}")


def intersection_nonempty(dfas: Sequence[Dfa]) -> Optional[Word]:
    """Shortest word accepted by every DFA, or None when the intersection
    is empty.

    Breadth-first search over the on-the-fly product of state tuples;
    unreachable product states are never materialized. Ties among shortest
    witnesses are broken by alphabet order, so the result is the
    lexicographically least shortest witness.
    """
    if not dfas:
        raise InputError("need at least one DFA")
    _require_shared_alphabet(dfas)
    alphabet = dfas[0].alphabet
    start = tuple(a.initial for a in dfas)
    parents: dict[tuple[int, ...], Optional[tuple[tuple[int, ...], int]]] = {start: None}

    def is_accepting(states: tuple[int, ...]) -> bool:
        return all(q in a.accepting for q, a in zip(states, dfas))

    def rebuild(states: tuple[int, ...]) -> Word:
        out = []
        cur = states
        while parents[cur] is not None:
            cur, i = parents[cur]
            out.append(alphabet[i])
        return tuple(reversed(out))

    if is_accepting(start):
        return EPSILON
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(len(alphabet)):
            nxt = tuple(a.delta[q][i] for q, a in zip(cur, dfas))
            if nxt in parents:
                continue
            parents[nxt] = (cur, i)
            if is_accepting(nxt):
                return rebuild(nxt)
            queue.append(nxt)
    return None


def language_inclusion(a: Dfa, b: Dfa) -> bool:
    """L(a) ⊆ L(b), decided through the product with b's complement."""
    _require_shared_alphabet([a, b])
    return intersection_nonempty([a, complement(b)]) is None


def reachable_states(a: Dfa) -> list[int]:
    """States reachable from the initial one, in BFS discovery order."""
    order = [a.initial]
    seen = {a.initial}
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for dst in a.delta[q]:
            if dst not in seen:
                seen.add(dst)
                order.append(dst)
                queue.append(dst)
    return order


def minimize(a: Dfa) -> Dfa:
    """Canonical minimal DFA for L(a).

    Restricts to reachable states, merges Myhill-Nerode-equivalent ones by
    iterated signature refinement, and renumbers the quotient in BFS
    discovery order, so automata with equal languages minimize to
    structurally identical results.
    """
    reach = reachable_states(a)
    pos = {q: i for i, q in enumerate(reach)}
    k = len(a.alphabet)
    delta = [[pos[a.delta[q][i]] for i in range(k)] for q in reach]
    accepting = [q in a.accepting for q in reach]
    n = len(reach)

    block = [1 if acc else 0 for acc in accepting]
    num_blocks = len(set(block))
    while True:
        sigs = {}
        new_block = [0] * n
        for q in range(n):
            sig = (block[q], tuple(block[delta[q][i]] for i in range(k)))
            new_block[q] = sigs.setdefault(sig, len(sigs))
        if len(sigs) == num_blocks:
            break
        block, num_blocks = new_block, len(sigs)

    # renumber the quotient by BFS from the initial state's class
    start = block[pos[a.initial]]
    rep = {}
    for q in range(n):
        rep.setdefault(block[q], q)
    order = [start]
    seen = {start}
    queue = deque(order)
    while queue:
        b = queue.popleft()
        for i in range(k):
            nb = block[delta[rep[b]][i]]
            if nb not in seen:
                seen.add(nb)
                order.append(nb)
                queue.append(nb)
    rank = {b: i for i, b in enumerate(order)}
    out_delta = tuple(
        tuple(rank[block[delta[rep[b]][i]]] for i in range(k)) for b in order
    )
    out_accepting = frozenset(rank[b] for b in order if accepting[rep[b]])
    return Dfa(a.alphabet, out_delta, out_accepting, 0)


def enumerate_language(a: Dfa, max_len: int, cap: Optional[int] = None) -> set[Word]:
    """All accepted words of length at most ``max_len``, by exhaustive
    generation.

    Refuses when |alphabet| ** max_len exceeds the cap (default from
    SIMLTS_ORACLE_CAP, else one million generated words).
    """
    if max_len < 0:
        raise InputError("max_len must be non-negative")
    if cap is None:
        cap = enumeration_cap()
    if len(a.alphabet) ** max_len > cap:
        raise OracleScaleError(
            f"{len(a.alphabet)}^{max_len} words exceeds the enumeration cap of {cap}"
        )
    accepted: set[Word] = set()
    frontier: list[tuple[Word, int]] = [(EPSILON, a.initial)]
    if a.initial in a.accepting:
        accepted.add(EPSILON)
    for _ in range(max_len):
        nxt = []
        for word, q in frontier:
            for i, sym in enumerate(a.alphabet):
                dst = a.delta[q][i]
                grown = word + (sym,)
                if dst in a.accepting:
                    accepted.add(grown)
                nxt.append((grown, dst))
        frontier = nxt
    return accepted


def alpha_map(a: Dfa) -> Lts:
    """Embed a DFA into a deterministic LTS.

    The transition structure is kept as-is; every accepting state gains a
    "✓"-labelled step into one fresh state with index ``num_states``, so
    language inclusion between DFAs coincides with simulation between
    their images.
    """
    if CHECK_LABEL in a.alphabet:
        raise InputError(f"alphabet already contains the reserved token {CHECK_LABEL!r}")
    n = a.num_states
    top = n
    transitions = [
        (q, sym, a.delta[q][i])
        for q in range(n)
        for i, sym in enumerate(a.alphabet)
    ]
    transitions.extend((q, CHECK_LABEL, top) for q in sorted(a.accepting))
    return Lts(
        num_states=n + 1,
        labels=a.alphabet + (CHECK_LABEL,),
        transitions=tuple(transitions),
        initial=a.initial,
    )
