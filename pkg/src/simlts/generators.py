"""Seeded random instance generators.

Used by the property suites and by the benchmark. All generators take a
``random.Random`` so identical seeds reproduce identical instances bit
for bit.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .automata import Dfa
from .lts import Lts
from .satgadget import CnfFormula


def random_dfa(
    rng: random.Random,
    max_states: int = 12,
    alphabet: Sequence[str] = ("a", "b", "c"),
    num_states: Optional[int] = None,
) -> Dfa:
    n = num_states if num_states is not None else rng.randint(1, max_states)
    alphabet = tuple(alphabet)
    delta = tuple(
        tuple(rng.randrange(n) for _ in alphabet) for _ in range(n)
    )
    accepting = frozenset(q for q in range(n) if rng.random() < 0.4)
    return Dfa(alphabet, delta, accepting, rng.randrange(n))


def random_dfa_pair(
    rng: random.Random, max_states: int = 12, max_symbols: int = 3
) -> tuple[Dfa, Dfa]:
    """A pair over a shared alphabet, with occasional related pairs so
    that inclusion and emptiness verdicts are exercised on both sides."""
    alphabet = ("a", "b", "c")[: rng.randint(1, max_symbols)]
    a = random_dfa(rng, max_states, alphabet)
    style = rng.random()
    if style < 0.1:
        return a, a
    if style < 0.25:
        # same structure, enlarged accepting set: L(a) is included in L(b)
        extra = frozenset(q for q in range(a.num_states) if rng.random() < 0.3)
        b = Dfa(a.alphabet, a.delta, a.accepting | extra, a.initial)
        return a, b
    if style < 0.35:
        # empty-language partner
        b = random_dfa(rng, max_states, alphabet)
        return a, Dfa(b.alphabet, b.delta, frozenset(), b.initial)
    return a, random_dfa(rng, max_states, alphabet)


def random_lts(
    rng: random.Random,
    max_states: int = 15,
    labels: Sequence[str] = ("a", "b", "c"),
    num_states: Optional[int] = None,
    max_transitions: Optional[int] = None,
) -> Lts:
    """Random, possibly nondeterministic LTS with about 2n transitions."""
    n = num_states if num_states is not None else rng.randint(1, max_states)
    labels = tuple(labels[: rng.randint(1, len(labels))])
    budget = max_transitions if max_transitions is not None else 2 * n
    triples = set()
    for _ in range(budget):
        triples.add((rng.randrange(n), rng.choice(labels), rng.randrange(n)))
    return Lts(n, labels, tuple(triples), rng.randrange(n))


def random_deterministic_lts(
    rng: random.Random,
    max_states: int = 15,
    labels: Sequence[str] = ("a", "b", "c"),
    num_states: Optional[int] = None,
) -> Lts:
    """Random LTS with at most one successor per (state, label)."""
    n = num_states if num_states is not None else rng.randint(1, max_states)
    labels = tuple(labels[: rng.randint(1, len(labels))])
    triples = []
    for s in range(n):
        for a in labels:
            if rng.random() < 0.7:
                triples.append((s, a, rng.randrange(n)))
    return Lts(n, labels, tuple(triples), rng.randrange(n))


def random_cnf(
    rng: random.Random, max_vars: int = 10, max_clauses: int = 6
) -> CnfFormula:
    """Random formula with an even variable count and clauses of width
    one to three."""
    n = 2 * rng.randint(1, max_vars // 2)
    m = rng.randint(0, max_clauses)
    clauses = []
    for _ in range(m):
        width = rng.randint(1, min(3, n))
        variables = rng.sample(range(1, n + 1), width)
        clauses.append(frozenset(v if rng.random() < 0.5 else -v for v in variables))
    return CnfFormula(n, tuple(clauses))


def bench_lts(seed: int, num_states: int, nlabels: int = 2, budget: int = 2) -> Lts:
    """The benchmark's random family: each state draws a fixed budget of
    transitions with uniformly random label and target, so the transition
    count is about budget times states and label sets differ across
    states. Identical (seed, size) inputs yield identical systems."""
    rng = random.Random(f"{seed}:random-lts:{num_states}")
    labels = tuple("ab"[:nlabels]) if nlabels <= 2 else tuple(
        f"l{i}" for i in range(nlabels)
    )
    triples = set()
    for s in range(num_states):
        for _ in range(budget):
            triples.add((s, labels[rng.randrange(nlabels)], rng.randrange(num_states)))
    return Lts(num_states, labels, tuple(triples), 0)
