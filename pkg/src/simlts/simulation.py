"""Simulation preorder, simulation equivalence, and bisimulation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .errors import InputError
from .lts import Lts, disjoint_union


@dataclass(frozen=True, eq=False)
class SimRelation:
    """The largest simulation relation of one LTS, as an n-by-n table.

    ``matrix[s, t] == 1`` means t simulates s (s is below t in the
    preorder). The table is immutable.
    """

    num_states: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.ascontiguousarray(self.matrix, dtype=np.uint8)
        if mat.shape != (self.num_states, self.num_states):
            raise InputError("relation table has the wrong shape")
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        s, t = pair
        return bool(self.matrix[s, t])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimRelation):
            return NotImplemented
        return self.num_states == other.num_states and np.array_equal(
            self.matrix, other.matrix
        )

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Related pairs in ascending (s, t) order."""
        for s, t in zip(*np.nonzero(self.matrix)):
            yield int(s), int(t)


@dataclass(frozen=True)
class Partition:
    """A partition of the state set into disjoint blocks.

    Blocks are canonical: members sorted ascending, blocks ordered by
    their smallest member. ``block_index[s]`` is the block of state s.
    """

    blocks: tuple[tuple[int, ...], ...]
    block_index: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        groups: dict[int, list[int]] = {}
        for state, lab in enumerate(labels):
            groups.setdefault(int(lab), []).append(state)
        blocks = sorted((tuple(members) for members in groups.values()), key=lambda b: b[0])
        index = [0] * len(labels)
        for i, block in enumerate(blocks):
            for state in block:
                index[state] = i
        return cls(tuple(blocks), tuple(index))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_of(self, state: int) -> tuple[int, ...]:
        return self.blocks[self.block_index[state]]

    def same_block(self, s: int, t: int) -> bool:
        return self.block_index[s] == self.block_index[t]


def _arrays(m: Lts) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    index = {a: i for i, a in enumerate(m.labels)}
    k = m.num_transitions
    src = np.empty(k, dtype=np.int64)
    lab = np.empty(k, dtype=np.int64)
    dst = np.empty(k, dtype=np.int64)
    for i, (s, a, d) in enumerate(m.transitions):
        src[i] = s
        lab[i] = index[a]
        dst[i] = d
    return src, lab, dst


def naive_similarity(m: Lts) -> SimRelation:
    """Largest simulation relation by fixpoint sweeps from the full relation.

    Deterministic row-major passes delete any pair violating the
    simulation condition until a full pass deletes nothing. Quartic and
    simple; serves as the oracle for the refined implementation.
    """
    n = m.num_states
    post: list[dict[str, list[int]]] = [{} for _ in range(n)]
    for s, a, d in m.transitions:
        post[s].setdefault(a, []).append(d)
    rel = [[True] * n for _ in range(n)]

    def ok(s: int, t: int) -> bool:
        for a, succs in post[s].items():
            targets = post[t].get(a, ())
            for sp in succs:
                if not any(rel[sp][tp] for tp in targets):
                    return False
        return True

    changed = True
    while changed:
        changed = False
        for s in range(n):
            for t in range(n):
                if rel[s][t] and not ok(s, t):
                    rel[s][t] = False
                    changed = True
    return SimRelation(n, np.array(rel, dtype=np.uint8))


def refined_similarity(m: Lts, backend: Optional[str] = None) -> SimRelation:
    """Largest simulation relation via worklist refinement.

    Produces exactly the naive fixpoint, but each candidate pair is
    deleted and propagated at most once (states-times-transitions time).
    """
    src, lab, dst = _arrays(m)
    mat = _kernels.similarity_matrix(
        m.num_states, len(m.labels), src, lab, dst, backend=backend
    )
    return SimRelation(m.num_states, mat)


def simulates(m1: Lts, m2: Lts, backend: Optional[str] = None) -> bool:
    """Whether m2's initial state simulates m1's, in their disjoint union."""
    combined, offset = disjoint_union(m1, m2)
    rel = refined_similarity(combined, backend=backend)
    return (m1.initial, offset + m2.initial) in rel


def sim_equivalent(m: Lts, s: int, t: int, backend: Optional[str] = None) -> bool:
    """Whether states s and t of one LTS simulate each other."""
    for state in (s, t):
        if not 0 <= state < m.num_states:
            raise InputError(f"unknown state identifier {state}")
    rel = refined_similarity(m, backend=backend)
    return (s, t) in rel and (t, s) in rel


def simulation_equivalence_partition(rel: SimRelation) -> Partition:
    """Equivalence classes of mutual simulation.

    The symmetric part of a preorder is an equivalence, so grouping by
    mutual pairs is well defined.
    """
    n = rel.num_states
    mutual = np.logical_and(rel.matrix, rel.matrix.T)
    labels = [-1] * n
    next_label = 0
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = next_label
        for t in range(s + 1, n):
            if labels[t] < 0 and mutual[s, t]:
                labels[t] = next_label
        next_label += 1
    return Partition.from_labels(labels)


def bisimulation_partition(m: Lts, backend: Optional[str] = None) -> Partition:
    """Coarsest partition where blockmates have, per label, successors in
    identical block sets; computed by signature refinement to fixpoint."""
    src, lab, dst = _arrays(m)
    labels = _kernels.bisim_labels(
        m.num_states, len(m.labels), src, lab, dst, backend=backend
    )
    return Partition.from_labels(labels)
