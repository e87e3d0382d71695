"""Labelled transition systems and the one-nondeterministic-state gadget."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import InputError

Transition = tuple[int, str, int]


@dataclass(frozen=True)
class Lts:
    """A labelled transition system over dense integer state identifiers.

    Transitions are stored canonically sorted by (source, label index,
    target); the label index refers to the position in ``labels``.
    """

    num_states: int
    labels: tuple[str, ...]
    transitions: tuple[Transition, ...]
    initial: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.num_states < 1:
            raise InputError("an LTS needs at least one state")
        if len(set(self.labels)) != len(self.labels):
            raise InputError("duplicate action labels")
        if not 0 <= self.initial < self.num_states:
            raise InputError(f"initial state {self.initial} out of range")
        index = {a: i for i, a in enumerate(self.labels)}
        seen = set()
        for src, label, dst in self.transitions:
            if label not in index:
                raise InputError(f"undeclared label {label!r} in transition")
            if not (0 <= src < self.num_states and 0 <= dst < self.num_states):
                raise InputError(f"transition ({src}, {label!r}, {dst}) out of range")
            if (src, label, dst) in seen:
                raise InputError(f"duplicate transition ({src}, {label!r}, {dst})")
            seen.add((src, label, dst))
        ordered = tuple(sorted(self.transitions, key=lambda t: (t[0], index[t[1]], t[2])))
        object.__setattr__(self, "transitions", ordered)

    @property
    def num_transitions(self) -> int:
        return len(self.transitions)

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown label {label!r}")

    def successors(self, state: int, label: str) -> tuple[int, ...]:
        return tuple(d for s, a, d in self.transitions if s == state and a == label)

    def is_deterministic(self) -> bool:
        """True when no (state, label) pair has two outgoing transitions."""
        seen = set()
        for src, label, _ in self.transitions:
            if (src, label) in seen:
                return False
            seen.add((src, label))
        return True


def disjoint_union(m1: Lts, m2: Lts) -> tuple[Lts, int]:
    """Combine two LTSs over the union of their label sets.

    States of ``m1`` keep their identifiers, states of ``m2`` are shifted
    by ``m1.num_states`` (the returned offset). Labels shared by token are
    identified; the initial state of the union is ``m1``'s.
    """
    offset = m1.num_states
    labels = m1.labels + tuple(a for a in m2.labels if a not in m1.labels)
    transitions = list(m1.transitions)
    transitions.extend((s + offset, a, d + offset) for s, a, d in m2.transitions)
    combined = Lts(
        num_states=m1.num_states + m2.num_states,
        labels=labels,
        transitions=tuple(transitions),
        initial=m1.initial,
    )
    return combined, offset


class GadgetLts(NamedTuple):
    lts: Lts
    s: int
    t: int


def ndet_gadget(m1: Lts, m2: Lts, label: Optional[str] = None) -> GadgetLts:
    """Glue two LTSs under fresh states s and t with one shared action.

    s moves to both initial states, t only to m2's, so s and t are
    simulation equivalent in the result exactly when m1's initial state is
    simulated by m2's. When no label is given the first declared label of
    m1 (falling back to m2, then to a fresh "a") is used.
    """
    combined, offset = disjoint_union(m1, m2)
    if label is None:
        if m1.labels:
            label = m1.labels[0]
        elif m2.labels:
            label = m2.labels[0]
        else:
            label = "a"
    labels = combined.labels
    if label not in labels:
        labels = labels + (label,)
    s = combined.num_states
    t = combined.num_states + 1
    transitions = combined.transitions + (
        (s, label, m1.initial),
        (s, label, offset + m2.initial),
        (t, label, offset + m2.initial),
    )
    lts = Lts(
        num_states=combined.num_states + 2,
        labels=labels,
        transitions=transitions,
        initial=s,
    )
    return GadgetLts(lts, s, t)
