"""Executable reduction pipelines with cross-checkable verdicts.

Intersection non-emptiness of two DFAs is decided three ways: directly on
the product, through similarity of the LTS embeddings of the first
automaton and the second's complement, and through simulation equivalence
after the one-nondeterministic-state gadget. CNF satisfiability rides on
top of the split-language construction.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .automata import Dfa, Word, alpha_map, complement, intersection_nonempty
from .errors import InputError, OracleScaleError
from .limits import DEFAULT_GADGET_MAX_VARS
from .lts import disjoint_union, ndet_gadget
from .satgadget import (
    CnfFormula,
    Half,
    Assignment,
    build_split_dfa,
    decode_assignment,
)
from .simulation import refined_similarity, sim_equivalent, simulates

NON_EMPTY = "NON-EMPTY"
EMPTY = "EMPTY"
SAT = "SAT"
UNSAT = "UNSAT"


@dataclass(frozen=True)
class Report:
    """Outcome of one pipeline run, JSON-friendly via ``to_doc``."""

    problem: str
    path: str
    verdict: str
    sizes: dict[str, int]
    timings: dict[str, float]
    witness: Optional[Word] = None
    assignment: Optional[Assignment] = None

    def to_doc(self) -> dict:
        doc = {
            "problem": self.problem,
            "path": self.path,
            "verdict": self.verdict,
            "sizes": dict(self.sizes),
            "timings": dict(self.timings),
        }
        if self.witness is not None:
            doc["witness"] = list(self.witness)
        if self.assignment is not None:
            doc["assignment"] = list(self.assignment)
        return doc


def nei_via_product(a: Dfa, b: Dfa) -> Report:
    """Intersection non-emptiness on the product automaton, with witness."""
    t0 = time.perf_counter()
    witness = intersection_nonempty([a, b])
    elapsed = time.perf_counter() - t0
    return Report(
        problem="nei",
        path="product",
        verdict=NON_EMPTY if witness is not None else EMPTY,
        sizes={"a_states": a.num_states, "b_states": b.num_states},
        timings={"decide_s": elapsed},
        witness=witness,
    )


def nei_via_similarity(a: Dfa, b: Dfa) -> Report:
    """Intersection emptiness as inclusion in the complement, decided by
    simulation between the LTS embeddings.

    Everything outside the similarity computation is linear in the input.
    """
    t0 = time.perf_counter()
    m1 = alpha_map(a)
    m2 = alpha_map(complement(b))
    t1 = time.perf_counter()
    included = simulates(m1, m2)
    t2 = time.perf_counter()
    return Report(
        problem="nei",
        path="sim",
        verdict=EMPTY if included else NON_EMPTY,
        sizes={
            "a_states": a.num_states,
            "b_states": b.num_states,
            "combined_lts_states": m1.num_states + m2.num_states,
        },
        timings={"construct_s": t1 - t0, "decide_s": t2 - t1},
    )


def nei_via_simeq(a: Dfa, b: Dfa) -> Report:
    """Same decision routed through the nondeterministic gadget and
    simulation equivalence of its two fresh states."""
    t0 = time.perf_counter()
    m1 = alpha_map(a)
    m2 = alpha_map(complement(b))
    gadget = ndet_gadget(m1, m2)
    t1 = time.perf_counter()
    equivalent = sim_equivalent(gadget.lts, gadget.s, gadget.t)
    t2 = time.perf_counter()
    return Report(
        problem="nei",
        path="simeq",
        verdict=EMPTY if equivalent else NON_EMPTY,
        sizes={
            "a_states": a.num_states,
            "b_states": b.num_states,
            "gadget_lts_states": gadget.lts.num_states,
        },
        timings={"construct_s": t1 - t0, "decide_s": t2 - t1},
    )


_NEI_PATHS = {
    "product": nei_via_product,
    "sim": nei_via_similarity,
    "simeq": nei_via_simeq,
}


def nei(a: Dfa, b: Dfa, path: str = "sim") -> Report:
    try:
        fn = _NEI_PATHS[path]
    except KeyError:
        raise InputError(f"unknown decision path {path!r}")
    return fn(a, b)


def inclusion_report(a: Dfa, b: Dfa) -> Report:
    """Language inclusion of two DFAs via the complement product."""
    t0 = time.perf_counter()
    counterexample = intersection_nonempty([a, complement(b)])
    elapsed = time.perf_counter() - t0
    return Report(
        problem="inclusion",
        path="product",
        verdict="INCLUDED" if counterexample is None else "NOT-INCLUDED",
        sizes={"a_states": a.num_states, "b_states": b.num_states},
        timings={"decide_s": elapsed},
        witness=counterexample,
    )


def sat_via_simulation(
    f: CnfFormula, path: str = "sim", max_vars: Optional[int] = None
) -> Report:
    """Satisfiability through the split-language gadget.

    The verdict comes from the chosen simulation-based emptiness path; on
    SAT the witness is extracted from the product (the decision paths do
    not produce words) and its first n bits are the assignment.
    """
    if path not in ("sim", "simeq"):
        raise InputError(f"unknown decision path {path!r}")
    cap = DEFAULT_GADGET_MAX_VARS if max_vars is None else max_vars
    if f.num_vars > cap:
        raise OracleScaleError(
            f"{f.num_vars} variables exceeds the gadget cap of {cap}"
        )
    t0 = time.perf_counter()
    first = build_split_dfa(f, Half.FIRST)
    second = build_split_dfa(f, Half.SECOND)
    t1 = time.perf_counter()
    decision = nei(first, second, path=path)
    witness = None
    assignment = None
    timings = {"build_s": t1 - t0, **{k: v for k, v in decision.timings.items()}}
    if decision.verdict == NON_EMPTY:
        t2 = time.perf_counter()
        witness = intersection_nonempty([first, second])
        timings["witness_s"] = time.perf_counter() - t2
        assignment = decode_assignment(f, witness)
    return Report(
        problem="sat",
        path=path,
        verdict=SAT if decision.verdict == NON_EMPTY else UNSAT,
        sizes={
            "variables": f.num_vars,
            "clauses": f.num_clauses,
            "first_dfa_states": first.num_states,
            "second_dfa_states": second.num_states,
        },
        timings=timings,
        witness=witness,
        assignment=assignment,
    )
