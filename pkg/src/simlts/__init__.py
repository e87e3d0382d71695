"""simlts: simulation preorder and bisimulation on labelled transition
systems, DFA intersection non-emptiness, and the CNF split-language
reduction connecting them.

The quadratic similarity refinement and the bisimulation partition run on
a compiled core when the extension is built, with a pure-Python fallback
selected automatically at import (see ``kernel_backend``).
"""

from ._kernels import default_backend as kernel_backend, has_compiled
from .automata import (
    CHECK_LABEL,
    Dfa,
    Word,
    alpha_map,
    complement,
    enumerate_language,
    intersection_nonempty,
    language_inclusion,
    minimize,
    run_word,
)
from .errors import InputError, OracleScaleError, ParseError
from .lts import GadgetLts, Lts, disjoint_union, ndet_gadget
from .pipelines import (
    Report,
    inclusion_report,
    nei,
    nei_via_product,
    nei_via_similarity,
    nei_via_simeq,
    sat_via_simulation,
)
from .satgadget import (
    CnfFormula,
    Half,
    assignment_to_witness,
    brute_force_sat,
    build_split_dfa,
    decode_assignment,
    parse_dimacs,
    state_bound_check,
    witness_string,
)
from .simulation import (
    Partition,
    SimRelation,
    bisimulation_partition,
    naive_similarity,
    refined_similarity,
    sim_equivalent,
    simulates,
    simulation_equivalence_partition,
)

__version__ = "0.1.0"

__all__ = [
    "CHECK_LABEL",
    "CnfFormula",
    "Dfa",
    "GadgetLts",
    "Half",
    "InputError",
    "Lts",
    "OracleScaleError",
    "ParseError",
    "Partition",
    "Report",
    "SimRelation",
    "Word",
    "alpha_map",
    "assignment_to_witness",
    "bisimulation_partition",
    "brute_force_sat",
    "build_split_dfa",
    "complement",
    "decode_assignment",
    "disjoint_union",
    "enumerate_language",
    "has_compiled",
    "inclusion_report",
    "intersection_nonempty",
    "kernel_backend",
    "language_inclusion",
    "minimize",
    "naive_similarity",
    "ndet_gadget",
    "nei",
    "nei_via_product",
    "nei_via_similarity",
    "nei_via_simeq",
    "parse_dimacs",
    "refined_similarity",
    "run_word",
    "sat_via_simulation",
    "sim_equivalent",
    "simulates",
    "simulation_equivalence_partition",
    "state_bound_check",
    "witness_string",
]
