"""Command-line front end.

Exit codes: 0 when a verdict was produced, 2 for input errors (including
bad usage), 3 when a brute-force scale cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import _kernels, bench, pipelines, textio
from .automata import Dfa, alpha_map, minimize
from .errors import InputError, OracleScaleError
from .lts import Lts
from .satgadget import Half, build_split_dfa, parse_dimacs, witness_string
from .simulation import bisimulation_partition, sim_equivalent, simulates

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SCALE = 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}")


def _load_dfa(path: str) -> Dfa:
    return textio.read_dfa(_read(path))


def _load_lts(path: str) -> Lts:
    return textio.read_lts(_read(path))


def _emit(args, doc: dict, human: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(human, end="")


def _word_text(word) -> str:
    if all(len(tok) == 1 for tok in word):
        return "".join(word)
    return " ".join(word)


def _report_human(report: pipelines.Report, extra: str = "") -> str:
    out = f"verdict: {report.verdict}\n"
    if report.witness is not None:
        out += f"witness: {_word_text(report.witness)}\n"
    return out + extra


def cmd_nei(args) -> int:
    a = _load_dfa(args.a)
    b = _load_dfa(args.b)
    report = pipelines.nei(a, b, path=args.path)
    _emit(args, report.to_doc(), _report_human(report))
    return EXIT_OK


def cmd_sat(args) -> int:
    f = parse_dimacs(_read(args.formula))
    if f.padded:
        print("note: odd variable count padded to even", file=sys.stderr)
    report = pipelines.sat_via_simulation(f, path=args.path)
    extra = ""
    if report.assignment is not None:
        extra += "assignment: " + "".join(str(b) for b in report.assignment) + "\n"
    if report.witness is not None:
        extra = f"witness: {witness_string(f, report.witness)}\n" + extra
    human = f"verdict: {report.verdict}\n" + extra
    _emit(args, report.to_doc(), human)
    return EXIT_OK


def cmd_inclusion(args) -> int:
    report = pipelines.inclusion_report(_load_dfa(args.a), _load_dfa(args.b))
    _emit(args, report.to_doc(), _report_human(report))
    return EXIT_OK


def cmd_simulate(args) -> int:
    m1 = _load_lts(args.m1)
    m2 = _load_lts(args.m2)
    held = simulates(m1, m2)
    doc = {"problem": "simulate", "verdict": "SIMULATED" if held else "NOT-SIMULATED"}
    _emit(args, doc, f"verdict: {doc['verdict']}\n")
    return EXIT_OK


def cmd_simeq(args) -> int:
    m = _load_lts(args.m)
    held = sim_equivalent(m, args.s, args.t)
    doc = {
        "problem": "simeq",
        "s": args.s,
        "t": args.t,
        "verdict": "EQUIVALENT" if held else "NOT-EQUIVALENT",
    }
    _emit(args, doc, f"verdict: {doc['verdict']}\n")
    return EXIT_OK


def cmd_bisim(args) -> int:
    m = _load_lts(args.m)
    partition = bisimulation_partition(m)
    doc = {
        "problem": "bisim",
        "num_blocks": partition.num_blocks,
        "blocks": [list(block) for block in partition.blocks],
    }
    _emit(args, doc, textio.write_partition(partition))
    return EXIT_OK


def _emit_file(args, kind: str, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    elif args.json:
        print(json.dumps({"problem": kind, kind: text}, indent=2, sort_keys=True))
    else:
        print(text, end="")


def cmd_alpha(args) -> int:
    _emit_file(args, "lts", textio.write_lts(alpha_map(_load_dfa(args.a))))
    return EXIT_OK


def cmd_minimize(args) -> int:
    _emit_file(args, "dfa", textio.write_dfa(minimize(_load_dfa(args.a))))
    return EXIT_OK


def cmd_gadget(args) -> int:
    f = parse_dimacs(_read(args.formula))
    if f.padded:
        print("note: odd variable count padded to even", file=sys.stderr)
    half = Half.FIRST if args.half == "1" else Half.SECOND
    _emit_file(args, "dfa", textio.write_dfa(build_split_dfa(f, half)))
    return EXIT_OK


def cmd_bench(args) -> int:
    report = bench.bench_scaling(
        family=args.family,
        sizes=tuple(args.sizes),
        reps=args.reps,
        seed=args.seed,
        backend=args.backend,
    )
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"family: {report['family']}  sizes: {report['sizes']}  reps: {report['reps']}  seed: {report['seed']}")
    for run in report["runs"]:
        print(f"backend: {run['backend']}")
        for inst in run["instances"]:
            print(
                f"  n={inst['states']:>7} transitions={inst['transitions']:>8} "
                f"similarity={inst['similarity']['median_s']:.6f}s "
                f"bisimulation={inst['bisimulation']['median_s']:.6f}s"
            )
        slopes = run["slopes"]
        sim = "n/a" if slopes["similarity"] is None else f"{slopes['similarity']:.3f}"
        bis = "n/a" if slopes["bisimulation"] is None else f"{slopes['bisimulation']:.3f}"
        print(f"  slopes: similarity={sim} bisimulation={bis}")
        for warning in run["warnings"]:
            print(f"  warning: {warning}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="simlts",
        description="Simulation, bisimulation, DFA intersection emptiness, and the CNF split-language reduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nei", parents=[common], help="intersection non-emptiness of two DFAs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--path", choices=("product", "sim", "simeq"), default="sim")
    p.set_defaults(fn=cmd_nei)

    p = sub.add_parser("sat", parents=[common], help="CNF satisfiability via the split-language gadget")
    p.add_argument("formula")
    p.add_argument("--path", choices=("sim", "simeq"), default="sim")
    p.set_defaults(fn=cmd_sat)

    p = sub.add_parser("inclusion", parents=[common], help="language inclusion of two DFAs")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=cmd_inclusion)

    p = sub.add_parser("simulate", parents=[common], help="does the second LTS simulate the first?")
    p.add_argument("m1")
    p.add_argument("m2")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("simeq", parents=[common], help="simulation equivalence of two states")
    p.add_argument("m")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(fn=cmd_simeq)

    p = sub.add_parser("bisim", parents=[common], help="bisimulation partition of an LTS")
    p.add_argument("m")
    p.set_defaults(fn=cmd_bisim)

    p = sub.add_parser("alpha", parents=[common], help="embed a DFA into a deterministic LTS")
    p.add_argument("a")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_alpha)

    p = sub.add_parser("minimize", parents=[common], help="canonical minimal DFA")
    p.add_argument("a")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_minimize)

    p = sub.add_parser("gadget", parents=[common], help="one split-language DFA of a CNF formula")
    p.add_argument("formula")
    p.add_argument("--half", choices=("1", "2"), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_gadget)

    p = sub.add_parser("bench", parents=[common], help="similarity vs bisimulation scaling benchmark")
    p.add_argument("--family", choices=bench.FAMILIES, default="random-lts")
    p.add_argument("--sizes", type=int, nargs="+", default=[2000, 4000, 8000, 16000])
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--backend",
        choices=("compiled", "pure", "both"),
        default=None,
        help=f"kernel backend (default: {_kernels.default_backend()})",
    )
    p.set_defaults(fn=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except OracleScaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
