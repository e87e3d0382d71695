"""Scaling benchmark: similarity refinement versus bisimulation partition.

For each requested size an instance is generated from a seeded family,
validated once (which doubles as the warm-up), then each algorithm is
timed for a number of repetitions on a monotonic clock. A least-squares
slope of log(median time) against log(size) over the largest half of the
sizes summarizes the growth of each algorithm.
"""

from __future__ import annotations

import random
import statistics
import time
from typing import Optional

import numpy as np

from . import _kernels
from .automata import alpha_map, complement
from .errors import InputError
from .generators import bench_lts, random_cnf
from .lts import Lts, disjoint_union
from .satgadget import Half, build_split_dfa
from .simulation import Partition, SimRelation, _arrays

FAMILIES = ("random-lts", "gadget")

# medians below this are considered too close to clock resolution to fit
MIN_RELIABLE_SECONDS = 1e-4


def make_instance(family: str, seed: int, size: int) -> Lts:
    if family == "random-lts":
        return bench_lts(seed, size)
    if family == "gadget":
        return _gadget_instance(seed, size)
    raise InputError(f"unknown benchmark family {family!r} (expected one of {FAMILIES})")


def _gadget_instance(seed: int, size: int) -> Lts:
    """Combined LTS of the two split-language embeddings, the workload of
    the similarity-based emptiness pipeline, scaled to roughly ``size``
    states by growing the clause count."""
    rng = random.Random(f"{seed}:gadget:{size}")
    num_vars = 8
    best = None
    for m in range(1, 18):
        states = (num_vars + m + 2) * 2**m
        if best is None or abs(states - size // 2) < abs(best[1] - size // 2):
            best = (m, states)
    clauses = []
    for _ in range(best[0]):
        width = rng.randint(1, 3)
        variables = rng.sample(range(1, num_vars + 1), width)
        clauses.append(frozenset(v if rng.random() < 0.5 else -v for v in variables))
    from .satgadget import CnfFormula

    f = CnfFormula(num_vars, tuple(clauses))
    first = build_split_dfa(f, Half.FIRST)
    second = build_split_dfa(f, Half.SECOND)
    combined, _ = disjoint_union(alpha_map(first), alpha_map(complement(second)))
    return combined


def check_similarity(m: Lts, rel: SimRelation) -> None:
    """Validate a similarity result: reflexive, and closed under the
    simulation condition. Raises on violation.

    Vectorized per label: can[s', t] marks that t has an a-successor
    still related to s'; every edge s -a-> s' then requires the row of
    states related to s to be covered by can[s'].
    """
    n = m.num_states
    mat = rel.matrix
    if not np.all(np.diagonal(mat)):
        raise AssertionError("similarity is not reflexive")
    for label in m.labels:
        post: list[list[int]] = [[] for _ in range(n)]
        edges = []
        for s, a, d in m.transitions:
            if a == label:
                post[s].append(d)
                edges.append((s, d))
        can = np.zeros((n, n), dtype=np.uint8)
        for t in range(n):
            if post[t]:
                can[:, t] = np.bitwise_or.reduce(mat[:, post[t]], axis=1)
        for s, sp in edges:
            if np.any(mat[s] > can[sp]):
                t = int(np.argmax(mat[s] > can[sp]))
                raise AssertionError(
                    f"pair ({s}, {t}) is not closed under the simulation condition"
                )


def check_partition(m: Lts, partition: Partition) -> None:
    """Validate a bisimulation partition: a partition, and stable under
    per-label successor-block signatures."""
    states = sorted(q for block in partition.blocks for q in block)
    if states != list(range(m.num_states)):
        raise AssertionError("blocks do not partition the state set")
    index = partition.block_index
    sig: dict[int, set] = {q: set() for q in range(m.num_states)}
    for s, a, d in m.transitions:
        sig[s].add((a, index[d]))
    for block in partition.blocks:
        first = sig[block[0]]
        for q in block[1:]:
            if sig[q] != first:
                raise AssertionError(f"block {block} is not signature-stable")


def _fit_slope(sizes: list[int], medians: list[float]) -> tuple[Optional[float], list[int]]:
    """Log-log least-squares slope over the largest half of the points."""
    if len(sizes) < 2:
        return None, []
    keep = max(2, len(sizes) // 2)
    xs = np.log(np.array(sizes[-keep:], dtype=float))
    ys = np.log(np.array(medians[-keep:], dtype=float))
    slope = float(np.polyfit(xs, ys, 1)[0])
    return slope, sizes[-keep:]


def bench_scaling(
    family: str = "random-lts",
    sizes: tuple[int, ...] = (2000, 4000, 8000, 16000),
    reps: int = 5,
    seed: int = 0,
    backend: Optional[str] = None,
    validate: bool = True,
) -> dict:
    """Run the scaling benchmark and return the report document."""
    if list(sizes) != sorted(sizes):
        raise InputError("sizes must be ascending")
    if reps < 3:
        raise InputError("need at least 3 repetitions")
    backends = ["compiled", "pure"] if backend == "both" else [backend or _kernels.default_backend()]
    runs = [
        _bench_one_backend(family, sizes, reps, seed, b, validate) for b in backends
    ]
    return {
        "problem": "bench",
        "family": family,
        "sizes": list(sizes),
        "reps": reps,
        "seed": seed,
        "runs": runs,
    }


def _bench_one_backend(family, sizes, reps, seed, backend, validate) -> dict:
    instances = []
    warnings = []
    sim_points: list[tuple[int, float]] = []
    bis_points: list[tuple[int, float]] = []
    for size in sizes:
        m = make_instance(family, seed, size)
        src, lab, dst = _arrays(m)
        n, k = m.num_states, len(m.labels)

        # warm-up runs, validated, never timed
        warm_rel = _kernels.similarity_matrix(n, k, src, lab, dst, backend=backend)
        warm_blocks = _kernels.bisim_labels(n, k, src, lab, dst, backend=backend)
        if validate:
            check_similarity(m, SimRelation(n, warm_rel))
            check_partition(m, Partition.from_labels(warm_blocks))

        sim_times = []
        bis_times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            _kernels.similarity_matrix(n, k, src, lab, dst, backend=backend)
            sim_times.append(time.perf_counter() - t0)
        for _ in range(reps):
            t0 = time.perf_counter()
            _kernels.bisim_labels(n, k, src, lab, dst, backend=backend)
            bis_times.append(time.perf_counter() - t0)
        sim_median = statistics.median(sim_times)
        bis_median = statistics.median(bis_times)
        instances.append(
            {
                "size_requested": size,
                "states": n,
                "transitions": m.num_transitions,
                "similarity": {"times_s": sim_times, "median_s": sim_median},
                "bisimulation": {"times_s": bis_times, "median_s": bis_median},
            }
        )
        for points, median, name in (
            (sim_points, sim_median, "similarity"),
            (bis_points, bis_median, "bisimulation"),
        ):
            if median < MIN_RELIABLE_SECONDS:
                warnings.append(
                    f"{name} median at size {size} is below timer confidence; "
                    "dropped from the slope fit"
                )
            else:
                points.append((n, median))

    sim_slope, sim_fit = _fit_slope([p[0] for p in sim_points], [p[1] for p in sim_points])
    bis_slope, bis_fit = _fit_slope([p[0] for p in bis_points], [p[1] for p in bis_points])
    if sim_slope is None:
        warnings.append("too few reliable similarity points for a slope fit")
    if bis_slope is None:
        warnings.append("too few reliable bisimulation points for a slope fit")
    return {
        "backend": backend,
        "instances": instances,
        "slopes": {"similarity": sim_slope, "bisimulation": bis_slope},
        "fit_states": {"similarity": sim_fit, "bisimulation": bis_fit},
        "warnings": warnings,
    }
