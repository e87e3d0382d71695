"""Pure-Python kernels, mirroring the compiled extension.

Same worklist algorithms as ``_speedups``; used when the extension is not
built or when SIMLTS_PURE forces them. Fine for the test-scale instances,
orders of magnitude slower on benchmark-scale ones.
"""

from __future__ import annotations

import numpy as np


def similarity_matrix(n, nlabels, src, lab, dst):
    """Largest simulation relation by counter-based worklist refinement.

    Starts from the full relation and deletes pairs that can no longer be
    justified. count[a][s][t] tracks how many a-successors of t still
    simulate-candidate s; a pair (s, t) dies when some a-move of s hits a
    count of zero. Each deleted pair is processed exactly once, giving the
    states-times-transitions bound.
    """
    m = len(src)
    post = [[[] for _ in range(n)] for _ in range(nlabels)]
    pre = [[[] for _ in range(n)] for _ in range(nlabels)]
    for i in range(m):
        post[lab[i]][src[i]].append(dst[i])
        pre[lab[i]][dst[i]].append(src[i])

    outdeg = np.zeros((nlabels, n), dtype=np.int64)
    for a in range(nlabels):
        for s in range(n):
            outdeg[a, s] = len(post[a][s])

    # count[a, s, t] = |{t' : t -a-> t' and (s, t') still related}|
    count = np.repeat(outdeg[:, None, :], n, axis=1)
    relation = np.ones((n, n), dtype=np.uint8)
    stack: list[tuple[int, int]] = []

    for a in range(nlabels):
        movers = [s for s in range(n) if outdeg[a, s] > 0]
        stuck = [t for t in range(n) if outdeg[a, t] == 0]
        if not movers or not stuck:
            continue
        for s in movers:
            for t in stuck:
                if relation[s, t]:
                    relation[s, t] = 0
                    stack.append((s, t))

    while stack:
        sp, tp = stack.pop()
        for a in range(nlabels):
            for t in pre[a][tp]:
                count[a, sp, t] -= 1
                if count[a, sp, t] == 0:
                    for s in pre[a][sp]:
                        if relation[s, t]:
                            relation[s, t] = 0
                            stack.append((s, t))
    return relation


def bisim_labels(n, nlabels, src, lab, dst):
    """Coarsest bisimulation partition by signature refinement.

    A state's per-round signature is its current block plus the set of
    (label, successor block) pairs; rounds repeat until the block count
    stops growing.
    """
    m = len(src)
    block = [0] * n
    num_blocks = 1
    while True:
        outs: list[list[int]] = [[] for _ in range(n)]
        for i in range(m):
            outs[src[i]].append(block[dst[i]] * nlabels + lab[i])
        table: dict[tuple, int] = {}
        new = [0] * n
        for s in range(n):
            key = (block[s], tuple(sorted(set(outs[s]))))
            new[s] = table.setdefault(key, len(table))
        if len(table) == num_blocks:
            return np.asarray(new, dtype=np.int64)
        block, num_blocks = new, len(table)
