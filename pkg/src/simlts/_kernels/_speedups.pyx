# cython: boundscheck=False, wraparound=False, nonecheck=False, cdivision=True
"""Compiled kernels: similarity refinement and bisimulation partition.

The similarity kernel is the hot quadratic loop; it keeps, per label, an
n-by-n table of successor counters so that each candidate pair is deleted
and propagated exactly once, for an overall states-times-transitions
bound. Counters are 16-bit, which caps the per-label out-degree of a
single state at 65534; the pure backend has no such limit.
"""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy

ctypedef cnp.int64_t i64
ctypedef cnp.uint16_t u16
ctypedef cnp.uint8_t u8


cdef inline i64* _grow(i64* buf, i64* cap) except NULL:
    cdef i64 newcap = cap[0] * 2
    cdef i64* nbuf = <i64*> realloc(buf, newcap * sizeof(i64))
    if nbuf == NULL:
        free(buf)
        raise MemoryError("worklist allocation failed")
    cap[0] = newcap
    return nbuf


def similarity_matrix(int n, int nlabels, src, lab, dst):
    src = np.ascontiguousarray(src, dtype=np.int64)
    lab = np.ascontiguousarray(lab, dtype=np.int64)
    dst = np.ascontiguousarray(dst, dtype=np.int64)
    cdef i64 m = src.shape[0]

    # out-degree per (label, state)
    outdeg_np = np.zeros((nlabels, n), dtype=np.int64)
    if m:
        np.add.at(outdeg_np, (lab, src), 1)
    if nlabels and n and outdeg_np.max() >= 0xFFFF:
        raise ValueError(
            "per-label out-degree too large for the compiled kernel; "
            "use the pure backend"
        )

    # predecessors in CSR form, grouped by (label, target)
    if m:
        order = np.lexsort((src, dst, lab))
        pre_src_np = np.ascontiguousarray(src[order])
        counts = np.bincount(lab * n + dst, minlength=nlabels * n)
    else:
        pre_src_np = np.zeros(0, dtype=np.int64)
        counts = np.zeros(nlabels * n, dtype=np.int64)
    pre_start_np = np.zeros(nlabels * n + 1, dtype=np.int64)
    np.cumsum(counts, out=pre_start_np[1:])

    count_np = np.empty((nlabels, n, n), dtype=np.uint16)
    cdef int a
    for a in range(nlabels):
        count_np[a, :, :] = outdeg_np[a].astype(np.uint16)[None, :]
    relation_np = np.ones((n, n), dtype=np.uint8)

    cdef i64[::1] pre_start = pre_start_np
    cdef i64[::1] pre_src = pre_src_np
    cdef i64[:, ::1] outdeg = outdeg_np
    cdef u16[:, :, ::1] count = count_np if nlabels else np.empty((1, 1, 1), dtype=np.uint16)
    cdef u8[:, ::1] relation = relation_np

    # seeding cursors: pairs (mover, stuck) violating the label condition
    movers_list = []
    stuck_list = []
    for a in range(nlabels):
        movers_list.append(np.flatnonzero(outdeg_np[a] > 0).astype(np.int64))
        stuck_list.append(np.flatnonzero(outdeg_np[a] == 0).astype(np.int64))

    cdef i64 cap = 1 << 12
    cdef i64* stack = <i64*> malloc(cap * sizeof(i64))
    if stack == NULL:
        raise MemoryError("worklist allocation failed")
    cdef i64 top = 0

    cdef i64[::1] movers
    cdef i64[::1] stuck
    cdef i64 nmov = 0, nstuck = 0
    cdef i64 si = 0, zi = 0
    cdef int a_cur = 0
    cdef bint seeding = nlabels > 0
    if seeding:
        movers = movers_list[0]
        stuck = stuck_list[0]
        nmov = movers.shape[0]
        nstuck = stuck.shape[0]

    cdef i64 code, sp, tp, t, s, ii, jj, base_t, base_s
    cdef u16 c
    try:
        while True:
            # drain the worklist before seeding more initial violations,
            # keeping the stack near the cascade frontier
            while top > 0:
                top -= 1
                code = stack[top]
                sp = code / n
                tp = code - sp * n
                for a in range(nlabels):
                    base_t = pre_start[a * n + tp]
                    for ii in range(base_t, pre_start[a * n + tp + 1]):
                        t = pre_src[ii]
                        c = count[a, sp, t] - 1
                        count[a, sp, t] = c
                        if c == 0:
                            base_s = pre_start[a * n + sp]
                            for jj in range(base_s, pre_start[a * n + sp + 1]):
                                s = pre_src[jj]
                                if relation[s, t]:
                                    relation[s, t] = 0
                                    if top == cap:
                                        stack = _grow(stack, &cap)
                                    stack[top] = s * n + t
                                    top += 1
            if not seeding:
                break
            while seeding and top == 0:
                if nmov == 0 or nstuck == 0 or si >= nmov:
                    a_cur += 1
                    if a_cur >= nlabels:
                        seeding = False
                        break
                    movers = movers_list[a_cur]
                    stuck = stuck_list[a_cur]
                    nmov = movers.shape[0]
                    nstuck = stuck.shape[0]
                    si = 0
                    zi = 0
                    continue
                s = movers[si]
                t = stuck[zi]
                zi += 1
                if zi >= nstuck:
                    zi = 0
                    si += 1
                if relation[s, t]:
                    relation[s, t] = 0
                    stack[0] = s * n + t
                    top = 1
            if not seeding and top == 0:
                break
    finally:
        free(stack)
    return relation_np


def bisim_labels(int n, int nlabels, src, lab, dst):
    src = np.ascontiguousarray(src, dtype=np.int64)
    lab = np.ascontiguousarray(lab, dtype=np.int64)
    dst = np.ascontiguousarray(dst, dtype=np.int64)
    cdef i64 m = src.shape[0]

    # transitions in CSR form grouped by source, fixed across rounds
    if m:
        order = np.argsort(src, kind="stable")
        tdst_np = np.ascontiguousarray(dst[order])
        tlab_np = np.ascontiguousarray(lab[order])
        counts = np.bincount(src, minlength=n)
    else:
        tdst_np = np.zeros(0, dtype=np.int64)
        tlab_np = np.zeros(0, dtype=np.int64)
        counts = np.zeros(n, dtype=np.int64)
    start_np = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=start_np[1:])

    cdef i64[::1] start = start_np
    cdef i64[::1] tdst = tdst_np
    cdef i64[::1] tlab = tlab_np

    block_np = np.zeros(n, dtype=np.int64)
    cdef i64[::1] block = block_np
    new_np = np.empty(n, dtype=np.int64)
    cdef i64[::1] new = new_np

    cdef i64 maxdeg = 0
    cdef i64 d
    cdef i64 s, i, j, k
    for s in range(n):
        d = start[s + 1] - start[s]
        if d > maxdeg:
            maxdeg = d
    sig_np = np.empty(maxdeg + 1, dtype=np.int64)
    cdef i64[::1] sig = sig_np

    cdef i64 num_blocks = 1
    cdef i64 key, base
    cdef object table, got
    while True:
        table = {}
        for s in range(n):
            base = start[s]
            d = start[s + 1] - base
            sig[0] = block[s]
            for i in range(d):
                sig[i + 1] = block[tdst[base + i]] * nlabels + tlab[base + i]
            # insertion sort then dedupe; per-state degrees are small
            for i in range(2, d + 1):
                key = sig[i]
                j = i - 1
                while j >= 1 and sig[j] > key:
                    sig[j + 1] = sig[j]
                    j -= 1
                sig[j + 1] = key
            k = 1
            for i in range(2, d + 1):
                if sig[i] != sig[k]:
                    k += 1
                    sig[k] = sig[i]
            k = k + 1 if d > 0 else 1
            got = sig_np[:k].tobytes()
            if got in table:
                new[s] = table[got]
            else:
                new[s] = len(table)
                table[got] = new[s]
        if len(table) == num_blocks:
            return new_np
        num_blocks = len(table)
        block_np[:] = new_np
