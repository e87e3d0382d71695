"""Independent brute-force oracles for the test suite.

Nothing here calls the code paths it is used to check: languages are
enumerated by walking transition tables directly, split-language
membership is evaluated straight from its defining condition, and
similarity is taken as the union of all relations that pass a direct
simulation check.
"""

from __future__ import annotations

from itertools import product

from simlts import CnfFormula, Dfa, Half, Lts


def bfs_language(a: Dfa, max_len: int) -> set[str]:
    """Accepted words up to max_len by breadth-first expansion over the
    transition table (symbols joined into strings)."""
    idx = {tok: i for i, tok in enumerate(a.alphabet)}
    accepted = set()
    frontier = [("", a.initial)]
    for _ in range(max_len + 1):
        nxt = []
        for word, q in frontier:
            if q in a.accepting:
                accepted.add(word)
            for tok in a.alphabet:
                nxt.append((word + tok, a.delta[q][idx[tok]]))
        frontier = nxt
    return {w for w in accepted if len(w) <= max_len}


def lit_true(lit: int, rho) -> bool:
    value = rho[abs(lit) - 1]
    return value == 1 if lit > 0 else value == 0


def eval_formula(num_vars: int, clauses, rho) -> bool:
    return all(any(lit_true(lit, rho) for lit in c) for c in clauses)


def clause_sat_by_half(clause, rho, half: Half, num_vars: int) -> bool:
    h = num_vars // 2
    lo, hi = (1, h) if half is Half.FIRST else (h + 1, num_vars)
    return any(lit_true(lit, rho) and lo <= abs(lit) <= hi for lit in clause)


def split_condition(f: CnfFormula, half: Half, word: str) -> bool:
    """Direct evaluation of split-language membership for a 0/1 string."""
    n, m = f.num_vars, f.num_clauses
    if len(word) != n + m or any(c not in "01" for c in word):
        return False
    rho = tuple(int(c) for c in word[:n])
    trigger = "0" if half is Half.FIRST else "1"
    for i, clause in enumerate(f.clauses):
        if word[n + i] == trigger and not clause_sat_by_half(clause, rho, half, n):
            return False
    return True


def split_language(f: CnfFormula, half: Half) -> set[str]:
    n, m = f.num_vars, f.num_clauses
    return {
        "".join(w)
        for w in product("01", repeat=n + m)
        if split_condition(f, half, "".join(w))
    }


def is_simulation(m: Lts, pairs: set[tuple[int, int]]) -> bool:
    """Direct check of the simulation condition for a relation."""
    post: dict[tuple[int, str], list[int]] = {}
    for s, a, d in m.transitions:
        post.setdefault((s, a), []).append(d)
    for s, t in pairs:
        for (p, a), succs in post.items():
            if p != s:
                continue
            targets = post.get((t, a), ())
            for sp in succs:
                if not any((sp, tp) in pairs for tp in targets):
                    return False
    return True


def exhaustive_similarity(m: Lts) -> set[tuple[int, int]]:
    """Union of all simulation relations, by enumerating every candidate
    relation. Only feasible for very small state counts."""
    n = m.num_states
    all_pairs = [(s, t) for s in range(n) for t in range(n)]
    union: set[tuple[int, int]] = set()
    for bits in product((0, 1), repeat=len(all_pairs)):
        rel = {p for p, b in zip(all_pairs, bits) if b}
        if rel and is_simulation(m, rel):
            union |= rel
    return union


def exhaustive_bisimilarity(m: Lts) -> set[tuple[int, int]]:
    """Union of all symmetric simulation relations."""
    n = m.num_states
    all_pairs = [(s, t) for s in range(n) for t in range(n)]
    union: set[tuple[int, int]] = set()
    for bits in product((0, 1), repeat=len(all_pairs)):
        rel = {p for p, b in zip(all_pairs, bits) if b}
        if rel and all((t, s) in rel for s, t in rel) and is_simulation(m, rel):
            union |= rel
    return union


def close_downward(m: Lts, pairs: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Shrink a relation to a simulation by deleting violating pairs."""
    post: dict[tuple[int, str], list[int]] = {}
    for s, a, d in m.transitions:
        post.setdefault((s, a), []).append(d)
    rel = set(pairs)
    changed = True
    while changed:
        changed = False
        for s, t in sorted(rel):
            ok = True
            for (p, a), succs in post.items():
                if p != s:
                    continue
                targets = post.get((t, a), ())
                for sp in succs:
                    if not any((sp, tp) in rel for tp in targets):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                rel.discard((s, t))
                changed = True
    return rel


def psi_formula() -> CnfFormula:
    """The two-variable, two-clause worked example."""
    return CnfFormula(2, (frozenset({1, -2}), frozenset({-1, 2})))


def fig1_left_dfa() -> Dfa:
    """Hand transcription of the first split automaton of the worked
    example, completed with a sink: branch on the first bit, remember it
    through two filler positions, then check the clause bits."""
    table = {
        (0, "1"): 1, (0, "0"): 2,          # s0 -> x1 / not-x1
        (2, "0"): 3, (2, "1"): 3,          # not-x1 branch
        (1, "0"): 4, (1, "1"): 4,          # x1 branch
        (3, "1"): 5,                       # first clause bit must be 1
        (4, "0"): 6, (4, "1"): 6,          # first clause bit free
        (5, "0"): 7, (5, "1"): 7,          # second clause bit free
        (6, "1"): 7,                       # second clause bit must be 1
    }
    return Dfa.from_partial(8, ("0", "1"), table, [7], 0)


def fig1_right_dfa() -> Dfa:
    """Hand transcription of the second split automaton (seven drawn
    states), completed with a sink."""
    table = {
        (0, "0"): 1, (0, "1"): 1,          # t0: first bit irrelevant
        (1, "0"): 2, (1, "1"): 3,          # branch on the second bit
        (3, "0"): 4,                       # x2 = 1: first clause bit must be 0
        (2, "0"): 5, (2, "1"): 5,          # x2 = 0: first clause bit free
        (4, "0"): 6, (4, "1"): 6,          # second clause bit free
        (5, "0"): 6,                       # second clause bit must be 0
    }
    return Dfa.from_partial(7, ("0", "1"), table, [6], 0)
