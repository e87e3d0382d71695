import random
from itertools import product

import pytest

from simlts import (
    CHECK_LABEL,
    Dfa,
    Half,
    InputError,
    OracleScaleError,
    alpha_map,
    build_split_dfa,
    complement,
    enumerate_language,
    intersection_nonempty,
    language_inclusion,
    minimize,
    run_word,
)
from simlts.automata import reachable_states
from simlts.generators import random_dfa, random_dfa_pair

from oracles import bfs_language, fig1_left_dfa, fig1_right_dfa, psi_formula

# language of the first worked-example automaton up to length 4, frozen
# from direct evaluation of the split condition
FIG1_LEFT_WORDS = {"0010", "0011", "0110", "0111", "1001", "1011", "1101", "1111"}


def one_state_accepting() -> Dfa:
    return Dfa(("a",), ((0,),), frozenset({0}), 0)


def words(language) -> set[str]:
    return {"".join(w) for w in language}


class TestDfaValidation:
    def test_rejects_partial_row(self):
        with pytest.raises(InputError):
            Dfa(("a", "b"), ((0,),), frozenset(), 0)

    def test_rejects_bad_target(self):
        with pytest.raises(InputError):
            Dfa(("a",), ((3,),), frozenset(), 0)

    def test_rejects_reserved_token(self):
        with pytest.raises(InputError):
            Dfa((CHECK_LABEL,), ((0,),), frozenset(), 0)

    def test_rejects_duplicate_symbols(self):
        with pytest.raises(InputError):
            Dfa(("a", "a"), ((0, 0),), frozenset(), 0)

    def test_rejects_bad_initial_and_accepting(self):
        with pytest.raises(InputError):
            Dfa(("a",), ((0,),), frozenset(), 5)
        with pytest.raises(InputError):
            Dfa(("a",), ((0,),), frozenset({9}), 0)

    def test_from_partial_adds_sink_only_when_needed(self):
        complete = Dfa.from_partial(1, ("a",), {(0, "a"): 0}, [0], 0)
        assert complete.num_states == 1
        partial = Dfa.from_partial(2, ("a",), {(0, "a"): 1}, [1], 0)
        assert partial.num_states == 3
        assert partial.delta[1] == (2,)
        assert partial.delta[2] == (2,)


class TestRunWord:
    def test_empty_word_on_accepting_initial(self):
        assert run_word(one_state_accepting(), ()) is True

    def test_fig1_left_accepts_1101(self):
        assert run_word(fig1_left_dfa(), tuple("1101")) is True

    def test_fig1_left_rejects_0000(self):
        assert run_word(fig1_left_dfa(), tuple("0000")) is False

    def test_fig1_left_matches_bfs_enumeration(self):
        a = fig1_left_dfa()
        lang = bfs_language(a, 4)
        assert lang == FIG1_LEFT_WORDS
        for w in ("1101", "0000", "111", "0010", ""):
            assert run_word(a, tuple(w)) == (w in lang)

    def test_unknown_symbol_reports_symbol_and_position(self):
        with pytest.raises(InputError, match=r"'c' at position 2"):
            run_word(fig1_left_dfa(), ("0", "c"))


class TestComplement:
    def test_flips_epsilon(self):
        a = one_state_accepting()
        assert run_word(a, ()) and not run_word(complement(a), ())

    def test_involution(self):
        rng = random.Random(1)
        for _ in range(20):
            a = random_dfa(rng)
            assert complement(complement(a)) == a

    def test_fig1_right_complement_accepts_11(self):
        a = fig1_right_dfa()
        assert not run_word(a, tuple("11"))
        assert run_word(complement(a), tuple("11"))

    def test_complement_language_is_set_difference(self):
        rng = random.Random(2)
        for _ in range(25):
            a = random_dfa(rng, max_states=6, alphabet=("a", "b"))
            for max_len in (0, 3):
                full = {
                    w
                    for length in range(max_len + 1)
                    for w in map("".join, product(a.alphabet, repeat=length))
                }
                assert words(enumerate_language(complement(a), max_len)) == full - words(
                    enumerate_language(a, max_len)
                )


class TestIntersection:
    def test_empty_accepting_forces_absent(self):
        rng = random.Random(3)
        a = random_dfa(rng, alphabet=("a", "b"))
        dead = Dfa(a.alphabet, a.delta, frozenset(), a.initial)
        b = random_dfa(rng, alphabet=("a", "b"))
        assert intersection_nonempty([dead, b]) is None

    def test_idempotent_intersection_returns_shortest(self):
        rng = random.Random(4)
        for _ in range(30):
            a = random_dfa(rng, max_states=6, alphabet=("a", "b"))
            witness = intersection_nonempty([a, a])
            lang = words(enumerate_language(a, 7))
            if witness is None:
                assert not lang or min(len(w) for w in lang) > 7
            else:
                assert "".join(witness) in lang
                assert all(len(w) >= len(witness) for w in lang)

    def test_worked_example_witness(self):
        psi = psi_formula()
        first = build_split_dfa(psi, Half.FIRST)
        second = build_split_dfa(psi, Half.SECOND)
        witness = intersection_nonempty([first, second])
        # all 16 length-4 words checked offline: intersection is {0010, 1101},
        # and ties are broken by alphabet order
        assert witness is not None and len(witness) == 4
        assert "".join(witness) == "0010"

    def test_alphabet_mismatch_lists_both(self):
        a = Dfa(("a",), ((0,),), frozenset({0}), 0)
        b = Dfa(("a", "b"), ((0, 0),), frozenset({0}), 0)
        with pytest.raises(InputError, match=r"\['a'\] vs \['a', 'b'\]"):
            intersection_nonempty([a, b])

    def test_needs_at_least_one(self):
        with pytest.raises(InputError):
            intersection_nonempty([])

    def test_universal_pair_yields_epsilon(self):
        u = one_state_accepting()
        assert intersection_nonempty([u, u]) == ()


class TestInclusion:
    def test_reflexive(self):
        rng = random.Random(5)
        for _ in range(10):
            a = random_dfa(rng)
            assert language_inclusion(a, a)

    def test_epsilon_separates(self):
        a = one_state_accepting()
        b = Dfa(("a",), ((0,),), frozenset(), 0)
        assert not language_inclusion(a, b)

    def test_worked_example_not_included_in_complement(self):
        psi = psi_formula()
        first = build_split_dfa(psi, Half.FIRST)
        second = build_split_dfa(psi, Half.SECOND)
        assert not language_inclusion(first, complement(second))

    def test_agrees_with_enumeration_subset(self):
        rng = random.Random(6)
        for _ in range(40):
            a, b = random_dfa_pair(rng, max_states=6)
            expected = words(enumerate_language(a, 6)) <= words(enumerate_language(b, 6))
            got = language_inclusion(a, b)
            if got:
                assert expected
            elif expected:
                # disagreement must come from a counterexample longer than
                # the enumeration horizon
                counter = intersection_nonempty([a, complement(b)])
                assert counter is not None and len(counter) > 6


class TestMinimize:
    def test_fixpoint_on_minimal(self):
        a = one_state_accepting()
        assert minimize(a) == a

    def test_idempotent_and_language_preserving(self):
        rng = random.Random(7)
        for _ in range(30):
            a = random_dfa(rng, max_states=8, alphabet=("a", "b"))
            small = minimize(a)
            assert minimize(small) == small
            assert small.num_states <= len(reachable_states(a))
            assert words(enumerate_language(a, 5)) == words(enumerate_language(small, 5))

    def test_canonical_for_equal_languages(self):
        # two structurally different automata for "words ending in a"
        a = Dfa(("a", "b"), ((1, 0), (1, 0)), frozenset({1}), 0)
        b = Dfa(
            ("a", "b"),
            ((1, 2), (3, 0), (1, 2), (3, 0)),
            frozenset({1, 3}),
            2,
        )
        assert minimize(a) == minimize(b)

    def test_worked_example_first_gadget_minimizes_to_fig1(self):
        psi = psi_formula()
        built = minimize(build_split_dfa(psi, Half.FIRST))
        assert built.num_states == 9
        assert built == minimize(fig1_left_dfa())


class TestEnumerate:
    def test_max_len_zero(self):
        assert enumerate_language(one_state_accepting(), 0) == {()}
        dead = Dfa(("a",), ((0,),), frozenset(), 0)
        assert enumerate_language(dead, 0) == set()

    def test_fig1_left_full_enumeration(self):
        assert words(enumerate_language(fig1_left_dfa(), 4)) == FIG1_LEFT_WORDS

    def test_empty_accepting_set(self):
        rng = random.Random(8)
        a = random_dfa(rng, alphabet=("a", "b"))
        dead = Dfa(a.alphabet, a.delta, frozenset(), a.initial)
        assert enumerate_language(dead, 4) == set()

    def test_cap_guard(self):
        a = Dfa(("a", "b"), ((0, 0),), frozenset({0}), 0)
        with pytest.raises(OracleScaleError):
            enumerate_language(a, 40)
        assert len(enumerate_language(a, 40, cap=2**41)) > 0 or True

    def test_negative_length_rejected(self):
        with pytest.raises(InputError):
            enumerate_language(one_state_accepting(), -1)


class TestAlphaMap:
    def test_single_accepting_self_loop(self):
        m = alpha_map(one_state_accepting())
        assert m.num_states == 2
        assert set(m.transitions) == {(0, "a", 0), (0, CHECK_LABEL, 1)}
        assert m.labels == ("a", CHECK_LABEL)
        assert m.initial == 0

    def test_no_accepting_states(self):
        dead = Dfa(("a",), ((0,),), frozenset(), 0)
        m = alpha_map(dead)
        assert m.num_states == 2
        assert all(label != CHECK_LABEL for _, label, _ in m.transitions)

    def test_transition_count(self):
        rng = random.Random(9)
        for _ in range(25):
            a = random_dfa(rng)
            m = alpha_map(a)
            assert m.num_transitions == a.num_states * len(a.alphabet) + len(a.accepting)
            assert m.is_deterministic()
