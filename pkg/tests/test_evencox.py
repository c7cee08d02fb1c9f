"""Even Coxeter systems: forbidden words, the scanner, chains and rigidity."""

import itertools
from collections import Counter

import pytest

from coxgrowth.algebra import rational_equal, series
from coxgrowth.coxgraph import load_corpus, parse_graph
from coxgrowth.evencox import (
    EvenSystem,
    a_word,
    amalgamate,
    chain_from_sequence,
    check_R_conditions,
    compare_systems,
    count_geodesics_even,
    enumerate_chains_by_definition,
    enumerate_rigid_chains,
    forbidden_occurrences,
    forbidden_words,
    forced_overlap,
    growth_series_even,
    is_forbidden_word,
    is_geodesic,
    scanner_matches_clique_automaton,
)
from coxgrowth.racg import geodesic_counts_racg

D4 = EvenSystem(load_corpus("dihedral4"))
SQ24 = EvenSystem(load_corpus("squares24"))


def test_even_system_rejects_triangles():
    with pytest.raises(ValueError):
        EvenSystem(load_corpus("k3k3"))


def test_even_system_rejects_odd_labels_at_parse():
    from coxgrowth.coxgraph import GraphParseError

    with pytest.raises(GraphParseError):
        parse_graph("vertex a\nvertex b\nedge a b 3\n")


def test_a_word():
    assert a_word(D4, "t", "s") == ("t", "s", "t")
    assert a_word(D4, "s", "t") == ("s", "t", "s")
    assert a_word(SQ24, "b", "a") == ("b",)  # label 2
    assert a_word(SQ24, "d", "a") == ("d", "a", "d")  # label 4


def test_forbidden_words_dihedral4():
    got = {"".join(w) for w in forbidden_words(D4, 8)}
    assert got == {"ss", "tt", "ststs", "tstst"}


def test_forbidden_words_shape():
    for w in forbidden_words(SQ24, 9):
        assert is_forbidden_word(SQ24, w)
        assert w[0] == w[-1]
        # interior letters alternate blocks over the boundary's neighbors
        assert all(x in SQ24.generators for x in w)


def test_forbidden_word_counts_by_length_equal_rank1_chains():
    by_len = Counter(len(w) for w in forbidden_words(SQ24, 12))
    table = enumerate_rigid_chains(SQ24, 12, 1)
    assert {n: table.q[1][n] for n in range(13) if table.q[1][n]} == dict(by_len)


def test_occurrences_mixed_flank_amalgam():
    # aba and adada share only the junction letter; no third forbidden
    # factor straddles b..d because b and d are not adjacent
    w = tuple("abadada")
    assert forbidden_occurrences(SQ24, w) == [(0, 3), (2, 7)]


def test_occurrences_alternating_word_dense():
    w = tuple("ststststst")
    assert forbidden_occurrences(D4, w) == [(i, i + 5) for i in range(6)]


def test_occurrences_none_on_geodesic():
    assert forbidden_occurrences(D4, tuple("stst")) == []


def test_is_forbidden_word():
    assert is_forbidden_word(D4, tuple("ststs"))
    assert not is_forbidden_word(D4, tuple("stst"))
    assert not is_forbidden_word(D4, tuple("sts"))
    assert is_forbidden_word(SQ24, ("a", "a"))
    assert is_forbidden_word(SQ24, tuple("adada"))
    assert not is_forbidden_word(SQ24, tuple("adad"))


def test_amalgamate():
    assert amalgamate(tuple("aba"), ("a",), tuple("adada")) == tuple("abadada")
    assert amalgamate(("s", "s"), ("s",), ("s", "s")) == ("s", "s", "s")


def test_forced_overlap():
    # same boundary letter: overlap is that letter
    assert forced_overlap(SQ24, tuple("aba"), tuple("adada")) == ("a",)
    # distinct boundaries s,t: overlap is (t, a_{s,t})
    u = tuple("ststs")  # s-word in dihedral4
    v = tuple("tstst")
    assert forced_overlap(D4, u, v) == ("t", "s", "t", "s")


def test_check_R_conditions():
    # (s,s) pairs always chain
    assert check_R_conditions(SQ24, [("a", "a"), ("a", "a")])
    # same boundary, different flanking blocks: allowed
    assert check_R_conditions(SQ24, [tuple("aba"), tuple("adada")])
    # same boundary, same flanking block: the junction spawns a third factor
    assert not check_R_conditions(SQ24, [tuple("aba"), tuple("aba")])
    assert not check_R_conditions(SQ24, [tuple("adada"), tuple("adada")])
    # distinct boundaries need the full block overlap on both sides
    assert check_R_conditions(D4, [tuple("ststs"), tuple("tstst")])
    assert not check_R_conditions(D4, [("s", "s"), ("t", "t")])


def test_check_R_conditions_rejects_non_forbidden_input():
    with pytest.raises(ValueError):
        check_R_conditions(D4, [tuple("stst")])


def test_same_flank_pair_really_is_ambiguous():
    # the amalgamation of aba with aba holds a third forbidden factor
    w = amalgamate(tuple("aba"), ("a",), tuple("aba"))
    occs = forbidden_occurrences(SQ24, w)
    assert len(occs) > 2


def test_chain_from_sequence():
    ch = chain_from_sequence(SQ24, [tuple("aba"), tuple("adada")])
    assert ch.word == tuple("abadada")
    assert ch.overlaps == (("a",),)
    assert ch.positions == (0, 2)
    assert ch.rank == 2 and ch.length == 7


def test_chain_from_sequence_rejects_bad_pairs():
    with pytest.raises(ValueError):
        chain_from_sequence(SQ24, [tuple("aba"), tuple("aba")])


def test_rank1_chain_is_the_word_itself():
    ch = chain_from_sequence(D4, [tuple("ststs")])
    assert ch.word == tuple("ststs")
    assert ch.positions == (0,)


def test_dihedral4_chain_table():
    table = enumerate_rigid_chains(D4, 12, 4)
    want = {
        1: {2: 2, 5: 2},
        2: {3: 2, 6: 6},
        3: {4: 2, 7: 10, 10: 2},
        4: {5: 2, 8: 14, 11: 10},
    }
    got = {
        m: {n: table.q[m][n] for n in range(13) if table.q[m][n]}
        for m in range(1, 5)
    }
    assert got == want


def test_dihedral4_recount_agrees():
    a = enumerate_rigid_chains(D4, 12, 4)
    b = enumerate_chains_by_definition(D4, 12, 4)
    assert a.q == b.q


def test_squares24_chain_table_short():
    table = enumerate_rigid_chains(SQ24, 8, 3)
    want = {
        1: {2: 8, 3: 8, 5: 8, 6: 16, 7: 8},
        2: {3: 8, 4: 24, 6: 24, 7: 80, 8: 56},
        3: {4: 8, 5: 40, 6: 8, 7: 40, 8: 208},
    }
    got = {
        m: {n: table.q[m][n] for n in range(9) if table.q[m][n]}
        for m in range(1, 4)
    }
    assert got == want


@pytest.mark.parametrize("name", ["squares24", "octagon24", "squares44", "octagon44"])
def test_recount_agrees_on_eight_generator_systems(name):
    sys_ = EvenSystem(load_corpus(name))
    a = enumerate_rigid_chains(sys_, 9, 3)
    b = enumerate_chains_by_definition(sys_, 9, 3)
    assert a.q == b.q


def test_counting_dihedral4():
    assert count_geodesics_even(D4, 8) == [1, 2, 2, 2, 2, 0, 0, 0, 0]
    assert growth_series_even(D4) == series((1, 2, 2, 2, 2), (1,))


def test_geodesics_by_enumeration_dihedral4():
    # the order-8 dihedral group: exactly the alternating words survive
    for n in range(6):
        got = [w for w in itertools.product("st", repeat=n) if is_geodesic(D4, w)]
        want = [
            w
            for w in itertools.product("st", repeat=n)
            if all(w[i] != w[i + 1] for i in range(n - 1)) and n <= 4
        ]
        assert got == want


def test_geodesic_prefix_closed():
    for w in itertools.product(SQ24.generators[:4], repeat=5):
        if is_geodesic(SQ24, w):
            assert is_geodesic(SQ24, w[:-1])


@pytest.mark.parametrize("name", ["c6", "c8", "two_c4", "cube", "petersen", "k33"])
def test_scanner_equals_clique_automaton_when_right_angled(name):
    assert scanner_matches_clique_automaton(EvenSystem(load_corpus(name)))


def test_even_counts_equal_racg_counts_on_c6():
    g = load_corpus("c6")
    assert count_geodesics_even(EvenSystem(g), 10) == geodesic_counts_racg(g, 10)


def test_c6_scanner_size():
    assert EvenSystem(load_corpus("c6")).scanner.n_states == 20


def test_compare_squares_vs_octagon():
    rep = compare_systems(load_corpus("squares24"), load_corpus("octagon24"), 8, 8, 3)
    assert rep.hypotheses_hold
    assert rep.stars_isomorphic
    assert rep.counts[0] == rep.counts[1]
    assert rep.first_divergence is None
    assert rep.series_equal
    assert rational_equal(rep.series[0], rep.series[1])
    assert rep.chains_equal
    assert rep.pipelines == ("scanner", "scanner")


def test_compare_c6_vs_k3k3():
    rep = compare_systems(load_corpus("c6"), load_corpus("k3k3"), 6)
    assert not rep.hypotheses_hold  # stars differ (triangle vs no triangle)
    assert rep.first_divergence == 5
    assert rep.counts[0][5] == 2874 and rep.counts[1][5] == 2898
    assert not rep.series_equal
    assert rep.chains is None  # k3k3 is not triangle-free
    assert rep.pipelines == ("scanner", "clique-automaton")


def test_compare_c8_vs_two_c4():
    rep = compare_systems(load_corpus("c8"), load_corpus("two_c4"), 10)
    assert rep.hypotheses_hold
    assert rep.counts[0] == rep.counts[1]
    assert rep.series_equal and rep.chains_equal
