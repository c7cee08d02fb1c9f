"""End-to-end acceptance checks.

Each test freezes a headline result of the library — closed-form series,
exact expansions, identity sweeps, chain tables, cross-pipeline and
automaton-vs-oracle agreement — in exact integer arithmetic with no
tolerances anywhere.
"""

import importlib.util
import pathlib

import pytest

from coxgrowth.algebra import expand, rational_equal, series
from coxgrowth.coxgraph import (
    enumerate_cliques,
    is_triangle_free,
    klink_f_polynomials,
    link_regularity,
    load_corpus,
)
from coxgrowth.evencox import (
    EvenSystem,
    compare_systems,
    count_geodesics_even,
    forbidden_words,
)
from coxgrowth.oracle import oracle_counts, oracle_counts_raag
from coxgrowth.racg import (
    build_dfa,
    deg_j,
    formula_regular_trianglefree,
    geodesic_counts_racg,
    growth_series_raag,
    growth_series_racg,
    state_size,
    suffix_series_check,
    uniform_transition_counts,
)

LINK_REGULAR = [
    "c6", "c8", "two_c4", "k3k3", "petersen", "cube", "k33",
    "hexagon", "hexagon_double", "c4", "k2", "k1",
]

ALL_CORPUS = [
    "c4", "c6", "c8", "cube", "dihedral4", "hexagon", "hexagon_double",
    "k1", "k2", "k33", "k3k3", "octagon24", "octagon44", "p3",
    "petersen", "squares24", "squares44", "two_c4",
]


# 1. hexagon Coxeter group: closed form, expansion, oracle

def test_hexagon_racg_series_and_counts():
    g = load_corpus("c6")
    assert growth_series_racg(g) == series((1, 1, 2), (1, -5, 2))
    assert expand(growth_series_racg(g), 5) == [1, 6, 30, 138, 630, 2874]
    assert oracle_counts(g, 5) == [1, 6, 30, 138, 630, 2874]


# 2. two-triangles Coxeter group: same start as the hexagon, splits at n=5

def test_two_triangles_series_counts_and_divergence():
    g = load_corpus("k3k3")
    assert growth_series_racg(g) == series((1, 3, 6, 6), (1, -3, -6, -6))
    assert expand(growth_series_racg(g), 5) == [1, 6, 30, 138, 630, 2898]
    assert oracle_counts(g, 5) == [1, 6, 30, 138, 630, 2898]
    rep = compare_systems(load_corpus("c6"), g, 5)
    assert rep.first_divergence == 5
    assert rep.counts[0][5] == 2874 and rep.counts[1][5] == 2898


# 3. octagon and two disjoint squares share one series

def test_octagon_equals_two_squares():
    a = growth_series_racg(load_corpus("c8"))
    b = growth_series_racg(load_corpus("two_c4"))
    assert rational_equal(a, b)
    f = formula_regular_trianglefree(8, 2)
    assert f == series((1, 1, 2), (1, -7, 2))
    assert rational_equal(a, f) and rational_equal(b, f)


# 4. closed formula == automaton series on the regular triangle-free corpus

@pytest.mark.parametrize(
    "name,n,l",
    [
        ("c6", 6, 2), ("c8", 8, 2), ("two_c4", 8, 2),
        ("petersen", 10, 3), ("cube", 8, 3), ("k33", 6, 3),
    ],
)
def test_closed_formula_matches_automaton(name, n, l):
    assert rational_equal(
        growth_series_racg(load_corpus(name)),
        formula_regular_trianglefree(n, l),
    )


# 5. suffix-sum identities hold coefficientwise to n = 10

@pytest.mark.parametrize("name", ["c6", "c8", "petersen"])
def test_suffix_identities_to_ten(name):
    rep = suffix_series_check(load_corpus(name), 10)
    assert rep.all_pass
    assert set(rep.identities) == {
        "single_letter_sum", "adjacent_pair_sum", "triple_reduction",
    }
    assert all(rep.identities.values())


# 6. transition-degree uniformity, exhaustively on link-regular graphs

@pytest.mark.parametrize("name", LINK_REGULAR)
def test_transition_degrees_uniform(name):
    g = load_corpus(name)
    assert link_regularity(g).is_link_regular
    for size, cliques in enumerate_cliques(g).items():
        for j in range(size + 1):
            assert len({deg_j(g, sigma, j) for sigma in cliques}) == 1
    dfa = build_dfa(g)
    table = uniform_transition_counts(g)
    assert table is not None
    for st, nm in enumerate(dfa.state_names):
        if st == dfa.fail:
            continue
        sigma = frozenset() if nm == "" else frozenset(nm.split(","))
        outs = {}
        for i in range(len(dfa.alphabet)):
            t = dfa.delta[st][i]
            if t != dfa.fail:
                j = state_size(dfa.state_names[t]) - 1
                outs[j] = outs.get(j, 0) + 1
        for j, cnt in outs.items():
            assert cnt == deg_j(g, sigma, j)
            assert table[(j + 1, len(sigma))] == cnt


# 7. links of equal-size cliques share one f-polynomial iff link-regular

@pytest.mark.parametrize("name", LINK_REGULAR)
def test_klink_polynomials_singleton(name):
    polys = klink_f_polynomials(load_corpus(name))
    assert all(len(v) == 1 for v in polys.values())


def test_klink_polynomials_split_on_path():
    polys = klink_f_polynomials(load_corpus("p3"))
    assert any(len(v) > 1 for v in polys.values())


# 8. Artin counts through the doubled graph match the sign-aware oracle

@pytest.mark.parametrize("name", ["k1", "k2", "p3", "c4", "hexagon"])
def test_artin_series_matches_oracle(name):
    g = load_corpus(name)
    assert expand(growth_series_raag(g), 8) == oracle_counts_raag(g, 8)


# 9. scanner pipeline == clique-automaton pipeline on all-labels-2 input

def test_even_and_clique_pipelines_agree_to_fourteen():
    names = [
        n for n in ALL_CORPUS
        if load_corpus(n).is_right_angled()
        and is_triangle_free(load_corpus(n))
    ]
    assert len(names) >= 10
    for name in names:
        g = load_corpus(name)
        assert count_geodesics_even(EvenSystem(g), 14) == \
            geodesic_counts_racg(g, 14)


# 10. the order-8 dihedral group: five geodesic counts, then zeros

def test_dihedral4_counts_and_forbidden_set():
    sys_ = EvenSystem(load_corpus("dihedral4"))
    assert count_geodesics_even(sys_, 12) == [1, 2, 2, 2, 2] + [0] * 8
    assert set(forbidden_words(sys_, 12)) == {
        ("s", "s"), ("t", "t"),
        ("s", "t", "s", "t", "s"), ("t", "s", "t", "s", "t"),
    }


# 11. squares vs octagon patterns: equal counts, series, chain tables

SQ24_CHAINS = {
    1: {2: 8, 3: 8, 5: 8, 6: 16, 7: 8, 9: 8, 10: 16, 11: 8},
    2: {3: 8, 4: 24, 6: 24, 7: 80, 8: 56, 10: 56, 11: 144, 12: 88},
    3: {4: 8, 5: 40, 6: 8, 7: 40, 8: 208, 9: 216, 10: 24, 11: 216, 12: 672},
    4: {5: 8, 6: 56, 7: 40, 8: 56, 9: 400, 10: 616, 11: 184, 12: 616},
}

SQ44_CHAINS = {
    1: {2: 8, 5: 16, 8: 16, 11: 16},
    2: {3: 8, 6: 48, 9: 80, 12: 112},
    3: {4: 8, 7: 80, 10: 224},
    4: {5: 8, 8: 112, 11: 480},
}


def _rows(entries):
    rows = [tuple([0] * 13)]
    for rank in range(1, 5):
        row = [0] * 13
        for length, v in entries[rank].items():
            row[length] = v
        rows.append(tuple(row))
    return tuple(rows)


@pytest.mark.parametrize(
    "pair,chains",
    [
        (("squares24", "octagon24"), SQ24_CHAINS),
        (("squares44", "octagon44"), SQ44_CHAINS),
    ],
)
def test_squares_octagon_same_growth_and_chains(pair, chains):
    rep = compare_systems(
        load_corpus(pair[0]), load_corpus(pair[1]), 12,
        max_len=12, max_rank=4,
    )
    assert rep.hypotheses_hold
    assert rep.counts_equal and rep.first_divergence is None
    assert rep.series_equal
    assert rep.chains_equal
    expected = _rows(chains)
    assert rep.chains[0].q == expected
    assert rep.chains[1].q == expected


# 12. automaton counts == enumeration-oracle counts across the corpus

DEFAULT_DEPTHS = [
    ("c4", 10), ("c6", 10), ("c8", 10), ("cube", 10), ("hexagon", 10),
    ("k1", 10), ("k2", 10), ("k33", 10), ("k3k3", 10), ("p3", 10),
    ("two_c4", 10), ("petersen", 10), ("hexagon_double", 9),
    ("dihedral4", 12), ("squares24", 9), ("octagon24", 9),
    ("squares44", 9), ("octagon44", 9),
]

DEEP_DEPTHS = [
    ("c8", 12), ("two_c4", 12), ("hexagon_double", 10),
    ("squares24", 10), ("octagon24", 10),
    ("squares44", 10), ("octagon44", 10),
]


def _automaton_counts(g, n):
    if is_triangle_free(g):
        return count_geodesics_even(EvenSystem(g), n)
    return geodesic_counts_racg(g, n)


@pytest.mark.parametrize("name,depth", DEFAULT_DEPTHS)
def test_oracle_agrees_with_automaton(name, depth):
    g = load_corpus(name)
    assert _automaton_counts(g, depth) == oracle_counts(g, depth)


@pytest.mark.slow
@pytest.mark.parametrize("name,depth", DEEP_DEPTHS)
def test_oracle_agrees_with_automaton_deep(name, depth):
    g = load_corpus(name)
    assert _automaton_counts(g, depth) == oracle_counts(g, depth)


# 13. the random-case law suites run at full width (>= 1000 cases each)

def test_property_suites_run_at_least_1000_cases():
    path = pathlib.Path(__file__).with_name("test_properties.py")
    modspec = importlib.util.spec_from_file_location("props", path)
    mod = importlib.util.module_from_spec(modspec)
    modspec.loader.exec_module(mod)
    sampled = [
        mod.test_braid_moves_preserve_length_and_abelianization,
        mod.test_appending_a_letter_moves_length_by_one,
        mod.test_star_alphabet_geodesics_stay_geodesic,
        mod.test_prefix_closure_and_scanner_agreement,
    ]
    for f in sampled:
        assert f._hypothesis_internal_use_settings.max_examples >= 1000
    # the enumeration suite asserts its own case count when it runs
    assert callable(mod.test_two_sided_extension_law_by_enumeration)
