"""Exact geodesic-growth computations for right-angled and even Coxeter
systems and right-angled Artin groups, from labelled defining graphs."""

from .algebra import (
    IntPolynomial,
    NoRecurrenceError,
    RationalSeries,
    expand,
    fit_recurrence,
    rational_equal,
    series,
)
from .automata import GeodesicDFA, count_words, find_language_difference, minimize
from .coxgraph import (
    CoxeterGraph,
    GraphParseError,
    corpus_path,
    double,
    f_polynomial,
    is_triangle_free,
    klink_f_polynomials,
    link_regularity,
    load_corpus,
    load_graph,
    parse_graph,
    star_regularity,
)
from .evencox import (
    Chain,
    ChainTable,
    ComparisonReport,
    EvenSystem,
    a_word,
    amalgamate,
    build_scanner,
    chain_from_sequence,
    check_R_conditions,
    compare_systems,
    count_geodesics_even,
    enumerate_chains_by_definition,
    enumerate_rigid_chains,
    forbidden_occurrences,
    forbidden_words,
    growth_series_even,
    is_geodesic,
)
from .oracle import (
    BraidClass,
    BudgetExhaustedError,
    braid_class,
    oracle_counts,
    oracle_counts_raag,
    oracle_is_geodesic,
)
from .racg import (
    SizeProfile,
    SuffixReport,
    build_dfa,
    count_by_state_size,
    deg_j,
    deg_tau,
    formula_regular_trianglefree,
    geodesic_counts_racg,
    growth_series_raag,
    growth_series_racg,
    profile_from_recursion,
    suffix_series_check,
    uniform_transition_counts,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
