"""Triangle-free even Coxeter systems: forbidden-word scanners, geodesic
counting, and rigid chains of forbidden words.

For an even system the geodesic language is a factor-avoidance language:
a word is geodesic iff it contains no factor

    s . a_{t1,s} . a_{t2,s} ... a_{tk,s} . s      (k >= 0, t_i != t_{i+1})

where a_{t,s} is the alternating word (t,s,t,...,t) of length m_{s,t}-1.
(k = 0 is the bare repetition (s,s).)  This shape comes from the
centralizer of s: it is generated by s together with the a_{t,s}, and in
the triangle-free case those generators satisfy no relations beyond
being commuting-with-s involutions, so geodesic centralizer words are
exactly repetition-free sequences of a-letters.  Triangle-freeness is
required and enforced: with a triangle the a-letters start commuting
with each other and the factor description above breaks down.

Chains amalgamate forbidden words with staggered overlaps; the rigid
ones (no stray forbidden factors) are counted by rank and length in a
ChainTable, which together with |S| determines the geodesic growth.
Two independent enumerations are provided: one over sequences passing
the R1/R2/R3 conditions with their forced overlaps, and one over raw
chain triples with rigidity decided by a direct factor scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .algebra import RationalSeries, fit_recurrence
from .automata import GeodesicDFA, count_words, find_language_difference
from .coxgraph import (
    CoxeterGraph,
    is_triangle_free,
    star_regularity,
    star_subgraph,
    labelled_isomorphic,
)

Word = tuple[str, ...]


class EvenSystem:
    """An even Coxeter system on a triangle-free labelled graph."""

    def __init__(self, graph: CoxeterGraph):
        if not is_triangle_free(graph):
            raise ValueError(
                "even-system machinery requires a triangle-free graph "
                "(with a triangle the centralizer generators stop being free)"
            )
        self.graph = graph

    @property
    def generators(self) -> tuple[str, ...]:
        return self.graph.vertices

    def m(self, s: str, t: str) -> int:
        """Relation order of (st); 0 when the pair is unrelated."""
        return self.graph.label(s, t)

    def link(self, s: str) -> list[str]:
        return [v for v in self.graph.vertices if v in self.graph.adj[s]]

    @cached_property
    def scanner(self) -> GeodesicDFA:
        return build_scanner(self)

    def __repr__(self) -> str:
        return f"EvenSystem({self.graph.name})"


def a_word(sys: EvenSystem, t: str, s: str) -> Word:
    """The alternating word (t,s,t,...,t) of length m_{s,t} - 1."""
    m = sys.m(s, t)
    if m == 0:
        raise ValueError(f"{t} and {s} are not adjacent")
    return tuple(t if i % 2 == 0 else s for i in range(m - 1))


def forbidden_words_for(sys: EvenSystem, s: str, max_len: int) -> Iterator[Word]:
    """Forbidden words with boundary letter s, up to max_len, in a fixed
    depth-first order (shorter continuations explored first per branch)."""

    def rec(word: list[str], last_t: str | None) -> Iterator[Word]:
        if len(word) + 1 <= max_len:
            yield tuple(word + [s])
        for t in sys.link(s):
            if t == last_t:
                continue
            block = a_word(sys, t, s)
            if len(word) + len(block) + 1 <= max_len:
                yield from rec(word + list(block), t)

    yield from rec([s], None)


def forbidden_words(sys: EvenSystem, max_len: int) -> list[Word]:
    out: list[Word] = []
    for s in sys.generators:
        out.extend(forbidden_words_for(sys, s, max_len))
    return out


# --- scanner -----------------------------------------------------------
#
# One nondeterministic thread per potential forbidden-factor start.  A
# thread is either at a block boundary ("b", s, last_t) or inside an
# alternating block ("m", s, t, j) with j letters of a_{t,s} consumed.
# Reading s at a boundary completes a forbidden factor.  The subset
# construction turns the thread sets into a DFA with an absorbing fail
# state; acceptance = no forbidden factor = geodesic.

_FORBIDDEN = "forbidden"


def _advance(sys: EvenSystem, thread: tuple, x: str):
    if thread[0] == "b":
        _, s, last = thread
        if x == s:
            return _FORBIDDEN
        if x in sys.graph.adj[s] and x != last:
            if sys.m(s, x) - 1 == 1:
                return ("b", s, x)
            return ("m", s, x, 1)
        return None
    _, s, t, j = thread
    expected = t if j % 2 == 0 else s
    if x != expected:
        return None
    if j + 1 == sys.m(s, t) - 1:
        return ("b", s, t)
    return ("m", s, t, j + 1)


def _thread_name(thread: tuple) -> str:
    if thread[0] == "b":
        return f"{thread[1]}:{thread[2] or '.'}"
    return f"{thread[1]}:{thread[2]}+{thread[3]}"


def build_scanner(sys: EvenSystem) -> GeodesicDFA:
    alphabet = sys.generators
    start: frozenset = frozenset()
    states: dict[frozenset, int] = {start: 0}
    order: list[frozenset] = [start]
    delta_rows: list[list[int]] = [[]]
    FAIL = -1
    i = 0
    while i < len(order):
        state = order[i]
        row = []
        for x in alphabet:
            threads = set()
            dead = False
            for th in state:
                nxt = _advance(sys, th, x)
                if nxt is _FORBIDDEN:
                    dead = True
                    break
                if nxt is not None:
                    threads.add(nxt)
            if dead:
                row.append(FAIL)
                continue
            threads.add(("b", x, None))
            key = frozenset(threads)
            if key not in states:
                states[key] = len(order)
                order.append(key)
                delta_rows.append([])
            row.append(states[key])
        delta_rows[i] = row
        i += 1
    fail = len(order)
    delta = tuple(
        tuple(fail if t == FAIL else t for t in row) for row in delta_rows
    ) + ((fail,) * len(alphabet),)
    names = tuple(
        "|".join(sorted(_thread_name(th) for th in st)) for st in order
    ) + ("!",)
    return GeodesicDFA(tuple(alphabet), delta, 0, fail, names)


def is_geodesic(sys: EvenSystem, w: Iterable[str]) -> bool:
    w = tuple(w)
    for x in w:
        if x not in sys.graph.index:
            raise ValueError(f"unknown letter {x!r}")
    return sys.scanner.accepts(w)


def count_geodesics_even(sys: EvenSystem, n: int) -> list[int]:
    return count_words(sys.scanner, n)


def growth_series_even(sys: EvenSystem) -> RationalSeries:
    bound = sys.scanner.n_states
    counts = count_words(sys.scanner, 4 * bound)
    return fit_recurrence(counts, bound)


def scanner_matches_clique_automaton(sys: EvenSystem) -> bool:
    """For all-labels-2 systems the scanner must accept exactly the
    clique-automaton language; decided on the product automaton."""
    from .racg import build_dfa

    if not sys.graph.is_right_angled():
        raise ValueError("clique automaton only exists for all-labels-2 graphs")
    return find_language_difference(sys.scanner, build_dfa(sys.graph)) is None


# --- occurrences and chains -------------------------------------------


def amalgamate(w1: Word, z: Word, w2: Word) -> Word:
    """w1 and w2 glued over z (a suffix of w1 and prefix of w2)."""
    w1, z, w2 = tuple(w1), tuple(z), tuple(w2)
    k = len(z)
    if k > len(w1) or k > len(w2):
        raise ValueError("overlap longer than a factor")
    if w1[len(w1) - k :] != z or w2[:k] != z:
        raise ValueError("overlap is not a shared suffix/prefix")
    return w1 + w2[k:]


def occurrence_at(sys: EvenSystem, w: Word, i: int) -> tuple[int, int] | None:
    """The forbidden factor starting at position i, if any, as (start, end).

    The parse is deterministic: after the opening letter s, each next
    letter either closes the factor (s), starts the unique block a_{t,s}
    (t a neighbour, not repeating the previous block), or kills the
    candidate.  Minimality of forbidden words makes the result unique.
    """
    s = w[i]
    j = i + 1
    last: str | None = None
    n = len(w)
    while j < n:
        x = w[j]
        if x == s:
            return (i, j + 1)
        if x in sys.graph.adj[s] and x != last:
            mlen = sys.m(s, x) - 1
            if j + mlen > n:
                return None
            for k in range(mlen):
                if w[j + k] != (x if k % 2 == 0 else s):
                    return None
            last = x
            j += mlen
        else:
            return None
    return None


def forbidden_occurrences(sys: EvenSystem, w: Word) -> list[tuple[int, int]]:
    out = []
    for i in range(len(w)):
        occ = occurrence_at(sys, tuple(w), i)
        if occ is not None:
            out.append(occ)
    return out


def is_forbidden_word(sys: EvenSystem, u: Word) -> bool:
    u = tuple(u)
    return len(u) >= 2 and occurrence_at(sys, u, 0) == (0, len(u))


def check_R_conditions(sys: EvenSystem, seq: Iterable[Word]) -> bool:
    """The staggering conditions on a sequence of forbidden words,
    characterizing exactly the sequences that carry a rigid chain:

    R1  consecutive words with the same boundary letter s: one of them
        is (s,s), or the blocks flanking the junction differ (if the
        last block of u_i and the first block of u_{i+1} are the same
        a_{t,s}, the junction a_{t,s}.s.a_{t,s} contains the stray
        forbidden word t.a_{s,t}.t — but with differing block letters,
        triangle-freeness leaves no room for a third boundary letter);
    R2  distinct boundary letters s,t: the first ends a_{t,s}.s and the
        second starts t.a_{s,t} (the forced full-block overlap);
    R3  the forced overlaps around u_i must fit inside it:
        |z_{i-1}| + |z_i| <= |u_i| (for a t,s,t boundary pattern this
        is the familiar |u_i| > 2 + 2|a_{t,s}| since equality cannot
        occur: a word s.a_{t,s}.a_{t,s}.s would repeat a block).
    """
    seq = [tuple(u) for u in seq]
    for u in seq:
        if not is_forbidden_word(sys, u):
            raise ValueError(f"{u} is not a forbidden word")
    for i in range(len(seq) - 1):
        if not _pair_ok(sys, seq[i], seq[i + 1]):
            return False
    for i in range(1, len(seq) - 1):
        z_prev = forced_overlap(sys, seq[i - 1], seq[i])
        z_next = forced_overlap(sys, seq[i], seq[i + 1])
        if len(z_prev) + len(z_next) > len(seq[i]):
            return False
    return True


def forced_overlap(sys: EvenSystem, u: Word, v: Word) -> Word:
    """The unique admissible overlap between consecutive forbidden words:
    (s) when the boundary letters agree, t.a_{s,t} when they differ."""
    s, t = u[0], v[0]
    if s == t:
        return (s,)
    return (t,) + a_word(sys, s, t)


@dataclass(frozen=True)
class Chain:
    word: Word
    forbidden: tuple[Word, ...]
    overlaps: tuple[Word, ...]
    positions: tuple[int, ...]  # start index of each forbidden word in word

    @property
    def rank(self) -> int:
        return len(self.forbidden)

    @property
    def length(self) -> int:
        return len(self.word)


def _verify_rigid(sys: EvenSystem, chain: Chain) -> bool:
    """Rigidity by direct factor scan: the forbidden factors of the
    chain word are exactly the chain's own words at their staggered
    positions, nothing else.

    (Checking only the rank-(m-1) prefix plus the suffix after the end
    of u_{m-2}, the verbatim inductive phrasing, is strictly weaker: a
    stray occurrence can straddle the seam between the two windows —
    on the m=4 dihedral the fully alternating 10-letter word carries
    such a chain, which would then contradict the forced-overlap
    characterization of rigid chains.  Requiring the occurrence set on
    the whole word matches the staggered picture, under which every
    prefix is automatically rigid as well.)"""
    expected = [
        (p, p + len(u)) for p, u in zip(chain.positions, chain.forbidden)
    ]
    return forbidden_occurrences(sys, chain.word) == expected


def chain_from_sequence(sys: EvenSystem, seq: Iterable[Word]) -> Chain:
    """The unique chain carried by an R-valid sequence of forbidden
    words; overlaps are forced, invariants are checked, and the result
    is verified rigid by the direct factor scan."""
    seq = [tuple(u) for u in seq]
    if not seq:
        raise ValueError("empty sequence")
    if not check_R_conditions(sys, seq):
        raise ValueError("sequence violates the staggering conditions")
    word = seq[0]
    positions = [0]
    overlaps: list[Word] = []
    for i in range(1, len(seq)):
        z = forced_overlap(sys, seq[i - 1], seq[i])
        if i == 1 and z == seq[0]:
            raise ValueError("first overlap swallows the first word")
        if i >= 2 and len(overlaps[-1]) + len(z) > len(seq[i - 1]):
            raise ValueError("overlaps collide inside a forbidden word")
        positions.append(len(word) - len(z))
        word = amalgamate(word, z, seq[i])
        overlaps.append(z)
    chain = Chain(word, tuple(seq), tuple(overlaps), tuple(positions))
    if not _verify_rigid(sys, chain):
        raise ValueError("forced chain failed the rigidity scan")
    return chain


@dataclass(frozen=True)
class ChainTable:
    """q[m][n] = rigid chains of rank m and length n (m <= max_rank,
    n <= max_len); row 0 is padding so indices read naturally."""

    max_rank: int
    max_len: int
    q: tuple[tuple[int, ...], ...]

    def entry(self, rank: int, length: int) -> int:
        return self.q[rank][length]

    def to_json_dict(self) -> dict:
        return {
            "max_rank": self.max_rank,
            "max_len": self.max_len,
            "table": [list(row) for row in self.q],
        }


def enumerate_rigid_chains(
    sys: EvenSystem, max_len: int, max_rank: int
) -> ChainTable:
    """Count rigid chains by depth-first extension of R-valid sequences.

    Every forbidden word of a chain is a factor of the chain word, so
    word lengths are bounded by max_len; each extension grows the chain
    strictly, so the search is finite.
    """
    words = forbidden_words(sys, max_len)
    q = [[0] * (max_len + 1) for _ in range(max_rank + 1)]

    def extend(seq: list[Word], cur_len: int, last_z: int) -> None:
        if len(seq) >= max_rank:
            return
        prev = seq[-1]
        for u in words:
            if not _pair_ok(sys, prev, u):
                continue
            z = forced_overlap(sys, prev, u)
            if len(seq) >= 2 and last_z + len(z) > len(prev):
                continue
            new_len = cur_len + len(u) - len(z)
            if new_len > max_len:
                continue
            q[len(seq) + 1][new_len] += 1
            extend(seq + [u], new_len, len(z))

    for u in words:
        q[1][len(u)] += 1
        extend([u], len(u), 0)
    return ChainTable(max_rank, max_len, tuple(tuple(row) for row in q))


def _pair_ok(sys: EvenSystem, u: Word, v: Word) -> bool:
    s, t = u[0], v[0]
    if s == t:
        # Amalgamating over (s) creates a stray forbidden word exactly
        # when the blocks meeting at the junction have the same letter:
        # a_{t,s}.s.a_{t,s} contains t.a_{s,t}.t.  (s,s) has no blocks.
        return u == (s, s) or v == (s, s) or u[-2] != v[1]
    if sys.m(s, t) == 0:
        return False
    a_ts = a_word(sys, t, s)
    a_st = a_word(sys, s, t)
    return (
        u[len(u) - len(a_ts) - 1 :] == a_ts + (s,)
        and v[: len(a_st) + 1] == (t,) + a_st
    )


def enumerate_chains_by_definition(
    sys: EvenSystem, max_len: int, max_rank: int
) -> ChainTable:
    """Independent recount: enumerate raw chain triples (all admissible
    overlaps, not just the forced ones) and keep those passing the
    direct rigidity scan.  Non-rigid prefixes cannot become rigid, so
    the search prunes on rigidity at every rank.
    """
    words = forbidden_words(sys, max_len)
    q = [[0] * (max_len + 1) for _ in range(max_rank + 1)]

    def overlaps_of(u: Word, v: Word) -> Iterator[Word]:
        for k in range(1, min(len(u), len(v)) + 1):
            if u[len(u) - k :] == v[:k]:
                yield v[:k]

    def extend(chain: Chain, last_z: int) -> None:
        if chain.rank >= max_rank:
            return
        prev = chain.forbidden[-1]
        for v in words:
            for z in overlaps_of(prev, v):
                if chain.rank == 1 and z == prev:
                    continue
                if chain.rank >= 2 and last_z + len(z) > len(prev):
                    continue
                new_len = chain.length + len(v) - len(z)
                if new_len > max_len:
                    continue
                ext = Chain(
                    chain.word + v[len(z) :],
                    chain.forbidden + (v,),
                    chain.overlaps + (z,),
                    chain.positions + (chain.length - len(z),),
                )
                if not _verify_rigid(sys, ext):
                    continue
                q[ext.rank][new_len] += 1
                extend(ext, len(z))

    for u in words:
        q[1][len(u)] += 1
        extend(Chain(u, (u,), (), (0,)), 0)
    return ChainTable(max_rank, max_len, tuple(tuple(row) for row in q))


# --- comparison harness -------------------------------------------------


@dataclass(frozen=True)
class ComparisonReport:
    names: tuple[str, str]
    n_generators: tuple[int, int]
    star_regular: tuple[bool, bool]
    stars_isomorphic: bool | None  # across the two systems; None if moot
    hypotheses_hold: bool
    pipelines: tuple[str, str]
    counts: tuple[tuple[int, ...], tuple[int, ...]]
    first_divergence: int | None
    series: tuple[RationalSeries, RationalSeries]
    series_equal: bool
    chains: tuple[ChainTable, ChainTable] | None
    chains_equal: bool | None

    @property
    def counts_equal(self) -> bool:
        return self.first_divergence is None

    def to_json_dict(self) -> dict:
        return {
            "names": list(self.names),
            "n_generators": list(self.n_generators),
            "star_regular": list(self.star_regular),
            "stars_isomorphic": self.stars_isomorphic,
            "hypotheses_hold": self.hypotheses_hold,
            "pipelines": list(self.pipelines),
            "counts": [list(self.counts[0]), list(self.counts[1])],
            "first_divergence": self.first_divergence,
            "series": [s.to_json_dict() for s in self.series],
            "series_equal": self.series_equal,
            "chains": None
            if self.chains is None
            else [t.to_json_dict() for t in self.chains],
            "chains_equal": self.chains_equal,
        }


def _growth_route(g: CoxeterGraph):
    """(pipeline name, counts function, series function) for a graph:
    the scanner when the even machinery applies, the clique automaton
    for all-labels-2 graphs with triangles."""
    if is_triangle_free(g):
        sys = EvenSystem(g)
        return (
            "scanner",
            lambda n: count_geodesics_even(sys, n),
            lambda: growth_series_even(sys),
            sys,
        )
    if g.is_right_angled():
        from . import racg

        return (
            "clique-automaton",
            lambda n: racg.geodesic_counts_racg(g, n),
            lambda: racg.growth_series_racg(g),
            None,
        )
    raise ValueError(
        f"{g.name}: graph has a triangle and labels above 2; no pipeline applies"
    )


def compare_systems(
    a: EvenSystem | CoxeterGraph,
    b: EvenSystem | CoxeterGraph,
    n: int,
    max_len: int = 12,
    max_rank: int = 4,
) -> ComparisonReport:
    ga = a.graph if isinstance(a, EvenSystem) else a
    gb = b.graph if isinstance(b, EvenSystem) else b
    pa, counts_a, series_a, sys_a = _growth_route(ga)
    pb, counts_b, series_b, sys_b = _growth_route(gb)

    sra = star_regularity(ga).is_star_regular
    srb = star_regularity(gb).is_star_regular
    cross = None
    if ga.vertices and gb.vertices:
        cross = labelled_isomorphic(
            star_subgraph(ga, ga.vertices[0]), star_subgraph(gb, gb.vertices[0])
        )
    hypotheses = (
        sra and srb and len(ga.vertices) == len(gb.vertices) and bool(cross)
    )

    ca, cb = tuple(counts_a(n)), tuple(counts_b(n))
    diverge = next((i for i in range(n + 1) if ca[i] != cb[i]), None)
    ra, rb = series_a(), series_b()

    chains = None
    chains_equal = None
    if sys_a is not None and sys_b is not None:
        ta = enumerate_rigid_chains(sys_a, max_len, max_rank)
        tb = enumerate_rigid_chains(sys_b, max_len, max_rank)
        chains = (ta, tb)
        chains_equal = ta.q == tb.q

    return ComparisonReport(
        (ga.name, gb.name),
        (len(ga.vertices), len(gb.vertices)),
        (sra, srb),
        cross,
        hypotheses,
        (pa, pb),
        (ca, cb),
        diverge,
        (ra, rb),
        ra == rb,
        chains,
        chains_equal,
    )
