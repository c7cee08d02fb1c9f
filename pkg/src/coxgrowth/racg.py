"""Geodesic growth of right-angled Coxeter groups (and Artin groups via
the doubled graph).

The geodesic language of a RACG is recognized by a small DFA whose
non-fail states are the cliques of the defining graph plus the empty
clique as start state: after reading a geodesic word the state is the
set of letters that can currently "see" the end of the word, i.e.
sigma = { v : the word ends with v followed only by neighbours of v }.
Reading v from state sigma goes to {v} | (Star(v) & sigma) if v is not
in sigma, and to the fail state otherwise.  Everything here (counts,
size profiles, series, closed formula, suffix identities) is driven by
that automaton with exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import RationalSeries, expand, fit_recurrence, series
from .automata import GeodesicDFA, count_words
from .coxgraph import (
    CoxeterGraph,
    Clique,
    all_cliques,
    double,
    is_triangle_free,
    link,
)

FAIL_NAME = "!"


def _clique_name(g: CoxeterGraph, c: frozenset) -> str:
    return ",".join(sorted(c, key=g.index.__getitem__))


def state_size(name: str) -> int:
    """Clique size encoded in a DFA state name ('' start, '!' fail)."""
    if name == "" or name == FAIL_NAME:
        return 0
    return name.count(",") + 1


def _require_clique(g: CoxeterGraph, sigma: frozenset) -> None:
    for v in sigma:
        if v not in g.index:
            raise ValueError(f"unknown vertex {v!r}")
    vs = sorted(sigma, key=g.index.__getitem__)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            if v not in g.adj[u]:
                raise ValueError(f"{set(sigma)} is not a clique: {u} !~ {v}")


def build_dfa(g: CoxeterGraph) -> GeodesicDFA:
    """The geodesic automaton: start + one state per clique + fail."""
    if not g.is_right_angled():
        raise ValueError("geodesic automaton defined for right-angled graphs only")
    states: list[frozenset] = [frozenset()] + all_cliques(g)
    pos = {c: i for i, c in enumerate(states)}
    fail = len(states)
    delta = []
    for sigma in states:
        row = []
        for v in g.vertices:
            if v in sigma:
                row.append(fail)
            else:
                target = frozenset({v}) | (sigma & (g.adj[v] | {v}))
                row.append(pos[target])
        delta.append(tuple(row))
    delta.append(tuple([fail] * len(g.vertices)))
    names = tuple(_clique_name(g, c) for c in states) + (FAIL_NAME,)
    return GeodesicDFA(tuple(g.vertices), tuple(delta), 0, fail, names)


def deg_tau(g: CoxeterGraph, sigma: frozenset, tau: frozenset) -> int:
    """|{v outside sigma : Star(v) & sigma == tau}|."""
    sigma, tau = frozenset(sigma), frozenset(tau)
    if not tau <= sigma:
        raise ValueError("tau must be a subset of sigma")
    _require_clique(g, sigma)
    return sum(
        1 for v in g.vertices if v not in sigma and (g.adj[v] & sigma) == tau
    )


def deg_j(g: CoxeterGraph, sigma: frozenset, j: int) -> int:
    """|{v outside sigma : v commutes with exactly j members of sigma}|."""
    sigma = frozenset(sigma)
    if j > len(sigma):
        raise ValueError("j exceeds |sigma|")
    _require_clique(g, sigma)
    return sum(
        1 for v in g.vertices if v not in sigma and len(g.adj[v] & sigma) == j
    )


@dataclass(frozen=True)
class SizeProfile:
    """table[i][m] = geodesic words of length m accepted at a size-i state.

    Row 0 is the start state (only the empty word), so summing a column
    gives the geodesic count of that length.  table[i][i] = i! * (number
    of i-cliques): a word visiting a size-i state at step i spelled the
    clique in some order.
    """

    table: tuple[tuple[int, ...], ...]

    def gamma(self, m: int) -> int:
        return sum(row[m] for row in self.table)

    @property
    def max_size(self) -> int:
        return len(self.table) - 1

    @property
    def max_length(self) -> int:
        return len(self.table[0]) - 1

    def to_json_dict(self) -> list[list[int]]:
        return [list(row) for row in self.table]


def count_by_state_size(dfa: GeodesicDFA, n: int) -> SizeProfile:
    sizes = [state_size(name) for name in dfa.state_names]
    d = max(s for i, s in enumerate(sizes) if i != dfa.fail)
    table = [[0] * (n + 1) for _ in range(d + 1)]
    vec = [0] * dfa.n_states
    vec[dfa.start] = 1
    table[sizes[dfa.start]][0] = 1
    for m in range(1, n + 1):
        nxt = [0] * dfa.n_states
        for s, c in enumerate(vec):
            if c and s != dfa.fail:
                for t in dfa.delta[s]:
                    if t != dfa.fail:
                        nxt[t] += c
        vec = nxt
        for s, c in enumerate(vec):
            if s != dfa.fail:
                table[sizes[s]][m] += c
    return SizeProfile(tuple(tuple(row) for row in table))


def uniform_transition_counts(g: CoxeterGraph) -> dict[tuple[int, int], int] | None:
    """beta[(i, j)] = edges from any size-j state into size-i states,
    when that number is the same for every size-j state; None otherwise.

    For link-regular graphs this is always defined (the per-state count
    from a size-j clique into size-i states is deg_{i-1}, which then
    depends only on j and i), and it turns the size profile into a plain
    linear recursion over sizes.
    """
    dfa = build_dfa(g)
    sizes = [state_size(name) for name in dfa.state_names]
    per_state: dict[int, list[dict[int, int]]] = {}
    for s in range(dfa.n_states):
        if s == dfa.fail:
            continue
        out: dict[int, int] = {}
        for t in dfa.delta[s]:
            if t != dfa.fail:
                out[sizes[t]] = out.get(sizes[t], 0) + 1
        per_state.setdefault(sizes[s], []).append(out)
    beta: dict[tuple[int, int], int] = {}
    d = max(per_state)
    for j, outs in per_state.items():
        for i in range(d + 1):
            vals = {o.get(i, 0) for o in outs}
            if len(vals) != 1:
                return None
            beta[(i, j)] = vals.pop()
    return beta


def profile_from_recursion(g: CoxeterGraph, n: int) -> SizeProfile | None:
    """Recompute the size profile from the aggregated recursion
    B_i(m) = sum_j beta[i][j] B_j(m-1); None when beta is not uniform."""
    beta = uniform_transition_counts(g)
    if beta is None:
        return None
    d = max(i for i, _ in beta)
    table = [[0] * (n + 1) for _ in range(d + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for i in range(d + 1):
            table[i][m] = sum(
                beta.get((i, j), 0) * table[j][m - 1] for j in range(d + 1)
            )
    return SizeProfile(tuple(tuple(row) for row in table))


def geodesic_counts_racg(g: CoxeterGraph, n: int) -> list[int]:
    return count_words(build_dfa(g), n)


def growth_series_racg(g: CoxeterGraph) -> RationalSeries:
    """Counts from the automaton, then an exact recurrence fit bounded by
    the state count, verified against a window of 2*bound extra terms."""
    dfa = build_dfa(g)
    bound = dfa.n_states
    counts = count_words(dfa, 4 * bound)
    return fit_recurrence(counts, bound)


def growth_series_raag(g: CoxeterGraph) -> RationalSeries:
    """Geodesic growth of the Artin group via the doubled graph, whose
    Coxeter group shares the (undirected) Cayley graph."""
    return growth_series_racg(double(g))


def formula_regular_trianglefree(n: int, l: int) -> RationalSeries:
    """Closed form for the RACG on an l-regular triangle-free graph with
    n >= 4 vertices: (1-(l-3)z+2z^2) / (1+(-n-l+3)z+(-2n+2+nl)z^2)."""
    if n < 4:
        raise ValueError("closed formula stated only for n >= 4 vertices")
    if l < 0:
        raise ValueError("degree must be nonnegative")
    return series((1, 3 - l, 2), (1, 3 - n - l, n * l - 2 * n + 2))


def regular_degree(g: CoxeterGraph) -> int | None:
    """Common vertex degree, or None when the graph is not regular."""
    degs = {len(g.adj[v]) for v in g.vertices}
    return degs.pop() if len(degs) == 1 else None


@dataclass(frozen=True)
class SuffixReport:
    """Coefficientwise verification of the suffix-sum identities behind
    the closed formula, all computed from one DFA run classified by the
    last <= 3 letters.

    single_sum[m]  counts geodesics of length m by last letter (any);
    pair_sum[m]    those ending in an ordered adjacent pair;
    triple_sum[m]  those ending in any ordered triple.
    The identities tie these to the growth coefficients:
      single:  single_sum = gamma(m) - [m=0]
      pair:    pair_sum   = gamma(m) - (n-l-1) gamma(m-1) - [m=0] - (l+1)[m=1]
      triple:  triple_sum = (n+l-3) pair_sum(m-1)
                            + (n^2-2n-nl-l^2+2l+1) single_sum(m-2)
    """

    n_vertices: int
    degree: int
    gamma: tuple[int, ...]
    single_sum: tuple[int, ...]
    pair_sum: tuple[int, ...]
    triple_sum: tuple[int, ...]
    identities: dict[str, bool]

    @property
    def all_pass(self) -> bool:
        return all(self.identities.values())


def suffix_series_check(g: CoxeterGraph, n: int) -> SuffixReport:
    if not g.is_right_angled():
        raise ValueError("suffix identities apply to right-angled graphs")
    if not is_triangle_free(g):
        raise ValueError("suffix identities require a triangle-free graph")
    nv = len(g.vertices)
    if nv < 4:
        raise ValueError("need at least 4 vertices")
    l = regular_degree(g)
    if l is None:
        raise ValueError("suffix identities require a regular graph")

    dfa = build_dfa(g)
    adj = g.adj
    # DP over (state, last up-to-3 letters)
    cur: dict[tuple[int, tuple[str, ...]], int] = {(dfa.start, ()): 1}
    single = [0] * (n + 1)
    pair = [0] * (n + 1)
    triple = [0] * (n + 1)
    gamma = [0] * (n + 1)
    gamma[0] = 1
    for m in range(1, n + 1):
        nxt: dict[tuple[int, tuple[str, ...]], int] = {}
        for (s, suf), c in cur.items():
            for i, v in enumerate(dfa.alphabet):
                t = dfa.delta[s][i]
                if t == dfa.fail:
                    continue
                key = (t, (suf + (v,))[-3:])
                nxt[key] = nxt.get(key, 0) + c
        cur = nxt
        for (_, suf), c in cur.items():
            gamma[m] += c
            single[m] += c
            if len(suf) >= 2 and suf[-2] in adj[suf[-1]]:
                pair[m] += c
            if len(suf) >= 3:
                triple[m] += c

    def at(seq: list[int], k: int) -> int:
        return seq[k] if 0 <= k < len(seq) else 0

    c_triple = nv * nv - 2 * nv - nv * l - l * l + 2 * l + 1
    ids = {
        "single_letter_sum": all(
            single[m] == gamma[m] - (1 if m == 0 else 0) for m in range(n + 1)
        ),
        "adjacent_pair_sum": all(
            pair[m]
            == gamma[m]
            - (nv - l - 1) * at(gamma, m - 1)
            - (1 if m == 0 else 0)
            - ((l + 1) if m == 1 else 0)
            for m in range(n + 1)
        ),
        "triple_reduction": all(
            triple[m]
            == (nv + l - 3) * at(pair, m - 1) + c_triple * at(single, m - 2)
            for m in range(n + 1)
        ),
    }
    return SuffixReport(
        nv,
        l,
        tuple(gamma),
        tuple(single),
        tuple(pair),
        tuple(triple),
        ids,
    )
