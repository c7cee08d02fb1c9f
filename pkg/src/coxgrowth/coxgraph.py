"""Labelled graphs defining right-angled / even Coxeter presentations.

A graph has named vertices and edges carrying even labels m >= 2: an
edge {u, v} with label m imposes the relation (uv)^(m/2) = (vu)^(m/2)
of dihedral type, label 2 meaning u and v commute.  A missing edge
means the pair generates an infinite dihedral group (no relation).
Right-angled graphs are those whose labels are all 2.

The text format is line based::

    # comment
    vertex a
    vertex b
    edge a b 4      # label optional, defaults to 2

Vertex order is declaration order and is preserved everywhere (clique
enumeration, automaton states, reports), so runs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path
from typing import Iterable, Iterator

from .algebra import IntPolynomial

Clique = frozenset  # cliques are frozensets of vertex names


class GraphParseError(Exception):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class CoxeterGraph:
    """Vertices in declaration order plus even-labelled edges."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]  # (u, v, m) with u before v
    name: str = "graph"

    index: dict[str, int] = field(init=False, repr=False)
    adj: dict[str, set[str]] = field(init=False, repr=False)
    labels: dict[frozenset, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        self.adj = {v: set() for v in self.vertices}
        self.labels = {}
        for u, v, m in self.edges:
            if u not in self.index or v not in self.index:
                raise ValueError(f"edge on unknown vertex: {u} {v}")
            if u == v:
                raise ValueError(f"self-loop on {u}")
            if m < 2 or m % 2 != 0:
                raise ValueError(f"edge label must be even and >= 2, got {m}")
            key = frozenset((u, v))
            if key in self.labels:
                raise ValueError(f"duplicate edge {u} {v}")
            self.labels[key] = m
            self.adj[u].add(v)
            self.adj[v].add(u)

    def label(self, u: str, v: str) -> int:
        """Edge label of {u, v}, or 0 when there is no edge."""
        return self.labels.get(frozenset((u, v)), 0)

    def is_right_angled(self) -> bool:
        return all(m == 2 for _, _, m in self.edges)

    def sort_key(self, vs: Iterable[str]) -> tuple[int, ...]:
        return tuple(sorted(self.index[v] for v in vs))


def parse_graph(text: str, name: str = "graph") -> CoxeterGraph:
    """Parse the line-based format; report errors with 1-based line numbers."""
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str, int]] = []
    edge_keys: set[frozenset] = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphParseError("expected: vertex <name>", ln)
            v = parts[1]
            if v in seen:
                raise GraphParseError(f"vertex {v!r} declared twice", ln)
            seen.add(v)
            vertices.append(v)
        elif parts[0] == "edge":
            if len(parts) not in (3, 4):
                raise GraphParseError("expected: edge <u> <v> [label]", ln)
            u, v = parts[1], parts[2]
            if u not in seen:
                raise GraphParseError(f"unknown vertex {u!r}", ln)
            if v not in seen:
                raise GraphParseError(f"unknown vertex {v!r}", ln)
            if u == v:
                raise GraphParseError(f"self-loop on {u!r}", ln)
            m = 2
            if len(parts) == 4:
                try:
                    m = int(parts[3])
                except ValueError:
                    raise GraphParseError(f"label {parts[3]!r} is not an integer", ln)
                if m < 2:
                    raise GraphParseError(
                        f"label {m} < 2 (omit the edge for an unrelated pair)", ln
                    )
                if m % 2 != 0:
                    raise GraphParseError(f"odd label {m} not allowed", ln)
            key = frozenset((u, v))
            if key in edge_keys:
                raise GraphParseError(f"duplicate edge {u} {v}", ln)
            edge_keys.add(key)
            edges.append((u, v, m))
        else:
            raise GraphParseError(f"unknown directive {parts[0]!r}", ln)
    return CoxeterGraph(tuple(vertices), tuple(edges), name=name)


def load_graph(path: str | Path) -> CoxeterGraph:
    p = Path(path)
    return parse_graph(p.read_text(), name=p.stem)


def corpus_path(name: str) -> Path:
    """Path of a bundled corpus graph (name without the .graph suffix)."""
    from importlib import resources

    p = Path(str(resources.files("coxgrowth") / "corpus" / f"{name}.graph"))
    if not p.exists():
        raise FileNotFoundError(f"no corpus graph named {name!r}")
    return p


def load_corpus(name: str) -> CoxeterGraph:
    return load_graph(corpus_path(name))


def link(g: CoxeterGraph, sigma: Iterable[str]) -> frozenset:
    """Vertices adjacent to every vertex of sigma (excludes sigma itself)."""
    sigma = frozenset(sigma)
    out = set(g.vertices) - sigma
    for v in sigma:
        out &= g.adj[v]
    return frozenset(out)


def star(g: CoxeterGraph, sigma: Iterable[str]) -> frozenset:
    sigma = frozenset(sigma)
    return link(g, sigma) | sigma


def enumerate_cliques(g: CoxeterGraph) -> dict[int, list[Clique]]:
    """All nonempty cliques grouped by size.

    Recursive extension in vertex order: each clique is extended only by
    strictly later vertices adjacent to all current members, so every
    clique is produced exactly once and the per-size lists come out in a
    fixed canonical order.
    """
    by_size: dict[int, list[Clique]] = {}
    order = g.vertices

    def grow(members: list[str], candidates: list[str]) -> None:
        if members:
            by_size.setdefault(len(members), []).append(frozenset(members))
        for i, v in enumerate(candidates):
            nxt = [w for w in candidates[i + 1 :] if w in g.adj[v]]
            grow(members + [v], nxt)

    grow([], list(order))
    return by_size


def all_cliques(g: CoxeterGraph) -> list[Clique]:
    out: list[Clique] = []
    by_size = enumerate_cliques(g)
    for size in sorted(by_size):
        out.extend(by_size[size])
    return out


def f_polynomial(g: CoxeterGraph) -> IntPolynomial:
    """1 + (#vertices) t + (#edges) t^2 + (#triangles) t^3 + ..."""
    by_size = enumerate_cliques(g)
    top = max(by_size) if by_size else 0
    return IntPolynomial(tuple([1] + [len(by_size.get(i, ())) for i in range(1, top + 1)]))


def is_triangle_free(g: CoxeterGraph) -> bool:
    return 3 not in enumerate_cliques(g)


@dataclass(frozen=True)
class RegularityReport:
    """Whether |link| is a function of clique size alone.

    link_sizes maps clique size -> the common link size (only meaningful
    when regular); witness is a pair of same-size cliques with different
    link sizes when not.
    """

    is_link_regular: bool
    link_sizes: dict[int, int] | None
    witness: tuple[Clique, Clique] | None


def link_regularity(g: CoxeterGraph) -> RegularityReport:
    sizes: dict[int, int] = {}
    first: dict[int, Clique] = {}
    for size, cliques in sorted(enumerate_cliques(g).items()):
        for c in cliques:
            ls = len(link(g, c))
            if size not in sizes:
                sizes[size] = ls
                first[size] = c
            elif sizes[size] != ls:
                return RegularityReport(False, None, (first[size], c))
    return RegularityReport(True, sizes, None)


def induced_subgraph(g: CoxeterGraph, keep: Iterable[str], name: str | None = None) -> CoxeterGraph:
    keep = set(keep)
    vs = tuple(v for v in g.vertices if v in keep)
    es = tuple((u, v, m) for u, v, m in g.edges if u in keep and v in keep)
    return CoxeterGraph(vs, es, name=name or f"{g.name}[{len(vs)}]")


def labelled_isomorphic(g1: CoxeterGraph, g2: CoxeterGraph) -> bool:
    """Brute-force label-preserving graph isomorphism for small graphs.

    Prunes by degree and by the multiset of incident edge labels before
    trying vertex bijections.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False

    def profile(g: CoxeterGraph, v: str) -> tuple:
        return tuple(sorted(g.label(v, w) for w in g.adj[v]))

    p1 = sorted(profile(g1, v) for v in g1.vertices)
    p2 = sorted(profile(g2, v) for v in g2.vertices)
    if p1 != p2:
        return False
    for perm in permutations(g2.vertices):
        phi = dict(zip(g1.vertices, perm))
        if all(profile(g1, v) == profile(g2, phi[v]) for v in g1.vertices) and all(
            g2.label(phi[u], phi[v]) == m for u, v, m in g1.edges
        ):
            return True
    return False


@dataclass(frozen=True)
class StarRegularityReport:
    is_star_regular: bool
    witness: tuple[str, str] | None  # vertices with non-isomorphic stars


def star_subgraph(g: CoxeterGraph, v: str) -> CoxeterGraph:
    return induced_subgraph(g, star(g, [v]), name=f"star({v})")


def star_regularity(g: CoxeterGraph) -> StarRegularityReport:
    """All vertex stars isomorphic as labelled graphs?"""
    vs = g.vertices
    if not vs:
        return StarRegularityReport(True, None)
    base = star_subgraph(g, vs[0])
    for v in vs[1:]:
        if not labelled_isomorphic(base, star_subgraph(g, v)):
            return StarRegularityReport(False, (vs[0], v))
    return StarRegularityReport(True, None)


def double(g: CoxeterGraph) -> CoxeterGraph:
    """The doubled graph: two copies of each vertex, no edge between the
    copies, and all four edges between copies of adjacent vertices.

    All labels in the result are 2; the construction is only defined on
    right-angled graphs, where the doubled group shares its Cayley graph
    (as an unlabelled graph) with the Artin group of the original.
    """
    if not g.is_right_angled():
        raise ValueError(f"{g.name}: the double is defined for all-labels-2 graphs")
    vs = tuple(f"{v}.{i}" for v in g.vertices for i in (1, 2))
    es = []
    for u, v, _ in g.edges:
        for i in (1, 2):
            for j in (1, 2):
                es.append((f"{u}.{i}", f"{v}.{j}", 2))
    return CoxeterGraph(vs, tuple(es), name=f"{g.name}.double")


def klink_f_polynomials(g: CoxeterGraph) -> dict[int, tuple[IntPolynomial, ...]]:
    """For each clique size, the distinct f-polynomials of clique links.

    The link of a clique, viewed inside the clique complex, is again a
    clique complex (of the induced graph on the link vertices); its
    f-polynomial refines the plain link size, and the map collects the
    distinct values per clique size.  A single polynomial at every size is
    equivalent to link regularity: the t-coefficient is |Link(sigma)|, and
    conversely a counting induction (double counting (tau, v) incidences
    inside each link) shows link regularity pins every higher coefficient.
    """
    out: dict[int, tuple[IntPolynomial, ...]] = {}
    for size, cliques in sorted(enumerate_cliques(g).items()):
        polys = {f_polynomial(induced_subgraph(g, link(g, c))) for c in cliques}
        out[size] = tuple(sorted(polys, key=lambda p: p.coeffs))
    return out
