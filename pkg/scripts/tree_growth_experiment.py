#!/usr/bin/env python3
"""Survey geodesic growth over all trees with up to --max-vertices vertices.

For every isomorphism class of trees, build the right-angled Coxeter
group on the tree (every edge a commuting pair) and compute its geodesic
growth series exactly.  The open question this probes: do non-isomorphic
trees ever share a geodesic growth series?  The script groups trees by
series and prints any collisions with full edge lists.
"""

import argparse
import sys
from collections import defaultdict

from networkx.generators.nonisomorphic_trees import nonisomorphic_trees

from coxgrowth.algebra import expand
from coxgrowth.coxgraph import parse_graph
from coxgrowth.racg import growth_series_racg


def tree_to_graph(edges, n, index):
    lines = [f"vertex v{i}" for i in range(n)]
    lines += [f"edge v{a} v{b}" for a, b in sorted(map(sorted, edges))]
    return parse_graph("\n".join(lines), name=f"tree{n}_{index}")


def all_trees(max_vertices):
    yield 1, 0, tree_to_graph([], 1, 0)
    for n in range(2, max_vertices + 1):
        for i, t in enumerate(nonisomorphic_trees(n)):
            yield n, i, tree_to_graph(t.edges, n, i)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=9)
    ap.add_argument(
        "--terms", type=int, default=8,
        help="how many coefficients to display per series",
    )
    args = ap.parse_args(argv)

    by_series = defaultdict(list)
    total = 0
    for n, i, g in all_trees(args.max_vertices):
        rs = growth_series_racg(g)
        key = (rs.num.coeffs, rs.den.coeffs)
        by_series[key].append((n, i, g))
        total += 1

    print(f"trees with <= {args.max_vertices} vertices: {total}")
    print(f"distinct geodesic growth series: {len(by_series)}")
    collisions = {k: v for k, v in by_series.items() if len(v) > 1}
    if not collisions:
        print("no two trees share a series: geodesic growth separates")
        print("all trees at this scale")
        return 0

    print(f"\nseries shared by more than one tree: {len(collisions)}")
    for key, members in sorted(collisions.items()):
        num, den = key
        print(f"\n  num={list(num)} den={list(den)}")
        print(f"  first coefficients: {expand(growth_series_racg(members[0][2]), args.terms)}")
        for n, i, g in members:
            edges = [(u, v) for u, v, _ in g.edges]
            print(f"    {g.name}: {n} vertices, edges {edges}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
