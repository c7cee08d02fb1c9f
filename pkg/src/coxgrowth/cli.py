"""Command-line front end.

Subcommands: analyze, growth, compare, chains, oracle, formula.  Output
formats: text (default), json (canonical, byte-deterministic), csv
(n,count rows).  Exit codes: 0 success/equal, 1 usage or parse error,
2 computation mismatch, 3 oracle budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import racg
from .algebra import RationalSeries, expand
from .coxgraph import (
    CoxeterGraph,
    GraphParseError,
    f_polynomial,
    is_triangle_free,
    klink_f_polynomials,
    link_regularity,
    load_graph,
    star_regularity,
)
from .evencox import (
    EvenSystem,
    compare_systems,
    count_geodesics_even,
    enumerate_chains_by_definition,
    enumerate_rigid_chains,
    growth_series_even,
)
from .oracle import BudgetExhaustedError, DEFAULT_BUDGET, oracle_counts, oracle_counts_raag

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    paths: tuple[str, ...]
    terms: int
    max_len: int
    max_rank: int
    kind: str
    format: str
    budget: int
    n: int | None = None
    l: int | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    p = _Parser(prog="coxgrowth", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, paths=1):
        for i in range(paths):
            sp.add_argument(f"path{i if paths > 1 else ''}" if paths > 1 else "path")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sp = sub.add_parser("analyze", help="graph facts: f-polynomial, regularity")
    common(sp)

    sp = sub.add_parser("growth", help="geodesic counts and growth series")
    common(sp)
    sp.add_argument("--kind", choices=("auto", "racg", "raag", "even"), default="auto")
    sp.add_argument("--terms", type=int, default=10)

    sp = sub.add_parser("compare", help="two systems: counts, series, chain tables")
    common(sp, paths=2)
    sp.add_argument("--terms", type=int, default=10)
    sp.add_argument("--max-len", type=int, default=12)
    sp.add_argument("--max-rank", type=int, default=4)

    sp = sub.add_parser("chains", help="rigid chain table of an even system")
    common(sp)
    sp.add_argument("--max-len", type=int, default=12)
    sp.add_argument("--max-rank", type=int, default=4)

    sp = sub.add_parser("oracle", help="exhaustive recount vs automaton pipeline")
    common(sp)
    sp.add_argument("--kind", choices=("auto", "racg", "raag", "even"), default="auto")
    sp.add_argument("--terms", type=int, default=8)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = sub.add_parser("formula", help="l-regular triangle-free closed form")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.add_argument("--terms", type=int, default=10)
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    paths: tuple[str, ...] = ()
    if hasattr(ns, "path"):
        paths = (ns.path,)
    elif hasattr(ns, "path0"):
        paths = (ns.path0, ns.path1)
    return RunConfig(
        command=ns.command,
        paths=paths,
        terms=getattr(ns, "terms", 10),
        max_len=getattr(ns, "max_len", 12),
        max_rank=getattr(ns, "max_rank", 4),
        kind=getattr(ns, "kind", "auto"),
        format=ns.format,
        budget=getattr(ns, "budget", DEFAULT_BUDGET),
        n=getattr(ns, "n", None),
        l=getattr(ns, "l", None),
    )


def _resolve_kind(g: CoxeterGraph, kind: str) -> str:
    if kind == "auto":
        return "racg" if g.is_right_angled() else "even"
    if kind in ("racg", "raag") and not g.is_right_angled():
        raise ValueError(f"{g.name}: labels above 2 forbid kind {kind!r}")
    return kind


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str], csv_rows: list[tuple] | None) -> None:
    if cfg.format == "json":
        sys.stdout.write(
            json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
        )
    elif cfg.format == "csv":
        if csv_rows is None:
            raise ValueError(f"csv output is not defined for {cfg.command!r}")
        for row in csv_rows:
            sys.stdout.write(",".join(str(x) for x in row) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _cmd_analyze(cfg: RunConfig) -> int:
    g = load_graph(cfg.paths[0])
    rep = link_regularity(g)
    srep = star_regularity(g)
    klink = klink_f_polynomials(g)
    payload = {
        "name": g.name,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "right_angled": g.is_right_angled(),
        "triangle_free": is_triangle_free(g),
        "f_polynomial": list(f_polynomial(g).coeffs),
        "link_regular": rep.is_link_regular,
        "link_sizes": {str(k): v for k, v in sorted((rep.link_sizes or {}).items())},
        "link_regularity_witness": (
            None if rep.witness is None else [sorted(s) for s in rep.witness]
        ),
        "star_regular": srep.is_star_regular,
        "klink_f_polynomials": {
            str(size): [list(p.coeffs) for p in polys]
            for size, polys in sorted(klink.items())
        },
        "klink_singletons": all(len(v) == 1 for v in klink.values()),
    }
    lines = [
        f"graph {g.name}: {len(g.vertices)} vertices, {len(g.edges)} edges",
        f"right-angled: {'yes' if payload['right_angled'] else 'no'}",
        f"triangle-free: {'yes' if payload['triangle_free'] else 'no'}",
        f"f-polynomial: {f_polynomial(g).to_str('t')}",
        f"link-regular: {'yes' if rep.is_link_regular else 'no'}"
        + (
            ""
            if rep.witness is None
            else " (witness: {%s} vs {%s})"
            % tuple(",".join(sorted(s)) for s in rep.witness)
        ),
        f"star-regular: {'yes' if srep.is_star_regular else 'no'}",
        "K-link f-polynomials per clique size "
        + ("(one class each):" if payload["klink_singletons"] else "(mixed classes):"),
    ]
    for size, polys in sorted(klink.items()):
        lines.append(
            f"  size {size}: " + "; ".join(p.to_str("t") for p in polys)
        )
    _emit(cfg, payload, lines, None)
    return EXIT_OK


def _growth_data(g: CoxeterGraph, kind: str, n: int):
    """(counts, series, formula_series or None) for the resolved kind."""
    if kind == "racg":
        counts = racg.geodesic_counts_racg(g, n)
        series = racg.growth_series_racg(g)
        formula = None
        degree = racg.regular_degree(g)
        if is_triangle_free(g) and len(g.vertices) >= 4 and degree is not None:
            formula = racg.formula_regular_trianglefree(len(g.vertices), degree)
        return counts, series, formula
    if kind == "raag":
        from .coxgraph import double

        g2 = double(g)
        return racg.geodesic_counts_racg(g2, n), racg.growth_series_raag(g), None
    sys_ = EvenSystem(g)
    return count_geodesics_even(sys_, n), growth_series_even(sys_), None


def _cmd_growth(cfg: RunConfig) -> int:
    g = load_graph(cfg.paths[0])
    kind = _resolve_kind(g, cfg.kind)
    counts, series, formula = _growth_data(g, kind, cfg.terms)
    payload = {
        "name": g.name,
        "kind": kind,
        "terms": cfg.terms,
        "counts": counts,
        "series": series.to_json_dict(),
    }
    lines = [
        f"graph {g.name} ({kind}): geodesic counts 0..{cfg.terms}",
        "counts: " + ",".join(str(c) for c in counts),
        f"series: {series}",
    ]
    code = EXIT_OK
    if formula is not None:
        match = series == formula
        payload["formula"] = formula.to_json_dict()
        payload["formula_match"] = match
        lines.append(f"regular triangle-free closed form: {formula}")
        lines.append(f"formula check: {'MATCH' if match else 'MISMATCH'}")
        if not match:
            code = EXIT_MISMATCH
    csv_rows = [("n", "count")] + [(i, c) for i, c in enumerate(counts)]
    _emit(cfg, payload, lines, csv_rows)
    return code


def _cmd_compare(cfg: RunConfig) -> int:
    a = load_graph(cfg.paths[0])
    b = load_graph(cfg.paths[1])
    rep = compare_systems(a, b, cfg.terms, cfg.max_len, cfg.max_rank)
    payload = rep.to_json_dict()
    verdict = "EQUAL" if rep.counts_equal and rep.series_equal else (
        f"DIFFER at n={rep.first_divergence}"
        if rep.first_divergence is not None
        else "DIFFER (series)"
    )
    lines = [
        f"compare {rep.names[0]} vs {rep.names[1]}: {verdict}",
        f"generators: {rep.n_generators[0]} vs {rep.n_generators[1]}",
        f"star-regular: {rep.star_regular[0]} / {rep.star_regular[1]}; "
        f"stars isomorphic across: {rep.stars_isomorphic}",
        f"hypotheses hold: {rep.hypotheses_hold}",
        f"pipelines: {rep.pipelines[0]} / {rep.pipelines[1]}",
        "counts A: " + ",".join(str(c) for c in rep.counts[0]),
        "counts B: " + ",".join(str(c) for c in rep.counts[1]),
        f"series A: {rep.series[0]}",
        f"series B: {rep.series[1]}",
        f"series equal: {rep.series_equal}",
    ]
    if rep.chains is not None:
        lines.append(f"chain tables equal: {rep.chains_equal}")
    csv_rows = [("n", "count_a", "count_b")] + [
        (i, rep.counts[0][i], rep.counts[1][i]) for i in range(cfg.terms + 1)
    ]
    _emit(cfg, payload, lines, csv_rows)
    ok = rep.counts_equal and rep.series_equal
    if rep.chains is not None:
        ok = ok and bool(rep.chains_equal)
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_chains(cfg: RunConfig) -> int:
    g = load_graph(cfg.paths[0])
    sys_ = EvenSystem(g)
    table = enumerate_rigid_chains(sys_, cfg.max_len, cfg.max_rank)
    recount = enumerate_chains_by_definition(sys_, cfg.max_len, cfg.max_rank)
    ok = table.q == recount.q
    payload = table.to_json_dict()
    payload["name"] = g.name
    payload["recount_matches"] = ok
    lines = [
        f"rigid chains of {g.name} (length <= {cfg.max_len}, rank <= {cfg.max_rank})"
    ]
    for m in range(1, cfg.max_rank + 1):
        row = [
            f"Q[{m}][{n}]={table.q[m][n]}"
            for n in range(cfg.max_len + 1)
            if table.q[m][n]
        ]
        lines.append(f"rank {m}: " + (" ".join(row) if row else "none"))
    lines.append(f"definition-level recount matches: {ok}")
    csv_rows = [("rank", "length", "count")] + [
        (m, n, table.q[m][n])
        for m in range(1, cfg.max_rank + 1)
        for n in range(cfg.max_len + 1)
        if table.q[m][n]
    ]
    _emit(cfg, payload, lines, csv_rows)
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_oracle(cfg: RunConfig) -> int:
    g = load_graph(cfg.paths[0])
    kind = _resolve_kind(g, cfg.kind)
    if kind == "raag":
        got = oracle_counts_raag(g, cfg.terms, budget=cfg.budget)
    else:
        got = oracle_counts(g, cfg.terms, budget=cfg.budget)
    want, _, _ = _growth_data(g, kind, cfg.terms)
    match = got == want
    payload = {
        "name": g.name,
        "kind": kind,
        "terms": cfg.terms,
        "oracle_counts": got,
        "automaton_counts": want,
        "match": match,
    }
    lines = [
        f"graph {g.name} ({kind}): oracle vs automaton to n={cfg.terms}",
        "oracle:    " + ",".join(str(c) for c in got),
        "automaton: " + ",".join(str(c) for c in want),
        "verdict: " + ("MATCH" if match else "MISMATCH"),
    ]
    csv_rows = [("n", "oracle", "automaton")] + [
        (i, got[i], want[i]) for i in range(cfg.terms + 1)
    ]
    _emit(cfg, payload, lines, csv_rows)
    return EXIT_OK if match else EXIT_MISMATCH


def _cmd_formula(cfg: RunConfig) -> int:
    series = racg.formula_regular_trianglefree(cfg.n, cfg.l)
    counts = expand(series, cfg.terms)
    payload = {
        "n": cfg.n,
        "l": cfg.l,
        "series": series.to_json_dict(),
        "counts": counts,
    }
    lines = [
        f"l-regular triangle-free closed form at n={cfg.n}, l={cfg.l}:",
        f"series: {series}",
        "expansion: " + ",".join(str(c) for c in counts),
    ]
    csv_rows = [("n", "count")] + [(i, c) for i, c in enumerate(counts)]
    _emit(cfg, payload, lines, csv_rows)
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "growth": _cmd_growth,
    "compare": _cmd_compare,
    "chains": _cmd_chains,
    "oracle": _cmd_oracle,
    "formula": _cmd_formula,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    cfg = _config(ns)
    try:
        return _COMMANDS[cfg.command](cfg)
    except (GraphParseError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"coxgrowth: error: {exc}\n")
        return EXIT_USAGE
    except BudgetExhaustedError as exc:
        sys.stderr.write(f"coxgrowth: budget exhausted: {exc}\n")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
