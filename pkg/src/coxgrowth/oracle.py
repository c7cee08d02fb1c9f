"""Independent geodesic ground truth via Tits braid moves.

Everything here deliberately avoids the automaton pipelines: geodesy is
decided by closing a word under braid moves (replace an alternating
(s,t)-factor of length m_{s,t} by the swapped alternation) and looking
for an adjacent cancelling pair, and counts come from prefix-pruned
exhaustive enumeration.  Agreement between these numbers and the
automata is the main end-to-end check of the whole package.

Budgets cap the explored class size per word.  Exhaustion raises
BudgetExhaustedError — never a silent wrong answer — since a completed
closure is required to certify a word geodesic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .coxgraph import CoxeterGraph
from .evencox import EvenSystem

Word = tuple[str, ...]

DEFAULT_BUDGET = 200_000


class BudgetExhaustedError(RuntimeError):
    """A braid class outgrew its exploration budget before the answer
    was decided; enlarge the budget or shrink the word length."""


def _graph_of(sys: EvenSystem | CoxeterGraph) -> CoxeterGraph:
    return sys.graph if isinstance(sys, EvenSystem) else sys


def _coxeter_tables(g: CoxeterGraph):
    """(alphabet, flat m-table, cancel_of) for the Coxeter generators."""
    letters = g.vertices
    k = len(letters)
    mtab = np.zeros(k * k, dtype=np.int64)
    for i, u in enumerate(letters):
        for j, v in enumerate(letters):
            if i != j:
                mtab[i * k + j] = g.label(u, v)
    cancel_of = np.arange(k, dtype=np.int64)
    return letters, mtab, cancel_of


def _artin_tables(g: CoxeterGraph):
    """(alphabet, flat m-table, cancel_of) over {v, v^-1}: commutations
    only (m=2 for adjacent underlying vertices), cancellation pairs the
    two signs of a vertex."""
    if not g.is_right_angled():
        raise ValueError("Artin oracle needs an all-labels-2 graph")
    letters = tuple(v for u in g.vertices for v in (u, u + "^-1"))
    k = len(letters)
    mtab = np.zeros(k * k, dtype=np.int64)
    for i in range(k):
        for j in range(k):
            if i // 2 != j // 2 and g.label(
                g.vertices[i // 2], g.vertices[j // 2]
            ):
                mtab[i * k + j] = 2
    cancel_of = np.array([i ^ 1 for i in range(k)], dtype=np.int64)
    return letters, mtab, cancel_of


def _scanback_masks(mtab, cancel_of, k):
    cancel = np.zeros(k, dtype=np.int64)
    commute = np.zeros(k, dtype=np.int64)
    for y in range(k):
        cancel[y] = 1 << int(cancel_of[y])
        for x in range(k):
            if mtab[y * k + x] == 2 and x != int(cancel_of[y]):
                commute[y] |= 1 << x
    return cancel, commute


@dataclass(frozen=True)
class BraidClass:
    """The words reachable from seed by braid moves (possibly truncated
    at the first reducibility witness; complete for geodesic seeds)."""

    seed: Word
    visited: frozenset[Word]
    reducible: bool


def _encode(w, letters) -> list[int]:
    index = {x: i for i, x in enumerate(letters)}
    out = []
    for x in w:
        if x not in index:
            raise ValueError(f"unknown letter {x!r}")
        out.append(index[x])
    return out


def braid_class(
    sys: EvenSystem | CoxeterGraph, w, budget: int = DEFAULT_BUDGET
) -> BraidClass:
    g = _graph_of(sys)
    letters, mtab, cancel_of = _coxeter_tables(g)
    coded = _encode(w, letters)
    reducible, cls = _kernels.braid_reachable_py(
        coded, mtab, cancel_of, len(letters), budget
    )
    if cls is None:
        raise BudgetExhaustedError(
            f"braid class of {tuple(w)} exceeded budget {budget}"
        )
    members = frozenset(tuple(letters[i] for i in word) for word in cls)
    return BraidClass(tuple(w), members, reducible)


def oracle_is_geodesic(
    sys: EvenSystem | CoxeterGraph, w, budget: int = DEFAULT_BUDGET
) -> bool:
    return not braid_class(sys, w, budget).reducible


def _run_counts(mtab, cancel_of, k, n, budget, method: str) -> list[int]:
    if method not in ("auto", "braid", "scanback"):
        raise ValueError(f"unknown oracle method {method!r}")
    right_angled = all(
        mtab[i * k + j] in (0, 2) for i in range(k) for j in range(k)
    )
    if method == "scanback" and not right_angled:
        raise ValueError("scan-back path needs all labels 2")
    if method == "auto":
        method = "scanback" if right_angled else "braid"
    if method == "scanback":
        cancel, commute = _scanback_masks(mtab, cancel_of, k)
        return [int(c) for c in _kernels.scanback_counts(cancel, commute, k, n)]
    if k > _kernels.MAX_PACKED_ALPHABET or n > _kernels.MAX_PACKED_LETTERS:
        raise ValueError("braid path packs words: needs ≤16 letters and n ≤ 16")
    counts, status = _kernels.braid_counts(mtab, cancel_of, k, n, budget)
    if status != 0:
        raise BudgetExhaustedError(
            f"a braid class exceeded budget {budget} during enumeration"
        )
    return [int(c) for c in counts]


def oracle_counts(
    sys: EvenSystem | CoxeterGraph,
    n: int,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
) -> list[int]:
    """Exact geodesic counts for lengths 0..n by exhaustive enumeration
    (prefixes of geodesics are geodesic, so the search tree is exactly
    the geodesic words)."""
    g = _graph_of(sys)
    letters, mtab, cancel_of = _coxeter_tables(g)
    return _run_counts(mtab, cancel_of, len(letters), n, budget, method)


def oracle_counts_raag(
    g: CoxeterGraph,
    n: int,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
) -> list[int]:
    """Exact geodesic counts for the right-angled Artin group on g,
    over the alphabet {v, v^-1}: a word is non-geodesic iff commutation
    moves expose an adjacent inverse pair."""
    letters, mtab, cancel_of = _artin_tables(g)
    return _run_counts(mtab, cancel_of, len(letters), n, budget, method)
