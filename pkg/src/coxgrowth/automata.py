"""Complete DFAs over generator alphabets, tuned for geodesic languages.

Geodesic languages here are prefix closed, so a DFA needs no accepting
set: every state except the absorbing fail state accepts.  Transitions
are total; walking off the language lands in fail and stays there.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .algebra import CountMatrix, transfer_count


@dataclass(frozen=True)
class GeodesicDFA:
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]  # delta[state][letter index]
    start: int
    fail: int
    state_names: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.delta)
        assert len(self.state_names) == n
        assert 0 <= self.start < n and 0 <= self.fail < n
        assert all(len(row) == len(self.alphabet) for row in self.delta)
        assert all(t == self.fail for t in self.delta[self.fail]), "fail must absorb"

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def letter(self, name: str) -> int:
        return self.alphabet.index(name)

    def step(self, state: int, letter_name: str) -> int:
        return self.delta[state][self.letter(letter_name)]

    def accepts(self, word: Iterable[str]) -> bool:
        s = self.start
        for a in word:
            s = self.delta[s][self.letter(a)]
            if s == self.fail:
                return False
        return True


def to_count_matrix(dfa: GeodesicDFA) -> CountMatrix:
    """Transfer matrix on non-fail states; every surviving state accepts."""
    live = [s for s in range(dfa.n_states) if s != dfa.fail]
    pos = {s: i for i, s in enumerate(live)}
    k = len(live)
    matrix = [[0] * k for _ in range(k)]
    for s in live:
        for t in dfa.delta[s]:
            if t != dfa.fail:
                matrix[pos[s]][pos[t]] += 1
    initial = [0] * k
    initial[pos[dfa.start]] = 1
    return CountMatrix(
        tuple(tuple(row) for row in matrix), tuple(initial), tuple([1] * k)
    )


def count_words(dfa: GeodesicDFA, n: int) -> list[int]:
    """Number of accepted words of each length 0..n."""
    return transfer_count(to_count_matrix(dfa), n)


def words_of_length(dfa: GeodesicDFA, n: int) -> Iterator[tuple[str, ...]]:
    """All accepted words of length exactly n, in lexicographic letter order."""
    word: list[str] = []

    def rec(state: int, remaining: int) -> Iterator[tuple[str, ...]]:
        if remaining == 0:
            yield tuple(word)
            return
        for i, a in enumerate(dfa.alphabet):
            t = dfa.delta[state][i]
            if t != dfa.fail:
                word.append(a)
                yield from rec(t, remaining - 1)
                word.pop()

    yield from rec(dfa.start, n)


def prune_unreachable(dfa: GeodesicDFA) -> GeodesicDFA:
    seen = {dfa.start}
    order = [dfa.start]
    q = deque(order)
    while q:
        s = q.popleft()
        for t in dfa.delta[s]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                q.append(t)
    if dfa.fail not in seen:  # keep a fail state even if unreachable
        order.append(dfa.fail)
    pos = {s: i for i, s in enumerate(order)}
    delta = tuple(tuple(pos[dfa.delta[s][i]] for i in range(len(dfa.alphabet))) for s in order)
    return GeodesicDFA(
        dfa.alphabet,
        delta,
        pos[dfa.start],
        pos[dfa.fail],
        tuple(dfa.state_names[s] for s in order),
    )


def minimize(dfa: GeodesicDFA) -> GeodesicDFA:
    """Moore partition refinement.  Small automata only, no Hopcroft."""
    dfa = prune_unreachable(dfa)
    n = dfa.n_states
    # class 0 = fail, class 1 = everything else
    cls = [0 if s == dfa.fail else 1 for s in range(n)]
    while True:
        sig = {}
        new = [0] * n
        for s in range(n):
            key = (cls[s], tuple(cls[t] for t in dfa.delta[s]))
            if key not in sig:
                sig[key] = len(sig)
            new[s] = sig[key]
        if new == cls:
            break
        cls = new
    k = len(set(cls))
    # representative state per class, classes renumbered by first appearance
    reps: dict[int, int] = {}
    order: list[int] = []
    for s in range(n):
        if cls[s] not in reps:
            reps[cls[s]] = s
            order.append(cls[s])
    renum = {c: i for i, c in enumerate(order)}
    delta = []
    names = []
    for c in order:
        s = reps[c]
        delta.append(tuple(renum[cls[t]] for t in dfa.delta[s]))
        names.append("|".join(sorted({dfa.state_names[x] for x in range(n) if cls[x] == c})))
    assert len(delta) == k
    return GeodesicDFA(
        dfa.alphabet,
        tuple(delta),
        renum[cls[dfa.start]],
        renum[cls[dfa.fail]],
        tuple(names),
    )


def find_language_difference(
    d1: GeodesicDFA, d2: GeodesicDFA, max_len: int | None = None
) -> tuple[str, ...] | None:
    """Shortest word accepted by exactly one of the two DFAs, or None.

    Alphabets must contain the same letter names (order may differ).
    BFS over the product automaton; with max_len=None the search is
    complete because the product is finite.
    """
    if set(d1.alphabet) != set(d2.alphabet):
        raise ValueError("alphabets differ")
    letters = d1.alphabet
    map2 = [d2.alphabet.index(a) for a in letters]
    start = (d1.start, d2.start)
    seen = {start}
    q: deque[tuple[tuple[int, int], tuple[str, ...]]] = deque([(start, ())])
    while q:
        (s1, s2), word = q.popleft()
        if (s1 == d1.fail) != (s2 == d2.fail):
            return word
        if s1 == d1.fail and s2 == d2.fail:
            continue
        if max_len is not None and len(word) >= max_len:
            continue
        for i, a in enumerate(letters):
            nxt = (d1.delta[s1][i], d2.delta[s2][map2[i]])
            if nxt not in seen:
                seen.add(nxt)
                q.append((nxt, word + (a,)))
    return None


def same_language(d1: GeodesicDFA, d2: GeodesicDFA) -> bool:
    return find_language_difference(d1, d2) is None
