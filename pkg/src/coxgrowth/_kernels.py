"""Tight counting loops for the enumeration oracles.

Two word-enumeration strategies, each compiled with numba and mirrored
in plain Python (the mirrors are the reference implementations and are
cross-checked against the kernels in the tests):

* scan-back: for right-angled systems (Coxeter or Artin) appending a
  letter y to a geodesic w stays geodesic unless, scanning w from the
  right, a cancelling letter is met before a non-commuting one.
* braid closure: for general even systems a word is geodesic iff no
  sequence of braid moves (swap an alternating (s,t)-factor of length
  m_{s,t}) produces an adjacent cancelling pair; breadth-first closure
  per word, with a budget on the class size.

Both run a prefix-pruned depth-first enumeration (geodesic prefixes
only), so the work is proportional to the number of geodesics, not to
|S|^n.  Words in the braid kernel are packed four bits per letter into
an int64, which caps that path at 16 letters and 16 generators — ample
for exhaustive oracle ranges.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# Fibonacci-style multiplicative hash constant for the packed-word table.
_HASH_MULT = np.uint64(0x9E3779B97F4A7C15)

MAX_PACKED_LETTERS = 16
MAX_PACKED_ALPHABET = 16


# --- scan-back enumeration ----------------------------------------------


@njit(cache=True)
def scanback_counts(cancel_masks, commute_masks, nletters, nmax):
    """Geodesic counts 0..nmax by depth-first enumeration.

    cancel_masks[y] / commute_masks[y]: bitmasks over the letters that
    cancel y / that y slides past.  Cancellation wins over commuting
    when both bits are set (it never is for the systems built here).
    """
    counts = np.zeros(nmax + 1, dtype=np.int64)
    counts[0] = 1
    word = np.zeros(max(nmax, 1), dtype=np.int64)
    child = np.zeros(nmax + 2, dtype=np.int64)
    depth = 0
    while depth >= 0:
        if depth < nmax and child[depth] < nletters:
            y = child[depth]
            ok = True
            j = depth - 1
            while j >= 0:
                wj = word[j]
                if (cancel_masks[y] >> wj) & 1:
                    ok = False
                    break
                if not ((commute_masks[y] >> wj) & 1):
                    break
                j -= 1
            if ok:
                word[depth] = y
                counts[depth + 1] += 1
                depth += 1
                child[depth] = 0
            else:
                child[depth] += 1
        else:
            depth -= 1
            if depth >= 0:
                child[depth] += 1
    return counts


def scanback_counts_py(cancel_masks, commute_masks, nletters, nmax):
    """Reference implementation of scanback_counts."""
    counts = [0] * (nmax + 1)
    counts[0] = 1
    word: list[int] = []

    def rec() -> None:
        if len(word) == nmax:
            return
        for y in range(nletters):
            ok = True
            for wj in reversed(word):
                if (cancel_masks[y] >> wj) & 1:
                    ok = False
                    break
                if not ((commute_masks[y] >> wj) & 1):
                    break
            if ok:
                word.append(y)
                counts[len(word)] += 1
                rec()
                word.pop()

    rec()
    return counts


# --- braid-closure enumeration ------------------------------------------
#
# Per-word breadth-first closure under braid moves.  The visited set is
# an open-addressing hash table over packed words, cleared lazily via
# generation stamps so it can be reused across the millions of words the
# outer enumeration visits.


@njit(cache=True)
def _braid_scan(packed, length, mtab, cancel_of, nletters, queue, table, stamps, gen, logsz):
    """1 if some braid-reachable word has an adjacent cancelling pair,
    0 if none (word is geodesic), -1 if the class outgrew the queue."""
    budget = queue.shape[0]
    mask = (np.int64(1) << logsz) - 1
    # seed
    h = np.int64((np.uint64(packed) * _HASH_MULT) >> np.uint64(64 - logsz))
    table[h] = packed
    stamps[h] = gen
    queue[0] = packed
    qn = 1
    head = 0
    while head < qn:
        cur = queue[head]
        head += 1
        prev = cur & 15
        for i in range(1, length):
            li = (cur >> (4 * i)) & 15
            if li == cancel_of[prev]:
                return 1
            prev = li
        for i in range(length - 1):
            a = (cur >> (4 * i)) & 15
            b = (cur >> (4 * (i + 1))) & 15
            m = mtab[a * nletters + b]
            if m < 2 or i + m > length:
                continue
            ok = True
            for k in range(2, m):
                expect = a if k % 2 == 0 else b
                if ((cur >> (4 * (i + k))) & 15) != expect:
                    ok = False
                    break
            if not ok:
                continue
            nw = cur
            for k in range(m):
                newv = b if k % 2 == 0 else a
                shift = 4 * (i + k)
                nw = (nw & ~(np.int64(15) << shift)) | (np.int64(newv) << shift)
            h = np.int64((np.uint64(nw) * _HASH_MULT) >> np.uint64(64 - logsz))
            while stamps[h] == gen and table[h] != nw:
                h = (h + 1) & mask
            if stamps[h] == gen:
                continue
            if qn >= budget:
                return -1
            table[h] = nw
            stamps[h] = gen
            queue[qn] = nw
            qn += 1
    return 0


@njit(cache=True)
def braid_counts(mtab, cancel_of, nletters, nmax, budget):
    """Geodesic counts 0..nmax with per-word braid-closure tests.

    Returns (counts, status); status -1 means some class exhausted the
    budget and the counts are unusable.
    """
    counts = np.zeros(nmax + 1, dtype=np.int64)
    counts[0] = 1
    logsz = 1
    while (np.int64(1) << logsz) < 4 * budget:
        logsz += 1
    table = np.zeros(1 << logsz, dtype=np.int64)
    stamps = np.zeros(1 << logsz, dtype=np.int64)
    queue = np.zeros(budget, dtype=np.int64)
    gen = np.int64(0)
    child = np.zeros(nmax + 2, dtype=np.int64)
    packed = np.int64(0)
    depth = 0
    while depth >= 0:
        if depth < nmax and child[depth] < nletters:
            y = child[depth]
            cand = packed | (np.int64(y) << (4 * depth))
            gen += 1
            r = _braid_scan(
                cand, depth + 1, mtab, cancel_of, nletters, queue, table, stamps, gen, logsz
            )
            if r == -1:
                return counts, -1
            if r == 0:
                packed = cand
                counts[depth + 1] += 1
                depth += 1
                child[depth] = 0
            else:
                child[depth] += 1
        else:
            depth -= 1
            if depth >= 0:
                packed &= ~(np.int64(15) << (4 * depth))
                child[depth] += 1
    return counts, 0


def braid_reachable_py(word, mtab, cancel_of, nletters, budget):
    """Reference braid closure on letter tuples; mirrors _braid_scan,
    including the early exit on the first cancelling pair.

    Returns (reducible, words_seen); words_seen is None exactly when the
    budget was exhausted before the answer was decided.
    """
    seen = {tuple(word)}
    queue = [tuple(word)]
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for i in range(len(cur) - 1):
            if cur[i + 1] == cancel_of[cur[i]]:
                return True, queue
        for i in range(len(cur) - 1):
            a, b = cur[i], cur[i + 1]
            m = mtab[a * nletters + b]
            if m < 2 or i + m > len(cur):
                continue
            if any(
                cur[i + k] != (a if k % 2 == 0 else b) for k in range(2, m)
            ):
                continue
            nw = (
                cur[:i]
                + tuple(b if k % 2 == 0 else a for k in range(m))
                + cur[i + m :]
            )
            if nw not in seen:
                if len(seen) >= budget:
                    return False, None
                seen.add(nw)
                queue.append(nw)
    return False, queue


def braid_counts_py(mtab, cancel_of, nletters, nmax, budget):
    """Reference implementation of braid_counts."""
    counts = [0] * (nmax + 1)
    counts[0] = 1
    word: list[int] = []
    status = [0]

    def rec() -> None:
        if len(word) == nmax or status[0] != 0:
            return
        for y in range(nletters):
            reducible, cls = braid_reachable_py(
                word + [y], mtab, cancel_of, nletters, budget
            )
            if reducible:
                continue
            if cls is None:
                status[0] = -1
                return
            word.append(y)
            counts[len(word)] += 1
            rec()
            word.pop()

    rec()
    return counts, status[0]
