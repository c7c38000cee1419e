"""Domination order on triples, stability, shifts and stabilization."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .core import SmallSet, Triple, TripleSystem, all_triples, triple_index

__all__ = [
    "dominates",
    "is_stable",
    "stability_violation",
    "shift_once",
    "shift_steps",
    "stabilize",
    "potential",
    "upset_masks",
    "downset_masks",
]

# Above this many vertices the per-triple bitmask tables get too large and the
# plain scans are used instead.
TABLE_MAX_N = 16


def dominates(A: SmallSet, B: SmallSet) -> bool:
    """A ≺ B: after sorting, every coordinate of A is <= that of B."""
    a, b = sorted(A), sorted(B)
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {tuple(a)} vs {tuple(b)}")
    return all(x <= y for x, y in zip(a, b))


def _successors(t: Triple, n: int) -> Iterator[Triple]:
    """Triples covering t: one coordinate raised by one."""
    a, b, c = t
    if a + 1 < b:
        yield (a + 1, b, c)
    if b + 1 < c:
        yield (a, b + 1, c)
    if c < n:
        yield (a, b, c + 1)


def _predecessors(t: Triple) -> Iterator[Triple]:
    a, b, c = t
    if a > 1:
        yield (a - 1, b, c)
    if b - 1 > a:
        yield (a, b - 1, c)
    if c - 1 > b:
        yield (a, b, c - 1)


@lru_cache(maxsize=None)
def upset_masks(n: int) -> tuple[int, ...]:
    """For triple index i, the mask of all j with T_i ≺ T_j (i included)."""
    ts = all_triples(n)
    idx = triple_index(n)
    up = [0] * len(ts)
    for i in range(len(ts) - 1, -1, -1):
        m = 1 << i
        for succ in _successors(ts[i], n):
            m |= up[idx[succ]]
        up[i] = m
    return tuple(up)


@lru_cache(maxsize=None)
def downset_masks(n: int) -> tuple[int, ...]:
    """For triple index i, the mask of all j with T_j ≺ T_i (i included)."""
    ts = all_triples(n)
    idx = triple_index(n)
    down = [0] * len(ts)
    for i, t in enumerate(ts):
        m = 1 << i
        for pred in _predecessors(t):
            m |= down[idx[pred]]
        down[i] = m
    return tuple(down)


def is_stable(F: TripleSystem) -> bool:
    """True iff F is a downset of (triples of [n], ≺)."""
    # Closure under covering predecessors is equivalent to closure under ≺.
    return all(p in F.edges for e in F.edges for p in _predecessors(e))


def _first_violation_mask(n: int, mask: int) -> tuple[int, int] | None:
    up = upset_masks(n)
    free = ~mask & ((1 << len(up)) - 1)
    while free:
        low = free & -free
        i = low.bit_length() - 1
        hit = up[i] & mask
        if hit:
            return i, (hit & -hit).bit_length() - 1
        free ^= low
    return None


def stability_violation(F: TripleSystem) -> tuple[Triple, Triple] | None:
    """First pair (A, B), A ∉ F, B ∈ F, A ≺ B, scanning A then B lexicographically."""
    if is_stable(F):
        return None
    if F.n <= TABLE_MAX_N:
        ts = all_triples(F.n)
        i, j = _first_violation_mask(F.n, F.mask())
        return ts[i], ts[j]
    edges = sorted(F.edges)
    for A in all_triples(F.n):
        if A in F.edges:
            continue
        for B in edges:
            if dominates(A, B):
                return A, B
    raise AssertionError("unstable family without a violating pair")


def shift_once(F: TripleSystem) -> TripleSystem | None:
    """Swap in the first violating non-edge for its first dominating edge.

    Returns None when F is already stable.
    """
    pair = stability_violation(F)
    if pair is None:
        return None
    A, B = pair
    return TripleSystem(F.n, (F.edges - {B}) | {A})


def potential(F: TripleSystem) -> int:
    """Sum of all vertex labels over all edges; every shift lowers it."""
    return sum(sum(e) for e in F.edges)


def shift_steps(F: TripleSystem) -> Iterator[tuple[Triple, Triple]]:
    """Yield the successive swaps (A added, B removed) until F is stable."""
    n = F.n
    if n <= TABLE_MAX_N:
        ts = all_triples(n)
        mask = F.mask()
        while True:
            hit = _first_violation_mask(n, mask)
            if hit is None:
                return
            i, j = hit
            mask = (mask | (1 << i)) & ~(1 << j)
            yield ts[i], ts[j]
    else:
        while True:
            nxt = shift_once(F)
            if nxt is None:
                return
            (A,) = nxt.edges - F.edges
            (B,) = F.edges - nxt.edges
            F = nxt
            yield A, B


def stabilize(F: TripleSystem) -> TripleSystem:
    """Apply shifts until the family is stable; size is unchanged."""
    edges = set(F.edges)
    for A, B in shift_steps(F):
        edges.remove(B)
        edges.add(A)
    return TripleSystem(F.n, frozenset(edges))
