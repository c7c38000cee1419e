"""Exact m(n, s) and m_ONE(n, s) at small scale.

Two routes are provided.  ``m_bruteforce`` looks at every family of triples on
[n] (so it is only usable for n <= 6).  ``m_shifted`` enumerates stable
families only, as a depth-first walk over downsets of the domination order
with matching-number pruning; shifting never increases the matching number, so
the two agree wherever both run.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .core import TripleSystem, all_triples, residual, triple_index
from .extremal import build_A, build_B
from .matching import has_matching_of_size, nu
from .shifting import TABLE_MAX_N, is_stable, upset_masks

__all__ = [
    "BudgetExceeded",
    "SearchResult",
    "BRUTE_MAX_TRIPLES",
    "SHIFTED_MAX_NODES",
    "SHIFTED_MAX_PARTITIONS",
    "has_one",
    "is_maximal",
    "make_maximal",
    "m_bruteforce",
    "bruteforce_search",
    "m_shifted",
]

log = logging.getLogger(__name__)

#: Brute force walks 2**C(n,3) families; 24 triples is 16M subsets.
BRUTE_MAX_TRIPLES = 24
#: Node cap for the shifted DFS. (14, 3) needs about 3e5 nodes.
SHIFTED_MAX_NODES = 5_000_000
#: Cap on partitions of [3s+3] into s+1 triples held in memory (s = 3 needs 15400).
SHIFTED_MAX_PARTITIONS = 20_000


class BudgetExceeded(RuntimeError):
    """A search was refused or aborted because it would exceed a budget."""


@dataclass(frozen=True)
class SearchResult:
    n: int
    s: int
    m: int
    witness: TripleSystem
    mode: str  # "brute" | "shifted" | "shifted-ONE"
    nodes_explored: int


def has_one(F: TripleSystem) -> bool:
    """Property ONE: some maximum matching leaves vertex 1 uncovered."""
    if F.n == 0 or not F.edges:
        return True
    return nu(residual(F, 1)) == nu(F)


def _raises_nu(F: TripleSystem, E, s: int) -> bool:
    # An (s+1)-matching of F ∪ {E} must use E, so look for s members avoiding E.
    return has_matching_of_size([e for e in F.edges if not set(e) & set(E)], s)


def is_maximal(F: TripleSystem, s: int) -> bool:
    """Adding any non-edge raises the matching number above s."""
    if nu(F) != s:
        raise ValueError(f"family has nu = {nu(F)}, expected {s}")
    return all(
        _raises_nu(F, E, s) for E in all_triples(F.n) if E not in F.edges
    )


def make_maximal(F: TripleSystem, s: int) -> TripleSystem:
    """Greedily add non-edges in lexicographic order while nu stays s."""
    if nu(F) != s:
        raise ValueError(f"family has nu = {nu(F)}, expected {s}")
    edges = set(F.edges)
    for E in all_triples(F.n):
        if E in edges:
            continue
        cur = TripleSystem(F.n, frozenset(edges))
        if not _raises_nu(cur, E, s):
            edges.add(E)
    return TripleSystem(F.n, frozenset(edges))


# -- brute force ---------------------------------------------------------------

def _disjoint_below(n: int) -> list[int]:
    ts = all_triples(n)
    out = []
    for b, t in enumerate(ts):
        m = 0
        for j in range(b):
            if not set(ts[j]) & set(t):
                m |= 1 << j
        out.append(m)
    return out


def _subset_tables(n: int, max_triples: int) -> tuple[np.ndarray, np.ndarray]:
    """Matching number and size of every family of triples on [n], by subset mask."""
    E = comb(n, 3)
    if E > max_triples:
        raise BudgetExceeded(
            f"brute force needs 2^{E} families for n={n}; "
            f"budget is C(n,3) <= {max_triples} (BRUTE_MAX_TRIPLES)"
        )
    size = 1 << E
    nus = np.zeros(size, dtype=np.uint8)
    pops = np.zeros(size, dtype=np.uint8)
    disjoint = _disjoint_below(n)
    for b in range(E):
        lo = 1 << b
        # For S with top edge b: nu(S) = max(nu(S - b), 1 + nu(S ∩ disjoint(b))).
        low = np.arange(lo, dtype=np.int64)
        take = nus[low & disjoint[b]] + 1
        nus[lo : 2 * lo] = np.maximum(nus[:lo], take)
        pops[lo : 2 * lo] = pops[:lo] + 1
    return nus, pops


def m_bruteforce(n: int, max_triples: int = BRUTE_MAX_TRIPLES) -> dict[int, int]:
    """m(n, s) for every attainable s, by looking at all 2^C(n,3) families."""
    nus, pops = _subset_tables(n, max_triples)
    out = {}
    for s in range(int(nus.max()) + 1):
        out[s] = int(pops[nus == s].max())
    return out


def bruteforce_search(n: int, s: int, max_triples: int = BRUTE_MAX_TRIPLES) -> SearchResult:
    nus, pops = _subset_tables(n, max_triples)
    hits = np.flatnonzero(nus == s)
    if hits.size == 0:
        raise ValueError(f"no family on {n} vertices has nu = {s}")
    best = hits[np.argmax(pops[hits])]
    witness = TripleSystem.from_mask(n, int(best))
    return SearchResult(n, s, len(witness), witness, "brute", len(nus))


# -- shifted search -------------------------------------------------------------

def _partitions(vertices: tuple[int, ...]):
    if not vertices:
        yield ()
        return
    a = vertices[0]
    for b, c in combinations(vertices[1:], 2):
        rest = tuple(v for v in vertices if v not in (a, b, c))
        for p in _partitions(rest):
            yield ((a, b, c),) + p


@lru_cache(maxsize=32)
def _partition_masks(n: int, lo: int, hi: int) -> tuple[int, ...]:
    """Triple-index masks of all partitions of [lo, hi] into triples."""
    k = hi - lo + 1
    count = 1
    for j in range(k // 3):
        count *= comb(k - 3 * j - 1, 2)
    if count > SHIFTED_MAX_PARTITIONS:
        raise BudgetExceeded(
            f"{count} partitions of [{lo}, {hi}] into triples exceeds "
            f"SHIFTED_MAX_PARTITIONS={SHIFTED_MAX_PARTITIONS}"
        )
    idx = triple_index(n)
    out = []
    for p in _partitions(tuple(range(lo, hi + 1))):
        m = 0
        for t in p:
            m |= 1 << idx[t]
        out.append(m)
    return tuple(out)


def _seed(n: int, s: int, one_only: bool) -> TripleSystem | None:
    seeds = []
    if n >= 3 * s + 2:
        seeds.append(build_A(n, s))
    if n >= 3 * s:
        seeds.append(build_B(n, s))
    seeds = [F for F in seeds if nu(F) == s and (not one_only or has_one(F))]
    return max(seeds, key=len, default=None)


def m_shifted(
    n: int,
    s: int,
    one_only: bool = False,
    max_nodes: int = SHIFTED_MAX_NODES,
) -> SearchResult:
    """Maximum size of a stable family on [n] with nu = s (and ONE if asked).

    Triples are visited in lexicographic order, a linear extension of ≺.
    Excluding a triple excludes its whole upset; including one is refused if
    it completes a partition of [3s+3] into triples (for a downset that is
    exactly an (s+1)-matching).  When an included triple leaves a partition
    one block short, that block is excluded at once.
    """
    if s < 0 or n < 0:
        raise ValueError("need n, s >= 0")
    if n > TABLE_MAX_N:
        raise BudgetExceeded(f"shifted search supports n <= {TABLE_MAX_N}")
    if n < 3 * s:
        raise ValueError(f"no family on {n} vertices has nu = {s}")
    ts = all_triples(n)
    N = len(ts)
    up = upset_masks(n)

    rests: list[list[int]] = [[] for _ in range(N)]
    if n >= 3 * s + 3:
        for full in _partition_masks(n, 1, 3 * s + 3):
            m = full
            while m:
                low = m & -m
                rests[low.bit_length() - 1].append(full ^ low)
                m ^= low
    # nu(F) >= s for a downset iff it holds a partition of [3s]; ONE likewise on [2, 3s+1].
    reach_s = _partition_masks(n, 1, 3 * s) if s else (0,)
    if not s:
        one_parts = (0,)
    elif n >= 3 * s + 1:
        one_parts = _partition_masks(n, 2, 3 * s + 1)
    else:
        one_parts = ()

    seed = _seed(n, s, one_only)
    best_mask = seed.mask() if seed is not None else None
    best = len(seed) if seed is not None else -1
    suffix = [((1 << N) - 1) >> i << i for i in range(N + 1)]
    nodes = 0

    def accept(inc: int) -> bool:
        if not any(p & inc == p for p in reach_s):
            return False
        return not one_only or any(p & inc == p for p in one_parts)

    def dfs(i: int, inc: int, exc: int, cnt: int) -> None:
        nonlocal nodes, best, best_mask
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded(
                f"shifted search for (n={n}, s={s}) exceeded {max_nodes} nodes "
                "(SHIFTED_MAX_NODES)"
            )
        while i < N and exc >> i & 1:
            i += 1
        if cnt + (suffix[i] & ~exc).bit_count() <= best:
            return
        if i == N:
            if accept(inc):
                best, best_mask = cnt, inc
            return
        blocked = exc
        feasible = True
        for rest in rests[i]:
            miss = rest & ~inc
            if not miss:
                feasible = False
                break
            if not miss & (miss - 1):
                blocked |= up[miss.bit_length() - 1]
        if feasible:
            dfs(i + 1, inc | (1 << i), blocked, cnt + 1)
        dfs(i + 1, inc, exc | up[i], cnt)

    dfs(0, 0, 0, 0)
    if best_mask is None:
        raise ValueError(f"no stable family on {n} vertices with nu = {s}"
                         + (" and ONE" if one_only else ""))
    witness = TripleSystem.from_mask(n, best_mask)
    # Post-hoc validation with the general matching solver.
    assert nu(witness) == s and is_stable(witness)
    assert not one_only or has_one(witness)
    mode = "shifted-ONE" if one_only else "shifted"
    log.debug("m_shifted(%d, %d, one=%s) = %d after %d nodes", n, s, one_only, best, nodes)
    return SearchResult(n, s, best, witness, mode, nodes)
