"""Exact maximum matchings in families of 1-, 2- and 3-element sets.

Members are encoded as vertex bitmasks so disjointness is a single AND.  The
search branches on the lowest vertex still covered by a live member: either
some member through that vertex is taken, or the vertex is discarded.  Members
are tried in lexicographic order, which makes the returned witness the first
maximum matching met in that order.
"""

from __future__ import annotations

from typing import Iterable

from .core import MixedFamily, SmallSet, TripleSystem

__all__ = ["max_matching", "nu", "has_matching_of_size", "nu_with_avoidance"]


class _Reached(Exception):
    pass


def _members(F) -> list[SmallSet]:
    if isinstance(F, TripleSystem):
        return sorted(F.edges)
    if isinstance(F, MixedFamily):
        return sorted(F.members)
    return sorted({tuple(sorted(h)) for h in F})


def _to_mask(h: SmallSet) -> int:
    m = 0
    for v in h:
        m |= 1 << v
    return m


def _search(masks: list[int], target: int | None) -> list[int]:
    best: list[int] = []
    chosen: list[int] = []

    def rec(cands: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
            if target is not None and len(best) >= target:
                raise _Reached
        if not cands:
            return
        union = 0
        smallest = 3
        for c in cands:
            union |= c
            k = c.bit_count()
            if k < smallest:
                smallest = k
        cap = len(chosen) + union.bit_count() // smallest
        if cap <= len(best) or (target is not None and cap < target):
            return
        low = union & -union
        for c in cands:
            if c & low:
                chosen.append(c)
                rec([d for d in cands if not d & c])
                chosen.pop()
        rec([d for d in cands if not d & low])

    try:
        rec(masks)
    except _Reached:
        pass
    return best


def max_matching(F) -> tuple[SmallSet, ...]:
    """A maximum matching of ``F`` (lexicographically first in search order)."""
    members = _members(F)
    by_mask = {_to_mask(h): h for h in members}
    picked = _search(list(by_mask), None)
    used = 0
    for m in picked:
        assert not used & m, "matching witness is not pairwise disjoint"
        used |= m
    return tuple(by_mask[m] for m in picked)


def nu(F) -> int:
    """Matching number: the maximum number of pairwise disjoint members."""
    return len(max_matching(F))


def has_matching_of_size(F, k: int) -> bool:
    """True iff ``F`` has ``k`` pairwise disjoint members; stops at the first hit."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return True
    masks = [_to_mask(h) for h in _members(F)]
    return len(_search(masks, k)) >= k


def nu_with_avoidance(F, avoid: Iterable[int]) -> int:
    """Matching number of the members of ``F`` disjoint from ``avoid``."""
    bad = set(avoid)
    return nu([h for h in _members(F) if bad.isdisjoint(h)])
