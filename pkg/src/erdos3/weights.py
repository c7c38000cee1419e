"""Spread and weight of traces, the trace-count identity and its per-τ split.

Setting: F is stable on [n], n >= 3s+3, with matching number s and property
ONE.  A frame is an s-matching F_1..F_s inside [3s+2] \\ {1} leaving the pair
{1, d} uncovered.  For a trace H (a member of F_0 = {E ∩ [3s+2]}) the spread
z(H) counts frame triples met by H, and

    w(H) = C(n-3s-2, 3-|H|) / C(s-z(H), 3-z(H)).

A set of spread z lies inside V^τ = {1,d} ∪ ⋃_{i∈τ} F_i for exactly
C(s-z, 3-z) of the 3-sets τ ⊆ [s], which turns the trace-count identity into
a sum of per-τ weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import SmallSet, Triple, TripleSystem, trace
from .matching import max_matching, nu
from .search import has_one, is_maximal
from .shifting import is_stable

__all__ = [
    "MatchingFrame",
    "WeightParams",
    "find_frame",
    "spread",
    "weight",
    "shape_weight",
    "tau_count",
    "taus_containing",
    "eq5_sum",
    "eq6_total",
    "eq6_total_by_tau",
    "W_complete",
    "BOARD_COLUMNS",
]


@dataclass(frozen=True)
class MatchingFrame:
    s: int
    d: int
    triples: tuple[Triple, ...]

    def __post_init__(self):
        ts = tuple(tuple(sorted(t)) for t in self.triples)
        object.__setattr__(self, "triples", ts)
        if len(ts) != self.s:
            raise ValueError(f"frame needs {self.s} triples, got {len(ts)}")
        covered = [v for t in ts for v in t]
        window = set(range(1, 3 * self.s + 3))
        if len(set(covered)) != len(covered) or any(len(t) != 3 for t in ts):
            raise ValueError("frame triples must be disjoint triples")
        if set(covered) | {1, self.d} != window or self.d in covered or self.d == 1:
            raise ValueError("frame triples and {1, d} must partition [3s+2]")

    def column(self, v: int) -> int | None:
        """Index i (0-based) of the frame triple containing v, else None."""
        for i, t in enumerate(self.triples):
            if v in t:
                return i
        return None


@dataclass(frozen=True)
class WeightParams:
    n: int
    s: int

    def __post_init__(self):
        if self.s < 3:
            raise ValueError("weights need s >= 3")
        if self.n < 3 * self.s + 3:
            raise ValueError("weights need n >= 3s + 3")


def find_frame(F: TripleSystem, s: int) -> MatchingFrame:
    """Frame from F's own edges, with d as small as possible.

    For each candidate d in increasing order, look for s disjoint edges of F
    inside [3s+2] \\ {1, d}; the first d that admits one wins and the
    lexicographically first such matching is used.
    """
    top = 3 * s + 2
    inner = [e for e in F.edges if e[0] >= 2 and e[2] <= top]
    for d in range(2, top + 1):
        cand = [e for e in inner if d not in e]
        if nu(cand) == s:
            return MatchingFrame(s, d, tuple(sorted(max_matching(cand))))
    raise ValueError("no s-matching of F inside [3s+2] avoiding vertex 1")


def spread(H: SmallSet, frame: MatchingFrame) -> int:
    if not H or max(H) > 3 * frame.s + 2 or min(H) < 1:
        raise ValueError(f"{tuple(H)} is not inside the window [1, {3 * frame.s + 2}]")
    return len({frame.column(v) for v in H} - {None})


def shape_weight(size: int, z: int, s: int, pair_numerator: Fraction | int) -> Fraction:
    """Weight of a trace of the given size and spread.

    ``pair_numerator`` stands for n - 3s - 2 (or an upper bound on it); a
    triple's numerator is always 1.
    """
    if size not in (2, 3):
        raise ValueError("weights are defined for pairs and triples only")
    if not 1 <= z <= size:
        raise ValueError(f"spread {z} impossible or degenerate for a {size}-set")
    num = Fraction(1) if size == 3 else Fraction(pair_numerator)
    return num / comb(s - z, 3 - z)


def weight(H: SmallSet, frame: MatchingFrame, p: WeightParams) -> Fraction:
    if frame.s != p.s:
        raise ValueError("frame and parameters disagree on s")
    return shape_weight(len(H), spread(H, frame), p.s, p.n - 3 * p.s - 2)


def tau_count(z: int, s: int) -> int:
    """Number of 3-sets τ ⊆ [s] containing a fixed z-set of frame indices."""
    return comb(s - z, 3 - z)


def taus_containing(H: SmallSet, frame: MatchingFrame) -> int:
    """Direct count of τ with H ⊆ V^τ."""
    cols = {frame.column(v) for v in H} - {None}
    return sum(1 for tau in combinations(range(frame.s), 3) if cols <= set(tau))


def _check_setup(F: TripleSystem, s: int) -> None:
    if F.n < 3 * s + 3:
        raise ValueError("need n >= 3s + 3")
    if nu(F) != s:
        raise ValueError(f"family has nu = {nu(F)}, expected {s}")
    if not is_stable(F):
        raise ValueError("family is not stable")
    if not is_maximal(F, s):
        raise ValueError("family is not maximal")


def eq5_sum(F: TripleSystem, s: int, check: bool = True) -> int:
    """Σ over traces H of C(n-3s-2, 3-|H|).

    For a stable maximal F with nu = s every trace extends to all its
    completions outside the window, so this counts F exactly.
    """
    if check:
        _check_setup(F, s)
    outside = F.n - 3 * s - 2
    return sum(comb(outside, 3 - len(h)) for h in trace(F, 3 * s + 2).members)


def _weighted_traces(F: TripleSystem, s: int, check: bool):
    if check:
        _check_setup(F, s)
        if not has_one(F):
            raise ValueError("family lacks property ONE")
    traces = trace(F, 3 * s + 2).members
    if any(len(h) < 2 for h in traces):
        raise ValueError("a trace of size 1 has no weight")
    return traces


def eq6_total(F: TripleSystem, frame: MatchingFrame, p: WeightParams, check: bool = True) -> Fraction:
    """Σ_τ Σ_{H ⊆ V^τ} w(H), evaluated per trace as Σ_H C(s-z, 3-z) w(H)."""
    if any(t not in F.edges for t in frame.triples):
        raise ValueError("frame triples must be edges of F")
    total = Fraction(0)
    for h in _weighted_traces(F, p.s, check):
        total += tau_count(spread(h, frame), p.s) * weight(h, frame, p)
    return total


def eq6_total_by_tau(F: TripleSystem, frame: MatchingFrame, p: WeightParams, check: bool = True) -> Fraction:
    """The same double sum taken literally over every τ; O(s^3 |F_0|)."""
    traces = _weighted_traces(F, p.s, check)
    total = Fraction(0)
    for tau in combinations(range(p.s), 3):
        board = {1, frame.d}.union(*(frame.triples[i] for i in tau))
        for h in traces:
            if board.issuperset(h):
                total += weight(h, frame, p)
    return total


# The abstract 11-vertex board: vertex 0 is "1", vertex 1 is "d", and the
# three frame triples are columns {2,3,4}, {5,6,7}, {8,9,10}.
BOARD_COLUMNS = (None, None, 0, 0, 0, 1, 1, 1, 2, 2, 2)


def W_complete(s: int) -> Fraction:
    """Total weight of all 165 triples of the board (the complete family)."""
    if s < 3:
        raise ValueError("W needs s >= 3")
    total = Fraction(0)
    for t in combinations(range(11), 3):
        z = len({BOARD_COLUMNS[v] for v in t} - {None})
        total += shape_weight(3, z, s, 0)
    return total
