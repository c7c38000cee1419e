"""Triple systems on an ordered vertex set [n], plus links, residuals and traces.

Vertices are the integers 1..n and the linear order is the integer order.
Edges are stored as sorted 3-tuples; iteration is always lexicographic so that
every search built on top of this module is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

Triple = tuple[int, int, int]
SmallSet = tuple[int, ...]

__all__ = [
    "Triple",
    "SmallSet",
    "EdgeListError",
    "TraceError",
    "MixedFamily",
    "TraceFamily",
    "TripleSystem",
    "all_triples",
    "triple_index",
    "complete",
    "link",
    "residual",
    "drop_prefix",
    "trace",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
    "write_edge_list",
]


class EdgeListError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based (0 when not line specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


class TraceError(ValueError):
    """Raised when some edge misses the trace window entirely."""


def _as_small_set(members: Iterable[int]) -> SmallSet:
    t = tuple(sorted(members))
    if len(set(t)) != len(t):
        raise ValueError(f"repeated vertex in {t}")
    return t


@lru_cache(maxsize=None)
def all_triples(n: int) -> tuple[Triple, ...]:
    """All 3-subsets of [n] in lexicographic order."""
    return tuple(combinations(range(1, n + 1), 3))


@lru_cache(maxsize=None)
def triple_index(n: int) -> dict[Triple, int]:
    return {t: i for i, t in enumerate(all_triples(n))}


@dataclass(frozen=True)
class MixedFamily:
    """A family of 1-, 2- and 3-element subsets of [n]."""

    n: int
    members: frozenset[SmallSet]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        clean = frozenset(_as_small_set(h) for h in self.members)
        for h in clean:
            if not 1 <= len(h) <= 3:
                raise ValueError(f"member {h} must have 1, 2 or 3 elements")
            if h[0] < 1 or h[-1] > self.n:
                raise ValueError(f"member {h} not inside [1, {self.n}]")
        object.__setattr__(self, "members", clean)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SmallSet]:
        return iter(sorted(self.members))

    def __contains__(self, h) -> bool:
        return tuple(sorted(h)) in self.members

    def of_size(self, k: int) -> list[SmallSet]:
        return [h for h in self if len(h) == k]


class TraceFamily(MixedFamily):
    """Distinct intersections F ∩ [m] of the edges of a triple system."""

    @property
    def m(self) -> int:
        return self.n


@dataclass(frozen=True)
class TripleSystem:
    """A 3-uniform hypergraph on the vertex set [n]."""

    n: int
    edges: frozenset[Triple]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        clean = set()
        for e in self.edges:
            t = _as_small_set(e)
            if len(t) != 3:
                raise ValueError(f"edge {t} is not a triple")
            if t[0] < 1 or t[2] > self.n:
                raise ValueError(f"edge {t} not inside [1, {self.n}]")
            clean.add(t)
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "TripleSystem":
        """Inverse of :meth:`mask`."""
        ts = all_triples(n)
        edges = []
        while mask:
            low = mask & -mask
            edges.append(ts[low.bit_length() - 1])
            mask ^= low
        return cls(n, frozenset(edges))

    def mask(self) -> int:
        """Bitmask over the lexicographic index of every triple of [n]."""
        idx = triple_index(self.n)
        m = 0
        for e in self.edges:
            m |= 1 << idx[e]
        return m

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self.edges))

    def __contains__(self, e) -> bool:
        return tuple(sorted(e)) in self.edges

    def union(self, more: Iterable[Iterable[int]]) -> "TripleSystem":
        return TripleSystem(self.n, self.edges | {tuple(sorted(e)) for e in more})

    def as_family(self) -> MixedFamily:
        return MixedFamily(self.n, self.edges)


def complete(n: int, vertices: Iterable[int] | None = None) -> TripleSystem:
    """K³ on ``vertices`` (default: all of [n]) as a system on [n]."""
    vs = range(1, n + 1) if vertices is None else sorted(vertices)
    return TripleSystem(n, frozenset(combinations(vs, 3)))


def _check_vertex(F: TripleSystem, v: int) -> None:
    if not 1 <= v <= F.n:
        raise ValueError(f"vertex {v} outside [1, {F.n}]")


def link(F: TripleSystem, v: int) -> frozenset[tuple[int, int]]:
    """The graph F(v) = {E \\ {v} : v ∈ E ∈ F}."""
    _check_vertex(F, v)
    return frozenset(tuple(x for x in e if x != v) for e in F.edges if v in e)


def residual(F: TripleSystem, v: int) -> TripleSystem:
    """Edges avoiding v; the vertex set stays [n] with v unused."""
    _check_vertex(F, v)
    return TripleSystem(F.n, frozenset(e for e in F.edges if v not in e))


def drop_prefix(F: TripleSystem, q: int) -> TripleSystem:
    """Induced system on {q+1..n}, relabelled to [1, n-q] by x ↦ x - q."""
    if not 0 <= q < max(F.n, 1):
        raise ValueError(f"need 0 <= q < n, got q={q}, n={F.n}")
    kept = frozenset(
        (e[0] - q, e[1] - q, e[2] - q) for e in F.edges if e[0] > q
    )
    return TripleSystem(F.n - q, kept)


def trace(F: TripleSystem, m: int) -> TraceFamily:
    """The family of distinct nonempty intersections E ∩ [m], E ∈ F."""
    if not 0 <= m <= F.n:
        raise ValueError(f"window {m} outside [0, {F.n}]")
    out = set()
    for e in F:
        h = tuple(x for x in e if x <= m)
        if not h:
            raise TraceError(f"edge {e} is disjoint from [1, {m}]")
        out.add(h)
    return TraceFamily(m, frozenset(out))


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> TripleSystem:
    """Parse ``n m`` followed by m lines of three increasing vertices."""
    header = None
    edges: list[Triple] = []
    seen: set[Triple] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise EdgeListError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2 or nums[0] < 0 or nums[1] < 0:
                raise EdgeListError("header must be 'n m' with n, m >= 0", lineno)
            header = (nums[0], nums[1])
            continue
        n = header[0]
        if len(nums) != 3:
            raise EdgeListError(f"expected 3 vertices, got {len(nums)}", lineno)
        a, b, c = nums
        if not a < b < c:
            raise EdgeListError(f"vertices {a} {b} {c} not strictly increasing", lineno)
        if a < 1 or c > n:
            raise EdgeListError(f"vertex outside [1, {n}]", lineno)
        if (a, b, c) in seen:
            raise EdgeListError(f"duplicate edge {a} {b} {c}", lineno)
        seen.add((a, b, c))
        edges.append((a, b, c))
    if header is None:
        raise EdgeListError("missing 'n m' header")
    if len(edges) != header[1]:
        raise EdgeListError(f"header announces {header[1]} edges, found {len(edges)}")
    return TripleSystem(header[0], frozenset(edges))


def format_edge_list(F: TripleSystem, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{F.n} {len(F)}")
    lines.extend(f"{a} {b} {c}" for a, b, c in F)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> TripleSystem:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(F: TripleSystem, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(F, comment))
