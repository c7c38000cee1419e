"""Closed-form extremal quantities, the two extremal constructions and the
numeric facts about the threshold n1(s).

Everything here is integer or :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb, isqrt

from .core import TripleSystem

__all__ = [
    "a_of",
    "b_of",
    "M_of",
    "ExtremalRecord",
    "extremal_record",
    "n1_exact",
    "n1_formula",
    "g_of",
    "fact2_check",
    "fact2_sweep",
    "eg_bound",
    "build_A",
    "build_B",
    "fact1_identity_check",
    "fact4_q0_bound",
    "fact4_q0_check",
]


def a_of(s: int) -> int:
    """Edges of the clique construction: C(3s+2, 3)."""
    if s < 0:
        raise ValueError("s must be non-negative")
    return comb(3 * s + 2, 3)


def b_of(n: int, s: int) -> int:
    """Edges of the cover construction: C(n,3) - C(n-s,3)."""
    if s < 0 or n < s:
        raise ValueError(f"need 0 <= s <= n, got n={n}, s={s}")
    return comb(n, 3) - comb(n - s, 3)


def M_of(n: int, s: int) -> int:
    return max(a_of(s), b_of(n, s))


def n1_exact(s: int) -> int:
    """Smallest n with b(n, s) >= a(s), by monotone search in n."""
    if s < 1:
        raise ValueError("s must be >= 1")
    target = a_of(s)
    # b(4s+4, s) >= a(s) for every s >= 1, so the answer lies in [3s+2, 4s+4].
    lo, hi = 3 * s + 2, 4 * s + 4
    assert b_of(hi, s) >= target
    while lo < hi:
        mid = (lo + hi) // 2
        if b_of(mid, s) >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def g_of(s: int) -> int:
    return 321 * s * s + 324 * s + 84


def n1_formula(s: int) -> int:
    """1 + ceil(s/2 + sqrt(g(s))/6), decided with integer square roots only."""
    if s < 1:
        raise ValueError("s must be >= 1")
    g = g_of(s)
    # ceil((3s + sqrt g) / 6) is the least k with 6k - 3s >= sqrt(g).
    k = (3 * s + isqrt(g)) // 6
    while 6 * k - 3 * s < 0 or (6 * k - 3 * s) ** 2 < g:
        k += 1
    while k > 0 and 6 * (k - 1) - 3 * s >= 0 and (6 * (k - 1) - 3 * s) ** 2 >= g:
        k -= 1
    return 1 + k


@dataclass(frozen=True)
class ExtremalRecord:
    s: int
    n: int
    a: int
    b: int
    M: int
    n1: int


def extremal_record(n: int, s: int) -> ExtremalRecord:
    return ExtremalRecord(s, n, a_of(s), b_of(n, s), M_of(n, s), n1_exact(s))


def fact2_check(s: int, n1=n1_exact) -> tuple[bool, bool, bool | None]:
    """(n1 <= 3.5s+3, n1 >= 3.4s+1, n1(s) - n1(s-1) >= 2); third is None for s=1."""
    v = n1(s)
    upper = v <= Fraction(7, 2) * s + 3
    lower = v >= Fraction(17, 5) * s + 1
    gap = None if s < 2 else v - n1(s - 1) >= 2
    return upper, lower, gap


def fact2_sweep(s_max: int) -> int | None:
    """Check all three parts for s = 1..s_max; return the first failing s or None.

    Uses the closed form for n1, which is cross-checked against
    :func:`n1_exact` elsewhere; comparisons are scaled to integers.
    """
    prev = None
    for s in range(1, s_max + 1):
        v = n1_formula(s)
        if 2 * v > 7 * s + 6 or 5 * v < 17 * s + 5:
            return s
        if prev is not None and v - prev < 2:
            return s
        prev = v
    return None


def eg_bound(n: int, s: int) -> tuple[int, str]:
    """Erdős–Gallai bound for a graph on n-1 vertices with no (s+1)-matching.

    Returns ``(value, branch)`` with branch ``"clique"`` for C(2s+1, 2) or
    ``"cover"`` for C(n-1, 2) - C(n-1-s, 2); ties report ``"cover"``.
    """
    if n < 1 or s < 0:
        raise ValueError("need n >= 1 and s >= 0")
    clique = comb(2 * s + 1, 2)
    cover = comb(n - 1, 2) - comb(max(n - 1 - s, 0), 2)
    return (cover, "cover") if cover >= clique else (clique, "clique")


def build_A(n: int, s: int) -> TripleSystem:
    """All triples inside [3s+2], with n - 3s - 2 isolated vertices."""
    if n < 3 * s + 2:
        raise ValueError(f"clique construction needs n >= 3s+2, got n={n}, s={s}")
    return TripleSystem(n, frozenset(combinations(range(1, 3 * s + 3), 3)))


def build_B(n: int, s: int) -> TripleSystem:
    """All triples of [n] meeting [s]."""
    if s < 0 or n < s:
        raise ValueError(f"cover construction needs 0 <= s <= n, got n={n}, s={s}")
    return TripleSystem(
        n, frozenset(t for t in combinations(range(1, n + 1), 3) if t[0] <= s)
    )


def fact1_identity_check(n: int, s: int) -> bool:
    """Residual plus link bound telescopes exactly to b(n, s)."""
    if n < s + 1:
        raise ValueError("need n >= s + 1")
    lhs = comb(n - 1, 3) - comb(n - 1 - s, 3) + comb(n - 1, 2) - comb(n - 1 - s, 2)
    return lhs == b_of(n, s)


def fact4_q0_bound(s: int) -> int:
    """Largest q for which some n >= 3.4s satisfies n - q <= 4(s - q) + 3.

    That inequality reads n + 3q <= 4s + 3, so the binding n is ceil(17s/5).
    """
    n_min = ceil(Fraction(17 * s, 5))
    return (4 * s + 3 - n_min) // 3


def fact4_q0_check(s_max: int) -> bool:
    """For every s <= s_max: each q > s/5 + 1 and n >= 3.4s violates n - q <= 4(s-q) + 3."""
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    for s in range(1, s_max + 1):
        n_min = ceil(Fraction(17 * s, 5))
        q_min = int(Fraction(s, 5) + 1) + 1  # least integer strictly above s/5 + 1
        # n + 3q is increasing in both arguments: the corner is the worst case.
        if not n_min - q_min > 4 * (s - q_min) + 3:
            return False
        if Fraction(fact4_q0_bound(s)) > Fraction(s, 5) + 1:
            return False
    return True
