"""Slow, obviously-correct reference implementations used only by tests."""

from itertools import combinations
from math import comb


def nu_naive(members):
    """Largest k such that some k members are pairwise disjoint, by enumeration."""
    sets = [frozenset(h) for h in set(map(tuple, members))]
    best = 0
    for k in range(1, len(sets) + 1):
        hit = False
        for combo in combinations(sets, k):
            if sum(map(len, combo)) == len(frozenset().union(*combo)):
                hit = True
                break
        if not hit:
            break
        best = k
    return best


def m_all_families(n):
    """m(n, s) for every s by visiting every family of triples (n <= 5)."""
    ts = list(combinations(range(1, n + 1), 3))
    out = {}
    for mask in range(1 << len(ts)):
        fam = [ts[i] for i in range(len(ts)) if mask >> i & 1]
        s = nu_naive(fam)
        out[s] = max(out.get(s, 0), len(fam))
    return out


def n1_linear(s):
    a = comb(3 * s + 2, 3)
    n = s
    while comb(n, 3) - comb(n - s, 3) < a:
        n += 1
    return n


def W_closed(s):
    from fractions import Fraction

    return 27 + Fraction(108, s - 2) + Fraction(30, comb(s - 1, 2))


def is_downset_bruteforce(edges, n):
    """Every triple dominated by an edge is an edge, checked over all pairs."""
    es = set(edges)
    for B in es:
        for A in combinations(range(1, n + 1), 3):
            if all(x <= y for x, y in zip(A, B)) and A not in es:
                return False
    return True
