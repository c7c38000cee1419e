"""Downward plus pair-superset closure on the board, built on the MILP oracle's order."""

from itertools import combinations

from erdos3.board import LABELS

from .board_milp import set_below

IDX = {x: i for i, x in enumerate(LABELS)}
PAIRS = [frozenset(LABELS[v] for v in p) for p in combinations(range(11), 2) if 1 not in p]
TRIPLES = [frozenset(LABELS[v] for v in t) for t in combinations(range(11), 3)]


def _key(h):
    return tuple(sorted(IDX[x] for x in h))


BELOW = {
    h: frozenset(g for g in (PAIRS if len(h) == 2 else TRIPLES) if set_below(_key(g), _key(h)))
    for h in PAIRS + TRIPLES
}


def closure(members):
    cur = set(map(frozenset, members))
    while True:
        new = set(cur)
        for h in cur:
            new |= BELOW.get(h, {h})
            if len(h) == 2:
                new.update(h | {v} for v in LABELS if v not in h)
        if new == cur:
            return frozenset(cur)
        cur = new
