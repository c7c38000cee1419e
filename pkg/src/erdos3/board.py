"""Exhaustive check of the per-board weight inequality on the 11-vertex board.

The board has vertices 1, d and three columns a_i < b_i < c_i.  The only order
relations assumed are 1 < v for every v, a_i < b_i < c_i inside a column, and
nothing else (d and vertices in different columns are incomparable).  A set A
is dominated by B (same size) when some bijection A -> B moves every vertex
to one that is >= it in this partial order; such a domination holds in every
linear extension, so closing downward under it is sound.

A configuration is *admissible* when it

* contains the forced members (the three columns and {1,d,a_i}, {1,d,b_i}),
* is closed downward under domination (pairs and triples separately),
* contains H ∪ {v} for every pair H it contains and every board vertex v,
* has no pair through d and no member of size below 2,
* has no four pairwise disjoint members.

:func:`check_ineq7` maximizes the total weight over all admissible
configurations and compares it with W, the weight of the complete board.
Four disjoint members on 11 vertices always include a pair, so the problem
splits into an outer enumeration of pair-sets P and, for each, a minimum
weight upset X of triples that breaks every 4-matching P can still complete.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, lcm
from typing import Iterable

from .extremal import n1_exact
from .weights import shape_weight, W_complete

__all__ = [
    "LABELS",
    "BoardSet",
    "BoardConfig",
    "bset",
    "board_dominates",
    "forced_members",
    "complete_config",
    "admissibility_violation",
    "is_admissible",
    "Classification",
    "classify",
    "config_weight",
    "CaseReport",
    "check_ineq7",
    "bound_form_threshold",
    "check_xyz",
    "check_case1_ineq",
    "check_final_ineq",
    "check_eq8_bound",
    "permute_columns",
    "admissible_pair_sets",
    "completions",
    "config_members",
    "format_config",
]

log = logging.getLogger(__name__)

LABELS = ("1", "d", "a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3")
_IDX = {name: i for i, name in enumerate(LABELS)}
ONE, D = 0, 1

BoardSet = frozenset  # of labels
BoardConfig = frozenset  # of BoardSet

#: Hard cap on inner branch-and-bound nodes per run of check_ineq7.
BOARD_MAX_INNER_NODES = 5_000_000


def bset(*labels: str) -> frozenset:
    for x in labels:
        if x not in _IDX:
            raise ValueError(f"unknown board vertex {x!r}")
    return frozenset(labels)


def _col(v: int) -> int | None:
    return None if v < 2 else (v - 2) // 3


def _rank(v: int) -> int:
    return (v - 2) % 3


def _le(x: int, y: int) -> bool:
    if x == y or x == ONE:
        return True
    return x >= 2 and y >= 2 and _col(x) == _col(y) and _rank(x) <= _rank(y)


def _dom(A: tuple[int, ...], B: tuple[int, ...]) -> bool:
    return len(A) == len(B) and any(
        all(_le(a, b) for a, b in zip(A, perm)) for perm in permutations(B)
    )


def board_dominates(A: Iterable[str], B: Iterable[str]) -> bool:
    """A is below B: a bijection A -> B never moves a vertex down."""
    a, b = tuple(_IDX[x] for x in A), tuple(_IDX[x] for x in B)
    if len(a) != len(b):
        raise ValueError("domination compares sets of equal size")
    return _dom(a, b)


def _spread(t: tuple[int, ...]) -> int:
    return len({_col(v) for v in t} - {None})


def _vmask(t) -> int:
    return sum(1 << v for v in t)


@dataclass(frozen=True)
class _Tables:
    pairs: tuple[tuple[int, int], ...]
    triples: tuple[tuple[int, int, int], ...]
    pdown: tuple[int, ...]
    tdown: tuple[int, ...]
    tup: tuple[int, ...]
    sup: tuple[int, ...]
    forced: int
    order: tuple[int, ...]
    perms: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


@lru_cache(maxsize=None)
def _tables() -> _Tables:
    pairs = tuple(p for p in combinations(range(11), 2) if D not in p)
    triples = tuple(combinations(range(11), 3))
    tid = {t: i for i, t in enumerate(triples)}
    NP, NT = len(pairs), len(triples)
    pdown = tuple(
        sum(1 << j for j in range(NP) if _dom(pairs[j], pairs[i])) for i in range(NP)
    )
    tdom = [[_dom(triples[j], triples[i]) for j in range(NT)] for i in range(NT)]
    tdown = tuple(sum(1 << j for j in range(NT) if tdom[i][j]) for i in range(NT))
    tup = tuple(sum(1 << j for j in range(NT) if tdom[j][i]) for i in range(NT))
    sup = []
    for p in pairs:
        m = 0
        for v in range(11):
            if v not in p:
                m |= tdown[tid[tuple(sorted(p + (v,)))]]
        sup.append(m)
    forced = 0
    for t in _forced_seeds():
        forced |= tdown[tid[t]]
    order = tuple(sorted(range(NP), key=lambda i: (pdown[i].bit_count(), i)))
    # Column permutations, as maps on pair ids and triple ids.
    pid = {p: i for i, p in enumerate(pairs)}
    perms = []
    for sigma in permutations(range(3)):
        vmap = [0, 1] + [2 + 3 * sigma[_col(v)] + _rank(v) for v in range(2, 11)]
        pm = tuple(pid[tuple(sorted(vmap[v] for v in p))] for p in pairs)
        tm = tuple(tid[tuple(sorted(vmap[v] for v in t))] for t in triples)
        perms.append((pm, tm))
    return _Tables(pairs, triples, pdown, tdown, tup, tuple(sup), forced, order, tuple(perms))


@lru_cache(maxsize=None)
def _ids() -> tuple[dict, dict]:
    tb = _tables()
    return ({p: i for i, p in enumerate(tb.pairs)}, {t: i for i, t in enumerate(tb.triples)})


def _forced_seeds() -> list[tuple[int, int, int]]:
    seeds = [(2, 3, 4), (5, 6, 7), (8, 9, 10)]
    for c in range(3):
        seeds += [(ONE, D, 2 + 3 * c), (ONE, D, 3 + 3 * c)]
    return seeds


def _to_config(pmask: int, tmask: int) -> BoardConfig:
    tb = _tables()
    out = set()
    for i, p in enumerate(tb.pairs):
        if pmask >> i & 1:
            out.add(frozenset(LABELS[v] for v in p))
    for i, t in enumerate(tb.triples):
        if tmask >> i & 1:
            out.add(frozenset(LABELS[v] for v in t))
    return frozenset(out)


def forced_members() -> BoardConfig:
    """Columns and {1,d,a_i}, {1,d,b_i}, closed downward."""
    return _to_config(0, _tables().forced)


def complete_config() -> BoardConfig:
    """All 165 board triples and no pairs."""
    return _to_config(0, (1 << 165) - 1)


def _split(c: Iterable[Iterable[str]]) -> tuple[list[tuple[int, ...]], str | None]:
    members = []
    for h in c:
        try:
            members.append(tuple(sorted(_IDX[x] for x in h)))
        except KeyError as exc:
            return [], f"unknown board vertex {exc.args[0]!r}"
    return members, None


def admissibility_violation(c: Iterable[Iterable[str]]) -> str | None:
    """Name of the first violated admissibility clause, or None."""
    members, err = _split(c)
    if err:
        return err
    have = set(members)
    if any(len(h) not in (2, 3) or len(set(h)) != len(h) for h in members):
        return "size: every member must be a pair or a triple"
    if any(len(h) == 2 and D in h for h in members):
        return "d-pair: no pair may contain d"
    tb = _tables()
    for i, t in enumerate(tb.triples):
        if tb.forced >> i & 1 and t not in have:
            return f"forced: missing {_names(t)}"
    pid, tid = _ids()
    pmask = sum(1 << pid[h] for h in members if len(h) == 2)
    tmask = sum(1 << tid[h] for h in members if len(h) == 3)
    for h in members:
        if len(h) == 2:
            gap, pool = tb.pdown[pid[h]] & ~pmask, tb.pairs
        else:
            gap, pool = tb.tdown[tid[h]] & ~tmask, tb.triples
        if gap:
            g = pool[(gap & -gap).bit_length() - 1]
            return f"downward: {_names(g)} is below {_names(h)} but absent"
    for h in members:
        if len(h) == 2:
            for v in range(11):
                if v not in h and tuple(sorted(h + (v,))) not in have:
                    return f"pair-superset: {_names(h)} present without {_names(tuple(sorted(h + (v,))))}"
    masks = sorted(_vmask(h) for h in members)
    found = _four_disjoint(masks)
    if found:
        return "4-matching: " + ", ".join(
            _names(tuple(v for v in range(11) if m >> v & 1)) for m in found
        )
    return None


def _four_disjoint(masks: list[int]) -> list[int] | None:
    def rec(start: int, used: int, chosen: list[int]):
        if len(chosen) == 4:
            return chosen
        for j in range(start, len(masks)):
            if not masks[j] & used:
                hit = rec(j + 1, used | masks[j], chosen + [masks[j]])
                if hit:
                    return hit
        return None

    return rec(0, 0, [])


def _names(t) -> str:
    return "{" + ",".join(LABELS[v] for v in t) + "}"


def config_members(c: Iterable[Iterable[str]]) -> list[list[str]]:
    """Members as label lists, in board order, pairs before triples."""
    keyed = sorted((len(h), sorted(_IDX[x] for x in h)) for h in c)
    return [[LABELS[v] for v in h] for _, h in keyed]


def format_config(c: Iterable[Iterable[str]]) -> str:
    return " ".join("{" + ",".join(h) + "}" for h in config_members(c))


def is_admissible(c: Iterable[Iterable[str]]) -> bool:
    return admissibility_violation(c) is None


def permute_columns(c: BoardConfig, sigma: tuple[int, int, int]) -> BoardConfig:
    """Image of a configuration under the column permutation i -> sigma[i]."""
    def img(x: str) -> str:
        return x if x in ("1", "d") else f"{x[0]}{sigma[int(x[1]) - 1] + 1}"

    return frozenset(frozenset(img(x) for x in h) for h in c)


@dataclass(frozen=True)
class Classification:
    wide_triples: int
    medium_triples: int
    narrow_triples: int
    wide_pairs: int
    narrow_pairs: int
    narrow_pairs_per_column: tuple[int, int, int]
    BC: frozenset = field(default_factory=frozenset)
    AB: frozenset = field(default_factory=frozenset)
    AC: frozenset = field(default_factory=frozenset)
    BC_bar: frozenset = field(default_factory=frozenset)
    AB_bar: frozenset = field(default_factory=frozenset)
    AC_bar: frozenset = field(default_factory=frozenset)
    BC_barbar: frozenset = field(default_factory=frozenset)
    AB_barbar: frozenset = field(default_factory=frozenset)
    AC_barbar: frozenset = field(default_factory=frozenset)


def classify(c: BoardConfig) -> Classification:
    """Counts by size and spread, plus the wide-pair classes between rows.

    ``XY`` holds the wide pairs meeting rows X and Y; ``XY_bar`` adds the pairs
    inside the later row and ``XY_barbar`` also those inside the earlier row.
    """
    why = admissibility_violation(c)
    if why:
        raise ValueError(f"inadmissible configuration ({why})")
    members, _ = _split(c)
    counts = {(3, 3): 0, (3, 2): 0, (3, 1): 0, (2, 2): 0, (2, 1): 0}
    per_col = [0, 0, 0]
    for h in members:
        z = _spread(h)
        counts[len(h), z] += 1
        if len(h) == 2 and z == 1:
            per_col[next(_col(v) for v in h if v >= 2)] += 1
    row = {"A": 0, "B": 1, "C": 2}
    pairs = [h for h in members if len(h) == 2]

    def rows_of(h):
        return [_rank(v) if v >= 2 else None for v in h]

    def between(x, y):
        return frozenset(
            frozenset(LABELS[v] for v in h)
            for h in pairs
            if _spread(h) == 2 and sorted(rows_of(h)) == sorted([row[x], row[y]])
        )

    def inside(x):
        return frozenset(
            frozenset(LABELS[v] for v in h)
            for h in pairs
            if _spread(h) == 2 and rows_of(h) == [row[x], row[x]]
        )

    out = {}
    for lo, hi in (("A", "B"), ("B", "C"), ("A", "C")):
        base = between(lo, hi)
        out[lo + hi] = base
        out[lo + hi + "_bar"] = base | inside(hi)
        out[lo + hi + "_barbar"] = base | inside(hi) | inside(lo)
    return Classification(
        counts[3, 3], counts[3, 2], counts[3, 1], counts[2, 2], counts[2, 1],
        tuple(per_col), **out,
    )


def _pair_numerator(s: int, n: int | None, mode: str) -> Fraction:
    if s < 4:
        raise ValueError("board weights need s >= 4")
    if mode == "bound":
        return Fraction(s, 2) + 1
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    if n is None or n < 3 * s + 3:
        raise ValueError("exact mode needs n >= 3s + 3")
    return Fraction(n - 3 * s - 2)


def config_weight(c: BoardConfig, s: int, n: int | None = None, mode: str = "exact",
                  check: bool = True) -> Fraction:
    """Σ w(H) over the members of c.

    In ``"bound"`` mode pair weights use s/2 + 1 in place of n - 3s - 2,
    which dominates every n <= 3.5s + 3.
    """
    if check:
        why = admissibility_violation(c)
        if why:
            raise ValueError(f"inadmissible configuration ({why})")
    num = _pair_numerator(s, n, mode)
    members, err = _split(c)
    if err:
        raise ValueError(err)
    total = Fraction(0)
    for h in members:
        total += shape_weight(len(h), _spread(h), s, num)
    return total


# -- exhaustive search -----------------------------------------------------------

@dataclass(frozen=True)
class _PairCase:
    pmask: int
    required: int  # triples every completion must contain
    excluded: int  # triples every completion must omit (an upset)
    conflicts: tuple[int, ...]  # triple sets of which a completion must omit one


def _conflict_templates():
    """4-matchings on the board, grouped by the pairs they use.

    Returns dicts from a sorted tuple of pair ids to lists of triple-id masks:
    the triples that, with those pairs, would form four disjoint members.
    """
    tb = _tables()
    tid = {t: i for i, t in enumerate(tb.triples)}
    pmasks = [_vmask(p) for p in tb.pairs]

    def triple_packings(rest: list[int], k: int):
        if k == 0:
            yield 0
            return
        for t in combinations(rest, 3):
            if k > 1 and t[0] != rest[0] and len(rest) == 3 * k:
                continue
            others = [v for v in rest if v not in t]
            for more in triple_packings(others, k - 1):
                yield more | (1 << tid[t])

    def packings(rest: list[int], k: int):
        # k disjoint triples inside rest, no repeated sets
        seen = set()
        for combo in combinations(combinations(rest, 3), k):
            used = 0
            ok = True
            for t in combo:
                m = _vmask(t)
                if used & m:
                    ok = False
                    break
                used |= m
            if ok:
                mk = sum(1 << tid[t] for t in combo)
                if mk not in seen:
                    seen.add(mk)
                    yield mk

    templates: dict[tuple[int, ...], list[int]] = {}
    NP = len(tb.pairs)
    for r in (1, 2, 3):
        for combo in combinations(range(NP), r):
            used = 0
            ok = True
            for i in combo:
                if used & pmasks[i]:
                    ok = False
                    break
                used |= pmasks[i]
            if not ok:
                continue
            rest = [v for v in range(11) if not used >> v & 1]
            templates[combo] = list(packings(rest, 4 - r))
    return templates


@lru_cache(maxsize=None)
def _structure() -> tuple[tuple[_PairCase, ...], int]:
    """All admissible pair-sets up to column symmetry, with their constraints.

    Returns the canonical cases and the total number of admissible pair-sets.
    """
    tb = _tables()
    templates = _conflict_templates()
    NP = len(tb.pairs)
    pmasks = [_vmask(p) for p in tb.pairs]
    cases: list[_PairCase] = []
    total = 0

    def canonical(P: int) -> bool:
        for pm, _ in tb.perms[1:]:
            img = 0
            for i in range(NP):
                if P >> i & 1:
                    img |= 1 << pm[i]
            if img < P:
                return False
        return True

    def finish(P: int, R: int, conflicts: list[int]) -> None:
        X = 0
        reduced = set()
        for c in conflicts:
            live = c & ~R
            if not live & (live - 1):
                X |= tb.tup[live.bit_length() - 1]
            else:
                reduced.add(live)
        assert not X & R
        kept = tuple(sorted(c for c in reduced if not c & X))
        cases.append(_PairCase(P, R, X, kept))

    def dfs(k: int, P: int, plist: list[int], R: int, conflicts: list[int]) -> None:
        nonlocal total
        if k == NP:
            total += 1
            if canonical(P):
                finish(P, R, conflicts)
            return
        i = tb.order[k]
        if tb.pdown[i] & ~(1 << i) & ~P == 0:
            new = list(templates[(i,)])
            disjoint = [q for q in plist if not pmasks[q] & pmasks[i]]
            four_pairs = False
            for a, q in enumerate(disjoint):
                new += templates[tuple(sorted((i, q)))]
                for r in disjoint[a + 1:]:
                    if pmasks[q] & pmasks[r]:
                        continue
                    new += templates[tuple(sorted((i, q, r)))]
                    if any(not pmasks[x] & (pmasks[q] | pmasks[r])
                           for x in disjoint if x not in (q, r)):
                        four_pairs = True
            R2 = R | tb.sup[i]
            merged = conflicts + new
            if not four_pairs and all(c & ~R2 for c in merged):
                dfs(k + 1, P | (1 << i), plist + [i], R2, merged)
        dfs(k + 1, P, plist, R, conflicts)

    dfs(0, 0, [], tb.forced, [])
    return tuple(cases), total


def admissible_pair_sets() -> list[frozenset]:
    """Every pair-set (up to column symmetry) that some admissible configuration uses."""
    tb = _tables()
    out = []
    for case in _structure()[0]:
        out.append(frozenset(
            frozenset(LABELS[v] for v in tb.pairs[i])
            for i in range(len(tb.pairs)) if case.pmask >> i & 1
        ))
    return out


def completions() -> Iterable[BoardConfig]:
    """One admissible configuration for each pair-set of :func:`admissible_pair_sets`.

    Each conflict is broken by excluding the upset of its first live triple;
    this is always possible because the required triples form a downset.
    """
    tb = _tables()
    for case in _structure()[0]:
        X = case.excluded
        for c in case.conflicts:
            if not c & X:
                live = c & ~case.required
                X |= tb.tup[(live & -live).bit_length() - 1]
        yield _to_config(case.pmask, ((1 << 165) - 1) & ~X)


def _scaled_weights(s: int, num: Fraction) -> tuple[int, list[int], list[int]]:
    tb = _tables()
    tw = [shape_weight(3, _spread(t), s, 0) for t in tb.triples]
    pw = [shape_weight(2, _spread(p), s, num) for p in tb.pairs]
    scale = lcm(*(w.denominator for w in tw + pw))
    return scale, [int(w * scale) for w in tw], [int(w * scale) for w in pw]


def _min_exclusion(case: _PairCase, tw: list[int], limit: int, budget: list[int]) -> tuple[int, int] | None:
    """Cheapest upset X ⊇ case.excluded, disjoint from case.required, meeting
    every conflict, provided its weight is below ``limit``.

    Returns (weight, X) or None when no such X is below the limit.
    """
    tb = _tables()

    def wsum(m: int) -> int:
        t = 0
        while m:
            low = m & -m
            t += tw[low.bit_length() - 1]
            m ^= low
        return t

    best: list = [limit, None]
    confs = case.conflicts

    def rec(X: int, keep: int, wX: int) -> None:
        budget[0] -= 1
        if budget[0] < 0:
            raise _InnerBudget
        if wX >= best[0]:
            return
        pick, fewest = None, 99
        for c in confs:
            if c & X:
                continue
            free = c & ~keep
            k = free.bit_count()
            if k < fewest:
                pick, fewest = free, k
                if k <= 1:
                    break
        if pick is None:
            best[0], best[1] = wX, X
            return
        kp = keep
        while pick:
            low = pick & -pick
            pick ^= low
            j = low.bit_length() - 1
            add = tb.tup[j] & ~X
            if not add & kp:
                rec(X | add, kp, wX + wsum(add))
            kp |= tb.tdown[j]
            if kp & X:
                break

    rec(case.excluded, case.required, wsum(case.excluded))
    if best[1] is None:
        return None
    return best[0], best[1]


class _InnerBudget(Exception):
    pass


@dataclass(frozen=True)
class CaseReport:
    s: int
    n: int | None
    mode: str
    max_config_weight: Fraction
    W: Fraction
    verified: bool
    configs_explored: int
    pair_sets_total: int
    inner_nodes: int
    witness: BoardConfig | None = None

    def to_json(self) -> dict:
        out = {
            "s": self.s,
            "n": self.n,
            "mode": self.mode,
            "verified": self.verified,
            "max_weight": {"num": self.max_config_weight.numerator,
                           "den": self.max_config_weight.denominator},
            "W": {"num": self.W.numerator, "den": self.W.denominator},
            "configs_explored": self.configs_explored,
        }
        if self.witness is not None:
            out["witness"] = config_members(self.witness)
        return out


def check_ineq7(s: int, mode: str = "bound", n: int | None = None,
                max_inner_nodes: int = BOARD_MAX_INNER_NODES) -> CaseReport:
    """Maximum admissible configuration weight versus W.

    ``mode="exact"`` uses pair numerator n - 3s - 2 (n defaults to n1(s));
    ``mode="bound"`` uses s/2 + 1, valid for every n <= 3.5s + 3.
    """
    if mode == "exact" and n is None:
        n = n1_exact(s)
    num = _pair_numerator(s, n, mode)
    cases, total = _structure()
    scale, tw, pw = _scaled_weights(s, num)
    W = W_complete(s)
    assert sum(tw) == W * scale
    gain, best_case, best_X = 0, None, None
    budget = [max_inner_nodes]
    for case in cases:
        wP = sum(pw[i] for i in range(len(pw)) if case.pmask >> i & 1)
        # The configuration weighs W + wP - w(X); look for w(X) < wP - gain.
        try:
            hit = _min_exclusion(case, tw, wP - gain, budget)
        except _InnerBudget:
            from .search import BudgetExceeded
            raise BudgetExceeded(
                f"board search for s={s} exceeded {max_inner_nodes} inner nodes; "
                f"best gain so far {Fraction(gain, scale)}"
            ) from None
        if hit is not None and wP - hit[0] > gain:
            gain, best_case, best_X = wP - hit[0], case, hit[1]
    best = W + Fraction(gain, scale)
    verified = best <= W
    witness = None
    if not verified:
        witness = _to_config(best_case.pmask, ((1 << 165) - 1) & ~best_X)
        log.warning("s=%d mode=%s: admissible configuration exceeds W by %s",
                    s, mode, best - W)
    return CaseReport(
        s, n if mode == "exact" else None, mode, best, W, verified,
        len(cases), total, max_inner_nodes - budget[0], witness,
    )


def bound_form_threshold(s_max: int = 40, s_min: int = 4) -> int | None:
    """Smallest s such that bound-form verification succeeds for every s' in [s, s_max]."""
    ok = None
    for s in range(s_max, s_min - 1, -1):
        if not check_ineq7(s, "bound").verified:
            break
        ok = s
    return ok


# -- the scalar inequalities of the case analysis -------------------------------

def check_xyz(x: int, y: int, s: int) -> bool:
    """x wide pairs at the bound weight plus all 9 narrow pairs outweighed by y wide triples."""
    if s < 3 or x < 0 or y < 0:
        raise ValueError("need s >= 3 and x, y >= 0")
    lhs = x * (Fraction(s, 2) + 1) / (s - 2) + Fraction(9 * s, (s - 1) * (s - 2))
    return lhs <= y


def check_case1_ineq(s: int) -> bool:
    """3s/((s-1)(s-2)) <= 9/(s-2)."""
    if s < 3:
        raise ValueError("need s >= 3")
    return Fraction(3 * s, (s - 1) * (s - 2)) <= Fraction(9, s - 2)


def check_final_ineq(s: int) -> bool:
    """12 (s/2+1)/(s-2) + 9s/((s-1)(s-2)) - 12/(s-2) <= 7."""
    if s < 3:
        raise ValueError("need s >= 3")
    lhs = (12 * (Fraction(s, 2) + 1) / (s - 2) + Fraction(9 * s, (s - 1) * (s - 2))
           - Fraction(12, s - 2))
    return lhs <= 7


def check_eq8_bound(s: int, n: int | None = None) -> bool:
    """(n-3s-3)/C(s-1,2) <= s/((s-1)(s-2)) at n = n1(s) unless n is given."""
    if s < 3:
        raise ValueError("need s >= 3")
    if n is None:
        n = n1_exact(s)
    return Fraction(n - 3 * s - 3, comb(s - 1, 2)) <= Fraction(s, (s - 1) * (s - 2))
