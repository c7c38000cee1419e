from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from erdos3.core import TripleSystem
from erdos3.extremal import a_of, build_A, build_B
from erdos3.search import m_shifted
from erdos3.weights import (
    BOARD_COLUMNS,
    MatchingFrame,
    WeightParams,
    W_complete,
    eq5_sum,
    eq6_total,
    eq6_total_by_tau,
    find_frame,
    shape_weight,
    spread,
    tau_count,
    taus_containing,
    weight,
)
from oracles.naive import W_closed


def canonical_frame(s, d=2):
    rest = [v for v in range(2, 3 * s + 3) if v != d]
    return MatchingFrame(s, d, tuple(tuple(rest[3 * i : 3 * i + 3]) for i in range(s)))


def test_frame_validation():
    fr = canonical_frame(3)
    assert fr.triples == ((3, 4, 5), (6, 7, 8), (9, 10, 11))
    with pytest.raises(ValueError):
        MatchingFrame(3, 2, ((3, 4, 5), (6, 7, 8)))
    with pytest.raises(ValueError):
        MatchingFrame(2, 2, ((1, 3, 4), (5, 6, 7)))


def test_spread_examples():
    fr = canonical_frame(3)
    assert spread(fr.triples[0], fr) == 1
    assert spread((1, 4, 7), fr) == 2  # 1, b1, c2 in the board naming
    assert spread((1, 2), fr) == 0
    with pytest.raises(ValueError):
        spread((1, 12), fr)


def test_weight_examples():
    fr = canonical_frame(25)
    p = WeightParams(90, 25)
    assert weight((3, 6, 9), fr, p) == 1
    assert weight((3, 6), fr, p) == Fraction(13, 23)
    assert weight((3, 4), fr, p) == Fraction(13, 276)
    assert weight((3, 4, 6), fr, p) == Fraction(1, 23)
    assert weight((3, 4, 5), fr, p) == Fraction(1, 276)
    with pytest.raises(ValueError):
        weight((1, 2), fr, p)
    with pytest.raises(ValueError):
        weight((3,), fr, p)
    with pytest.raises(ValueError):
        WeightParams(11, 3)
    with pytest.raises(ValueError):
        WeightParams(20, 2)


def test_weight_order_and_scaling():
    for s in range(4, 30):
        w = [shape_weight(3, z, s, 0) for z in (3, 2, 1)]
        assert w[0] > w[1] > w[2] > 0
        assert shape_weight(2, 2, s, 4) == 2 * shape_weight(2, 2, s, 2)


@pytest.mark.parametrize("s", range(3, 9))
def test_tau_count_by_enumeration(s):
    fr = canonical_frame(s)
    window = range(1, 3 * s + 3)
    for k in (1, 2, 3):
        for H in combinations(window, k):
            z = spread(H, fr)
            if z >= 1 or k <= 2:
                assert taus_containing(H, fr) == tau_count(z, s)


def test_W_examples():
    assert W_complete(3) == 165
    assert W_complete(25) == 27 + Fraction(108, 23) + Fraction(5, 46)
    for s in range(3, 200):
        assert W_complete(s) == W_closed(s)
        assert comb(s, 3) * W_complete(s) == a_of(s)
    with pytest.raises(ValueError):
        W_complete(2)


def test_board_triple_partition():
    count = {1: 0, 2: 0, 3: 0}
    for t in combinations(range(11), 3):
        z = len({BOARD_COLUMNS[v] for v in t} - {None})
        count[z] += 1
    assert count == {3: 27, 2: 108, 1: 30}


def test_eq5_examples():
    for n, s in [(9, 2), (12, 3), (15, 4), (11, 2)]:
        B = build_B(n, s)
        assert eq5_sum(B, s) == len(B)
    A = build_A(12, 3)
    assert eq5_sum(A, 3) == a_of(3)
    W = m_shifted(9, 2, one_only=True).witness
    assert eq5_sum(W, 2) == len(W)


def test_eq5_refusals():
    below_456 = TripleSystem(9, frozenset(t for t in combinations(range(1, 10), 3)
                                          if t <= (4, 5, 6) and t[2] <= 6 and t[1] <= 5 and t[0] <= 4))
    with pytest.raises(ValueError, match="maximal"):
        eq5_sum(below_456, 2)
    with pytest.raises(ValueError, match="stable"):
        eq5_sum(TripleSystem(9, frozenset({(1, 2, 3), (4, 5, 9)})), 2)
    with pytest.raises(ValueError, match="3s"):
        eq5_sum(build_A(8, 2), 2)
    with pytest.raises(ValueError, match="nu"):
        eq5_sum(build_B(9, 2), 1)


def test_eq6_on_clique():
    A = build_A(12, 3)
    fr = find_frame(A, 3)
    assert fr.d == 2
    p = WeightParams(12, 3)
    assert eq6_total(A, fr, p) == eq6_total_by_tau(A, fr, p) == 165
    A = build_A(15, 4)
    fr, p = find_frame(A, 4), WeightParams(15, 4)
    assert eq6_total(A, fr, p) == eq6_total_by_tau(A, fr, p) == a_of(4)


def test_eq6_refusals():
    B = build_B(12, 3)
    with pytest.raises(ValueError):
        eq6_total(B, find_frame(B, 3), WeightParams(12, 3))
    with pytest.raises(ValueError, match="edges"):
        eq6_total(B, canonical_frame(3, d=5), WeightParams(12, 3))


def test_find_frame_prefers_small_d():
    W = m_shifted(13, 3, one_only=True).witness
    fr = find_frame(W, 3)
    assert all(t in W.edges for t in fr.triples)
    assert fr.d == 2


@given(st.integers(3, 40), st.integers(0, 30))
def test_eq6_by_tau_equals_closed_form_on_B_shapes(s, extra):
    # all spreads at once: every pair and triple of a board-sized window
    fr = canonical_frame(s)
    p = WeightParams(3 * s + 3 + extra, s)
    for H in [(3, 6, 9), (1, 3, 6), (3, 4, 6), (1, 3), (3, 6)]:
        assert tau_count(spread(H, fr), s) * weight(H, fr, p) == sum(
            weight(H, fr, p) for tau in combinations(range(s), 3)
            if {fr.column(v) for v in H} - {None} <= set(tau)
        )
