import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from erdos3.board import (
    LABELS,
    admissibility_violation,
    admissible_pair_sets,
    board_dominates,
    bset,
    check_case1_ineq,
    check_eq8_bound,
    check_final_ineq,
    check_ineq7,
    check_xyz,
    classify,
    complete_config,
    completions,
    config_weight,
    forced_members,
    is_admissible,
    permute_columns,
)
from erdos3.extremal import n1_exact
from erdos3.weights import W_complete
from oracles import board_milp
from oracles.board_closure import IDX, PAIRS, TRIPLES, closure

SEEDS = [bset("a1", "b1", "c1"), bset("a2", "b2", "c2"), bset("a3", "b3", "c3")] + [
    bset("1", "d", f"{x}{i}") for i in (1, 2, 3) for x in "ab"
]


def test_order():
    assert board_dominates(["1", "c1"], ["a2", "c1"])
    assert board_dominates(["a1", "b1", "c1"], ["a1", "b1", "c1"])
    assert not board_dominates(["d"], ["a1"])
    assert not board_dominates(["a1", "a2"], ["b1", "d"])
    assert board_dominates(["1", "d", "a1"], ["1", "d", "b1"])
    with pytest.raises(ValueError):
        board_dominates(["a1"], ["a1", "b1"])
    with pytest.raises(ValueError):
        bset("e1")


def test_forced_members():
    fm = forced_members()
    assert bset("1", "d", "a2") in fm
    assert fm == closure(SEEDS)
    assert bset("1", "a1", "a2") not in fm
    assert all(len(h) == 3 for h in fm)
    assert len(fm) == 18
    assert is_admissible(fm)


def test_subcase_II1_example():
    c = closure(forced_members() | {bset("c1", "b2"), bset("a1", "c2", "a3")})
    assert bset("b1", "a2") in c
    assert admissibility_violation(c).startswith("4-matching")


def test_clause_names():
    fm = forced_members()
    assert admissibility_violation(fm | {bset("d", "a1")}).startswith("d-pair")
    assert admissibility_violation(fm | {bset("a1")}).startswith("size")
    assert admissibility_violation(fm - {bset("1", "d", "a1")}).startswith("forced")
    assert admissibility_violation(fm | {bset("c1", "c2", "c3")}).startswith("downward")
    c = fm | {bset("1", "a1")}
    assert admissibility_violation(c).startswith("pair-superset")


def test_fact7_pairs_never_admissible():
    for i in (1, 2, 3):
        for pair in (bset(f"a{i}", f"c{i}"), bset(f"b{i}", f"c{i}")):
            assert not is_admissible(closure(forced_members() | {pair}))
    # and they never appear in any admissible pair-set
    for P in admissible_pair_sets():
        for i in (1, 2, 3):
            assert bset(f"a{i}", f"c{i}") not in P and bset(f"b{i}", f"c{i}") not in P


def test_case1_wide_pair_exclusion():
    BC = ["b1", "b2", "b3", "c1", "c2", "c3"]
    wide = [p for p in PAIRS if len({x[1] for x in p if len(x) == 2}) == 2 and "1" not in p]
    for T1 in combinations(BC, 3):
        T2 = frozenset(BC) - frozenset(T1)
        for p in wide:
            c = closure(forced_members() | {frozenset(T1), T2, p})
            assert not is_admissible(c)


def test_subcase_II1_majorants():
    majorants = [bset(x, "c2", y) for x in ("a1", "b1", "c1") for y in ("a3", "b3", "c3")]
    assert len(majorants) == 9
    for T in majorants:
        assert not is_admissible(closure(forced_members() | {bset("c1", "b2"), T}))


def test_classify_forced():
    k = classify(forced_members())
    assert (k.wide_triples, k.medium_triples, k.narrow_triples) == (0, 0, 18)
    assert k.wide_pairs == k.narrow_pairs == 0
    with pytest.raises(ValueError):
        classify(forced_members() | {bset("d", "a1")})


def test_classify_sets():
    c = next(c for c in completions() if bset("a1", "b2") in c and bset("b1", "b2") in c)
    k = classify(c)
    assert bset("a1", "b2") in k.AB
    assert bset("b1", "b2") not in k.AB
    assert bset("b1", "b2") in k.AB_bar and bset("b1", "b2") in k.AB_barbar
    assert k.AB <= k.AB_bar <= k.AB_barbar
    assert bset("a1", "a2") in k.AB_barbar and bset("a1", "a2") not in k.AB_bar


def test_completions_are_admissible_sample():
    rng = random.Random(11)
    cs = list(completions())
    assert len(cs) == len(admissible_pair_sets())
    for c in rng.sample(cs, 25):
        assert admissibility_violation(c) is None
        k = classify(c)
        assert max(k.narrow_pairs_per_column) <= 3
        assert k.wide_pairs <= 27 and k.narrow_pairs <= 9


def test_config_weight_examples():
    assert config_weight(complete_config(), 25, mode="bound", check=False) == W_complete(25)
    fm = forced_members()
    w = config_weight(fm, 25, 90)
    oracle = sum(board_milp.weight(tuple(sorted(IDX[x] for x in h)), 25, 13) for h in fm)
    assert w == oracle == Fraction(18, 276)
    more = config_weight(fm | {bset("a1", "a2")}, 25, 90, check=False)
    assert more - w == Fraction(13, 23)
    with pytest.raises(ValueError):
        config_weight(fm, 3, 20)
    with pytest.raises(ValueError):
        config_weight(fm, 25)
    with pytest.raises(ValueError):
        config_weight(fm | {bset("d", "a1")}, 25, 90)


def _random_config(rng):
    members = set(forced_members())
    members.update(rng.sample(PAIRS, rng.randint(0, 3)))
    members.update(rng.sample(TRIPLES, rng.randint(0, 40)))
    return closure(members)


def test_symmetry_and_bound_domination():
    rng = random.Random(5)
    for _ in range(40):
        c = _random_config(rng)
        for sigma in permutations(range(3)):
            d = permute_columns(c, sigma)
            assert is_admissible(d) == is_admissible(c)
            assert config_weight(d, 25, 90, check=False) == config_weight(c, 25, 90, check=False)
        for s in (7, 25, 40):
            n = n1_exact(s)
            assert config_weight(c, s, mode="bound", check=False) >= config_weight(c, s, n, check=False)


def test_ineq7_s25_both_modes():
    r = check_ineq7(25, "bound")
    assert r.verified and r.max_config_weight == r.W == W_complete(25)
    for n in (89, 90):
        r = check_ineq7(25, "exact", n)
        assert r.verified and r.n == n
    js = r.to_json()
    assert set(js) == {"s", "n", "mode", "verified", "max_weight", "W", "configs_explored"}
    assert js["max_weight"] == {"num": 1463, "den": 46}


def test_ineq7_failure_emits_admissible_witness():
    r = check_ineq7(6, "bound")
    assert not r.verified and r.max_config_weight - r.W == Fraction(1, 5)
    assert is_admissible(r.witness)
    assert config_weight(r.witness, 6, mode="bound") == r.max_config_weight
    assert "witness" in r.to_json()


@pytest.mark.parametrize("s", [6, 25])
def test_ineq7_against_milp_oracle(s):
    best, chosen = board_milp.max_weight(s, Fraction(s, 2) + 1)
    assert check_ineq7(s, "bound").max_config_weight == best


def test_ineq7_budget_refusal():
    from erdos3.search import BudgetExceeded

    with pytest.raises(BudgetExceeded, match="inner nodes"):
        check_ineq7(25, "bound", max_inner_nodes=10)


def test_xyz_examples():
    assert check_xyz(12, 9, 14)
    assert not check_xyz(12, 9, 13)
    assert Fraction(90, 11) + Fraction(117, 132) > 9
    assert check_xyz(5, 4, 25)
    # x=10, y=6 is short at s=25: 135/23 + 225/552 > 6; it holds from s=32 on
    assert not check_xyz(10, 6, 25)
    assert Fraction(135, 23) + Fraction(225, 552) > 6
    assert [s for s in range(3, 200) if not check_xyz(10, 6, s)][-1] == 31
    with pytest.raises(ValueError):
        check_xyz(1, 1, 2)


def test_case1_and_final():
    assert check_case1_ineq(3)
    with pytest.raises(ValueError):
        check_case1_ineq(2)
    assert all(check_case1_ineq(s) for s in range(3, 2000))
    assert check_final_ineq(25)
    assert not check_final_ineq(20)
    first = next(s for s in range(3, 100) if all(check_final_ineq(t) for t in range(s, 200)))
    assert first <= 25


def test_eq8():
    assert check_eq8_bound(25)
    assert Fraction(10, 276) <= Fraction(25, 552)
    assert all(check_eq8_bound(s) for s in range(3, 2000))
    # with n pushed just past 3.5s + 3 the bound is lost for some s
    assert not all(check_eq8_bound(s, n=(7 * s) // 2 + 4) for s in range(3, 200))
