# Shifting a random family down to a stable one.

import random

from erdos3.core import TripleSystem, all_triples, format_edge_list
from erdos3.matching import max_matching, nu
from erdos3.shifting import is_stable, potential, shift_steps, stabilize

rng = random.Random(1)
n = 8
F = TripleSystem(n, frozenset(rng.sample(all_triples(n), 12)))
print(format_edge_list(F, comment="a random family on [8]"))
print("nu =", nu(F), "witness", max_matching(F), "potential", potential(F))

# each step swaps an edge for a non-edge it dominates
for step, (A, B) in enumerate(shift_steps(F), 1):
    print(f"step {step:2}: {B} -> {A}")

G = stabilize(F)
print("stable:", is_stable(G), " size", len(G), " nu", nu(G), " potential", potential(G))
print(format_edge_list(G))
