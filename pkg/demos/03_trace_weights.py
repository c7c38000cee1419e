# Traces on [3s+2] and their weights.
#
# For a stable maximal family with ONE, every trace H stands for
# C(n-3s-2, 3-|H|) edges.  Spreading each trace's weight over the 3-sets of
# frame triples gives back |F| exactly.

from fractions import Fraction
from math import comb

from erdos3.core import trace
from erdos3.extremal import a_of, build_B
from erdos3.search import m_shifted
from erdos3.weights import (
    W_complete, WeightParams, eq5_sum, eq6_total, eq6_total_by_tau, find_frame, spread, weight,
)

B = build_B(9, 2)
print("cover family (9,2):", len(B), "edges; trace sum", eq5_sum(B, 2))

r = m_shifted(14, 3, one_only=True)
F = r.witness
print("largest stable ONE family on 14 points with nu=3:", len(F))
frame = find_frame(F, 3)
print("frame", frame.triples, "d =", frame.d)

p = WeightParams(14, 3)
T = trace(F, 11)
for h in T.of_size(2)[:5]:
    print("  pair", h, "spread", spread(h, frame), "weight", weight(h, frame, p))
print("trace sum", eq5_sum(F, 3), " weighted sum", eq6_total(F, frame, p),
      " literal sum over tau", eq6_total_by_tau(F, frame, p))

# one board's share of the clique
for s in (3, 10, 25):
    W = W_complete(s)
    print(f"s={s:2}  W={W}  C(s,3)*W={comb(s, 3) * W}  a(s)={a_of(s)}")
