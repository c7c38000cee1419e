# Exact m(n, s) at desk scale, next to the two extremal constructions.
#
# m(n, s) is the largest number of triples on [n] with no s+1 pairwise
# disjoint ones.  The two candidates are the clique on 3s+2 vertices and the
# family of all triples meeting [s].

from erdos3.extremal import M_of, a_of, b_of, build_A, build_B, n1_exact
from erdos3.search import m_bruteforce, m_shifted, has_one
from erdos3.matching import nu

# every one of the 2^20 families on six vertices
print("brute force, n=6:", m_bruteforce(6))

# stable families only; shifting never raises the matching number
for n, s in [(6, 1), (7, 1), (8, 1), (9, 2), (10, 2), (11, 2), (12, 3)]:
    r = m_shifted(n, s)
    print(f"n={n:2} s={s}  m={r.m:4}  a={a_of(s):4}  b={b_of(n, s):4}  M={M_of(n, s):4}  "
          f"nodes={r.nodes_explored}")

# the crossover point between the two constructions
for s in range(1, 8):
    print(f"s={s}  n1={n1_exact(s)}")

A, B = build_A(12, 2), build_B(12, 2)
print("clique: ", len(A), "edges, nu", nu(A), "ONE", has_one(A))
print("cover:  ", len(B), "edges, nu", nu(B), "ONE", has_one(B))

# restricting to families with ONE loses edges once the cover wins
print("m_ONE(10,2) =", m_shifted(10, 2, one_only=True).m, "vs M(10,2) =", M_of(10, 2))
