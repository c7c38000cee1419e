# The 11-vertex board: maximum admissible weight against W.
#
# Builds the s-independent structure once (about 20 s), then each s costs
# about a second.

import time

from erdos3.board import check_ineq7, classify, format_config, forced_members
from erdos3.extremal import n1_exact

print("forced members:", format_config(forced_members()))
print(classify(forced_members()))

t = time.perf_counter()
r = check_ineq7(25, "bound")
print(f"s=25 bound: verified={r.verified} max={r.max_config_weight} W={r.W} "
      f"pair-sets={r.pair_sets_total} ({r.configs_explored} up to symmetry) "
      f"{time.perf_counter() - t:.1f}s")
for n in (n1_exact(25) - 1, n1_exact(25)):
    r = check_ineq7(25, "exact", n)
    print(f"s=25 n={n}: verified={r.verified}")

# walk down until the check stops going through
for s in range(24, 3, -1):
    r = check_ineq7(s, "bound")
    if not r.verified:
        print(f"first failure at s={s}: exceeds W by {r.max_config_weight - r.W}")
        print("witness:", format_config(r.witness))
        break
