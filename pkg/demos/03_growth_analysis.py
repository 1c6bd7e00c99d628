"""
How fast does the state space grow?
===================================

The DP visits one state per valid covered-set, and the number of states
with 3k covered vertices is exactly C(n-k, 2k).  This script evaluates
the sum of those terms, confirms the solver visits exactly that many
states on complete graphs, and reproduces the entropy argument that caps
the growth rate at about 1.7549 per vertex.
"""

import math

from tripart import (
    count_lex,
    generate,
    growth_row,
    maximize_g,
    region_audit,
    state_space_sum,
    substitution_chain,
)

# exact sums, their n-th roots, and the dominating term
print("n    sum              root     argmax_k")
for n in range(6, 61, 6):
    row = growth_row(n)
    print(f"{row.n:<4} {row.sum_value:<16} {row.root:.5f}  {row.argmax_k}")

# on K_n every valid state is reachable, so the DP visits 1 + sum states
for n in (6, 9, 12, 15):
    _count, stats = count_lex(generate("complete", n))
    print(f"K{n}: states visited = {stats.states_visited}"
          f" = 1 + {state_space_sum(n)}")

# the k-th term C(n-k,2k) is exp(2n g(gamma)) up to polynomial factors,
# where gamma encodes k/n; maximizing g over [0,1] gives the growth base
best = maximize_g(1e-10)
print(f"gamma* = {best.gamma_star:.6f}  g* = {best.g_star:.6f}"
      f"  base = exp(2 g*) = {best.base:.6f}")

# the n-th root of the sum creeps toward that base from below
for n in (60, 300, 600):
    root = math.exp(math.log(state_space_sum(n)) / n)
    print(f"sum(n={n})^(1/n) = {root:.5f}")

# one row of the substitution chain: everything derived from (k, n)
point = substitution_chain(531, 3000)
print(f"k=531, n=3000: alpha={point.alpha:.5f} beta={point.beta:.5f}"
      f" gamma={point.gamma:.5f} g={point.g_val:.6f}")

# the dominating k sits where alpha = (1 - gamma*)/(3 - gamma*)
row = growth_row(3000)
alpha_star = (1 - best.gamma_star) / (3 - best.gamma_star)
print(f"argmax_k/n at n=3000: {row.argmax_k / 3000:.5f}"
      f" vs predicted {alpha_star:.5f}")

# per-region maxima of the term root, beside the nominal tail constants;
# the middle region is where the action is
for region in region_audit(4200):
    print(f"{region.label:<14} k in [{region.k_lo}, {region.k_hi}]"
          f" max root {region.max_root:.5f}"
          f" (nominal {region.nominal_root})")
