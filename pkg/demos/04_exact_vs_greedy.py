"""
How close is greedy to optimal on small graphs?
===============================================

For graphs up to about 20 vertices the branch-and-bound solver gives the
exact total domination number.  The 6-cycle is a case where the exact value,
the greedy value and the bound all coincide.
"""

from collections import Counter

from totdom import build, closed_bound, exact_gamma_t, exhaustive_gamma_t, gen_min_degree, greedy_tds

c6 = build(3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])
res = exact_gamma_t(c6)
print("C6: exact", res.gamma_t, "| brute force", exhaustive_gamma_t(c6),
      "| greedy", len(greedy_tds(c6)[0]), "| bound", 6 * closed_bound(2).exact)

gaps = Counter()
for seed in range(200):
    g = gen_min_degree(8, 8, 2, extra_prob=0.15, seed=seed)
    gaps[len(greedy_tds(g)[0]) - exact_gamma_t(g).gamma_t] += 1
print("\ngreedy minus optimum over 200 random 8+8 graphs:")
for gap in sorted(gaps):
    print(f"  {gap}: {gaps[gap]}")
