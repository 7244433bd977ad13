"""
Greedy total domination on random regular bipartite graphs
==========================================================

Generate k-regular graphs, run the two greedy passes, and look at how far
the result sits below n * B(k).  The trace of each pass records how many new
vertices every pick covers; on regular graphs this sequence never increases.
"""

from fractions import Fraction

from totdom import closed_bound, gen_k_regular, greedy_tds

n_side, k = 40, 3
g = gen_k_regular(n_side, k, seed=2026)
tds, trace_x, trace_y = greedy_tds(g)

print(g)
print(f"greedy set: {len(tds)} vertices ({tds.from_x} from X, {tds.from_y} from Y)")
print("gains of the X pass:", trace_x.gains)
print("non-increasing:", trace_x.gains_non_increasing() and trace_y.gains_non_increasing())

bound = g.order * closed_bound(k).exact
print(f"bound n*B(k) = {bound} ~ {float(bound):.3f}")

# ratio |S| / (n B(k)) across sizes and degrees
print()
for k in (2, 3, 4, 5):
    ratios = []
    for seed in range(20):
        g = gen_k_regular(60, k, seed)
        size = len(greedy_tds(g)[0])
        ratios.append(Fraction(size) / (g.order * closed_bound(k).exact))
    print(f"k={k}: worst ratio over 20 graphs = {float(max(ratios)):.4f}")
