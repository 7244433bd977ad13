"""
Unequal sides and the doubling construction
===========================================

A graph with |X| != |Y| can be turned into one with equal sides by laying
two copies side by side with the second copy's parts swapped.  Minimum
degree is unchanged and the edge count doubles.
"""

from totdom import double_graph, gen_min_degree, min_degree, verify_bound

g = gen_min_degree(12, 5, k=3, extra_prob=0.1, seed=11)
d = double_graph(g)
print("original:", g, "delta =", min_degree(g))
print("doubled: ", d, "delta =", min_degree(d))

for name, graph in (("original", g), ("doubled", d)):
    rep = verify_bound(graph)
    print(f"{name:9s} |S|={rep.size:3d}  bound={float(rep.bound):7.3f}  "
          f"Henning={rep.henning:7.3f}  ok={rep.satisfied}")
