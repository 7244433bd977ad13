"""
The per-vertex bound and how it compares
========================================

For minimum degree k the greedy set has at most n * B(k) vertices, where
B(k) = 1 - k! / prod_{i=0}^{k-1} (k/(k-1) + i).  Here we print B(k) exactly
and next to the logarithmic bounds (1 + ln k)/k and (1 + ln(k+1))/(k+1).
"""

from totdom import alon_bound, closed_bound, g_exact, henning_bound, improvement_report

# B(k) is an exact fraction; floats only for display
for k in range(2, 7):
    b = closed_bound(k)
    print(f"k={k}  B(k) = {b.exact}  ~ {b.approx:.6f}")

# The same number comes out of the rational recursion g(k, 1)
assert all(g_exact(k, 1, k) == closed_bound(k).exact for k in range(2, 13))

print()
print(f"{'k':>4} {'B(k)':>9} {'(1+ln k)/k':>11} {'margin':>9}")
for row in improvement_report(10):
    print(f"{row.k:>4} {row.new_bound.approx:9.6f} {row.henning:11.6f} {row.margin:9.6f}")

# Margins shrink but stay positive far out
worst = min(henning_bound(k) - closed_bound(k).approx for k in range(2, 1001))
print(f"\nsmallest margin for k <= 1000: {worst:.3e}")
print(f"Alon's domination bound at k=3: {alon_bound(3):.6f}")
