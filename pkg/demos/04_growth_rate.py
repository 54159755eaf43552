"""
The asymptotic growth rate of the 3-stack bound
===============================================

The n-th root of the dominant summand of the insertion bound, taken at
k = x*n, converges to a function of x on [0, 1/2]. Maximizing that
function gives the headline number: the n-th root of the 3-stack
sortable count is asymptotically at most ~12.53296. This walkthrough
plots the function as text, maximizes it three independent ways, and
shows the exact bound's n-th root crawling toward the limit.

Run:  python3 demos/04_growth_rate.py
"""
from stackwords import (
    bound_nth_root,
    critical_point,
    growth_rate,
    maximize_growth_rate,
    summand_nth_root,
)

print("The growth-rate function on [0, 1/2] (4 at the left end, 27/4 at the right):")
for i in range(26):
    x = i * 0.5 / 25
    g = growth_rate(x)
    bar = "#" * round((g - 3.5) * 6)
    print(f"  x={x:5.3f}  g={g:9.6f}  {bar}")

print()
print("Three independent computations of the maximizer:")
golden = maximize_growth_rate(1e-10, "golden_section")
bisect = maximize_growth_rate(1e-10, "derivative_bisection")
closed = critical_point()
print(f"  golden-section search:   x* = {golden.x_star:.10f}  ({golden.iterations} iterations)")
print(f"  derivative bisection:    x* = {bisect.x_star:.10f}  ({bisect.iterations} iterations)")
print(f"  closed-form radical:     x* = {closed:.10f}")
print(f"  maximum growth rate: g(x*) = {golden.g_star:.7f}")

print()
print("The exact summand's n-th root at k = round(x* n) approaches g(x*) from")
print("below; the gap closes like exp(-(3.5 ln n + C)/n), so slowly:")
for n in (100, 200, 500, 1000, 2000):
    root = summand_nth_root(n, closed)
    gap = (golden.g_star - root) / golden.g_star
    print(f"  n={n:>5}: root {root:9.6f}   gap {gap:6.2%}")

print()
print("The n-th root of the whole bound (a sum of < n summands) also rises")
print("toward the same limit, which is what makes 12.53296 an asymptotic")
print("upper bound for the 3-stack sortable count:")
for n in (10, 50, 200, 1000, 2000):
    print(f"  n={n:>5}: {bound_nth_root(n):9.6f}")
