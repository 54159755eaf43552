"""
Stack sorting basics
====================

A single pass through a stack kept increasing top-to-bottom reorders a
permutation; some permutations need several passes to reach the identity.
This walkthrough sorts a few permutations by hand, then tallies how many
permutations of each length are sortable with 1, 2, or 3 passes.

Run:  python3 demos/01_stack_sorting.py
"""
from stackwords import (
    all_permutations,
    brute_force_count,
    catalan,
    contains_pattern,
    format_permutation,
    is_t_stack_sortable,
    iterate_stack_sort,
    min_sorting_passes,
    stack_sort,
    two_stack_count,
)

print("One pass of the sorting operator:")
for p in [(2, 3, 1), (2, 3, 4, 1), (3, 1, 4, 2)]:
    print(f"  {format_permutation(p)} -> {format_permutation(stack_sort(p))}")

print()
print("Iterating until sorted (each permutation of length n needs at most n-1 passes):")
p = (2, 3, 4, 1)
for t in range(4):
    print(f"  after {t} pass(es): {format_permutation(iterate_stack_sort(p, t))}")
print(f"  minimal passes for {format_permutation(p)}: {min_sorting_passes(p)}")

print()
print("One pass suffices exactly when the permutation avoids the pattern 231:")
for p in all_permutations(3):
    verdict = "sortable" if is_t_stack_sortable(p, 1) else "needs more passes"
    pattern = "avoids 231" if not contains_pattern(p, (2, 3, 1)) else "contains 231"
    print(f"  {format_permutation(p)}: {verdict:16s} ({pattern})")

print()
print("How many permutations of length n are t-pass sortable?")
print(f"  {'n':>2}  {'1 pass':>8}  {'catalan':>8}  {'2 passes':>8}  {'formula':>8}  {'3 passes':>8}")
for n in range(1, 8):
    print(
        f"  {n:>2}  {brute_force_count(n, 1):>8}  {catalan(n):>8}"
        f"  {brute_force_count(n, 2):>8}  {two_stack_count(n):>8}"
        f"  {brute_force_count(n, 3):>8}"
    )
print("The 1- and 2-pass columns match their closed formulas; no formula is")
print("known for the 3-pass column, which is why upper bounds matter.")
