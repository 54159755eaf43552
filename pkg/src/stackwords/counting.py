"""
Exact enumeration of t-stack sortable permutations: closed formulas where
they exist (t = 1, 2), upper bounds where they do not (t = 3), and
brute-force counters that cross-check every formula at desk scale.

All arithmetic is exact big-integer arithmetic. Formula divisions are
checked for exact divisibility: a remainder can only mean a transcription
bug, and fails loudly.
"""
from __future__ import annotations

import csv
import functools
import math
from pathlib import Path

from .machine import is_t_stack_sortable, stack_sort
from .perms import DEFAULT_ENUMERATION_LIMIT, all_permutations, descent_count

_factorial = functools.lru_cache(maxsize=None)(math.factorial)


def binomial(a: int, b: int) -> int:
    """C(a, b), with 0 for b < 0 or b > a."""
    if a < 0:
        raise ValueError(f"negative upper index {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(f"{what}: {numerator} is not divisible by {denominator}")
    return q


def catalan(n: int) -> int:
    """
    The n-th Catalan number C(2n, n)/(n+1): the number of 1-stack
    sortable permutations of length n.

    >>> [catalan(n) for n in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    if n < 0:
        raise ValueError(f"negative length {n}")
    return _exact_div(math.comb(2 * n, n), n + 1, "catalan")


def two_stack_count(n: int) -> int:
    """
    The number of 2-stack sortable permutations of length n:
    2 * C(3n, n) / ((n+1)(2n+1)).

    >>> [two_stack_count(n) for n in range(1, 6)]
    [1, 2, 6, 22, 91]
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    return _exact_div(2 * math.comb(3 * n, n), (n + 1) * (2 * n + 1), "two_stack_count")


def two_stack_count_by_descents(n: int, d: int) -> int:
    """
    The number of 2-stack sortable permutations of length n with exactly
    d descents. With k = d + 1:

        (n+k-1)! (2n-k)! / ( k! (n+1-k)! (2k-1)! (2n-2k+1)! )

    Zero outside 1 <= k <= n.

    >>> [two_stack_count_by_descents(4, d) for d in range(4)]
    [1, 10, 10, 1]
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    k = d + 1
    if not 1 <= k <= n:
        return 0
    numerator = _factorial(n + k - 1) * _factorial(2 * n - k)
    denominator = (
        _factorial(k)
        * _factorial(n + 1 - k)
        * _factorial(2 * k - 1)
        * _factorial(2 * n - 2 * k + 1)
    )
    return _exact_div(numerator, denominator, "two_stack_count_by_descents")


def three_stack_bound(n: int) -> int:
    """
    An upper bound for the number of 3-stack sortable permutations of
    length n, by counting candidate reinsertions of the input-push moves
    into each possible projected word:

        sum over k of two_stack_count_by_descents(n, k-1) * C(2n-2k, n-1)

    for k = 1 .. floor((n+1)/2). This is a bound, not a count: no closed
    formula for the t = 3 count is known.

    >>> [three_stack_bound(n) for n in range(1, 5)]
    [1, 2, 10, 60]
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    return sum(
        two_stack_count_by_descents(n, k - 1) * binomial(2 * n - 2 * k, n - 1)
        for k in range(1, (n + 1) // 2 + 1)
    )


def trivial_bound(n: int, t: int) -> int:
    """
    The easy bound (t+1)^(2n) for the number of t-stack sortable
    permutations of length n, which holds because every such permutation
    avoids one particular pattern of length t+2.
    """
    if n < 1 or t < 1:
        raise ValueError(f"need positive n and t, got n={n}, t={t}")
    return (t + 1) ** (2 * n)


def brute_force_count(n: int, t: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """
    Count t-stack sortable permutations of length n by enumerating all n!
    of them. The independent oracle for every formula above.
    """
    return sum(1 for p in all_permutations(n, limit) if is_t_stack_sortable(p, t))


def brute_force_image_descent_counts(
    n: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> dict[int, int]:
    """
    For 3-stack sortable p of length n, tally how many descents the
    once-sorted image stack_sort(p) has. Keys are descent counts with a
    nonzero tally; the tallies sum to brute_force_count(n, 3).
    """
    counts: dict[int, int] = {}
    for p in all_permutations(n, limit):
        q = stack_sort(p)
        # p is 3-stack sortable iff its image is 2-stack sortable
        if is_t_stack_sortable(q, 2):
            d = descent_count(q)
            counts[d] = counts.get(d, 0) + 1
    return counts


class CountCache:
    """
    Advisory CSV cache of brute-force counts, keyed by (n, t). Format:
    a header line ``n,t,count`` then one decimal row per entry. Cached
    values only skip recomputation; nothing trusts them blindly.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._table: dict[tuple[int, int], int] = {}
        if self.path.exists():
            with self.path.open(newline="") as fh:
                for row in csv.DictReader(fh):
                    self._table[(int(row["n"]), int(row["t"]))] = int(row["count"])

    def get(self, n: int, t: int) -> int | None:
        return self._table.get((n, t))

    def put(self, n: int, t: int, count: int) -> None:
        self._table[(n, t)] = count

    def save(self) -> None:
        with self.path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n", "t", "count"])
            for (n, t), count in sorted(self._table.items()):
                writer.writerow([n, t, count])

    def counted(self, n: int, t: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
        """Cached brute-force count, computing and storing on a miss."""
        hit = self.get(n, t)
        if hit is not None:
            return hit
        count = brute_force_count(n, t, limit)
        self.put(n, t, count)
        return count


if __name__ == "__main__":
    import doctest

    doctest.testmod()
