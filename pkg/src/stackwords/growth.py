"""
The exponential growth rate of the dominant term in the three-stack
bound.

Writing k = x*n, the n-th root of the k-th summand of
:func:`stackwords.counting.three_stack_bound` converges to a function
growth_rate(x) on [0, 1/2]. Its maximum, about 12.53296 at
x ~ 0.2883919, bounds the limit of the n-th root of the 3-stack sortable
count. Everything here is double-precision with explicit tolerances; all
products of powers are evaluated in log space to stay stable near the
endpoints, where x*ln(x) and (2x-1)*ln(1-2x) are extended by their limit
value 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .counting import binomial, three_stack_bound, two_stack_count_by_descents

_EDGE = 1e-9  # search interval is [_EDGE, 0.5 - _EDGE]
_UNIMODALITY_GRID = 10_000

MAXIMIZER_METHODS = ("golden_section", "derivative_bisection")


def _log_growth_rate(x: float) -> float:
    if not 0.0 <= x <= 0.5:
        raise ValueError(f"x={x} outside [0, 1/2]")
    total = math.log1p(x) + (2.0 - x) * math.log(2.0 - x)
    if x > 0.0:
        total -= 3.0 * x * math.log(x)  # x ln x -> 0 as x -> 0+
    total += (x - 1.0) * math.log1p(-x)
    if x < 0.5:
        total += (2.0 * x - 1.0) * math.log1p(-2.0 * x)  # -> 0 as x -> 1/2-
    total += x * math.log((x + 1.0) / 4.0)
    return total


def growth_rate(x: float) -> float:
    """
    (1+x) * (2-x)^(2-x) * x^(-3x) * (1-x)^(x-1) * (1-2x)^(2x-1) * ((x+1)/4)^x

    on [0, 1/2], extended continuously to the endpoints: growth_rate(0)
    is 4 and growth_rate(0.5) is 27/4.

    >>> growth_rate(0.0)
    4.0
    """
    return math.exp(_log_growth_rate(x))


def growth_rate_unsimplified(x: float) -> float:
    """
    The same function before algebraic simplification:

        (1+x)^(1+x) (2-x)^(2-x) (2-2x)^(2-2x)
        --------------------------------------------------
        x^x (1-x)^(1-x) (2x)^(2x) (2-2x)^(2-2x) (1-2x)^(1-2x)

    Defined on the open interval only; used to cross-check growth_rate
    (they agree to ~1e-15 relative on a fine grid).
    """
    if not 0.0 < x < 0.5:
        raise ValueError(f"x={x} outside (0, 1/2)")
    total = (
        (1.0 + x) * math.log1p(x)
        + (2.0 - x) * math.log(2.0 - x)
        + (2.0 - 2.0 * x) * math.log(2.0 - 2.0 * x)
        - x * math.log(x)
        - (1.0 - x) * math.log1p(-x)
        - 2.0 * x * math.log(2.0 * x)
        - (2.0 - 2.0 * x) * math.log(2.0 - 2.0 * x)
        - (1.0 - 2.0 * x) * math.log1p(-2.0 * x)
    )
    return math.exp(total)


def critical_point() -> float:
    """
    The closed-form root of the derivative of growth_rate:

        (27 + 12*sqrt(417))^(1/3) / 12
        - 13 / (4 * (27 + 12*sqrt(417))^(1/3))
        + 1/4

    about 0.2883918927.
    """
    r = (27.0 + 12.0 * math.sqrt(417.0)) ** (1.0 / 3.0)
    return r / 12.0 - 13.0 / (4.0 * r) + 0.25


@dataclass(frozen=True)
class GrowthMaximum:
    x_star: float
    g_star: float
    method: str
    iterations: int
    tolerance: float


def _assert_unimodal() -> None:
    # One strict local maximum on a uniform grid of the open interval;
    # anything else means the search below cannot be trusted.
    step = 0.5 / (_UNIMODALITY_GRID + 1)
    values = [_log_growth_rate((i + 1) * step) for i in range(_UNIMODALITY_GRID)]
    peaks = sum(
        1
        for i in range(1, _UNIMODALITY_GRID - 1)
        if values[i - 1] < values[i] > values[i + 1]
    )
    if peaks != 1:
        raise RuntimeError(f"expected one interior maximum on the scan grid, found {peaks}")


def _golden_section(lo: float, hi: float, tolerance: float) -> tuple[float, int]:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc = _log_growth_rate(c)
    fd = _log_growth_rate(d)
    iterations = 0
    while b - a > tolerance:
        iterations += 1
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = _log_growth_rate(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = _log_growth_rate(d)
    return (a + b) / 2.0, iterations


def _derivative_bisection(lo: float, hi: float, tolerance: float) -> tuple[float, int]:
    # Bisect on the sign of a central finite difference of the log; the
    # difference step is far above double-rounding noise but well below
    # the curvature scale.
    h = 1e-7

    def slope(x: float) -> float:
        return (_log_growth_rate(x + h) - _log_growth_rate(x - h)) / (2.0 * h)

    a, b = lo + h, hi - h
    if slope(a) <= 0.0 or slope(b) >= 0.0:
        raise RuntimeError("log growth rate is not increasing-then-decreasing on the interval")
    iterations = 0
    while b - a > tolerance:
        iterations += 1
        mid = (a + b) / 2.0
        if slope(mid) > 0.0:
            a = mid
        else:
            b = mid
    return (a + b) / 2.0, iterations


def maximize_growth_rate(tolerance: float = 1e-10, method: str = "golden_section") -> GrowthMaximum:
    """
    Locate the maximum of growth_rate on (0, 1/2) to the given tolerance
    in x. Derivative-free golden-section search is the default; the
    derivative_bisection method is an independent cross-check. Either way
    the result should match critical_point() to ~1e-7.
    """
    if tolerance <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    if method not in MAXIMIZER_METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {MAXIMIZER_METHODS}")
    _assert_unimodal()
    lo, hi = _EDGE, 0.5 - _EDGE
    if method == "golden_section":
        x_star, iterations = _golden_section(lo, hi, tolerance)
    else:
        x_star, iterations = _derivative_bisection(lo, hi, tolerance)
    return GrowthMaximum(
        x_star=x_star,
        g_star=growth_rate(x_star),
        method=method,
        iterations=iterations,
        tolerance=tolerance,
    )


def summand_nth_root(n: int, x: float) -> float:
    """
    The n-th root of the exact k-th summand of the three-stack bound at
    k = round(x*n), computed with big-integer arithmetic and converted
    through the log. Approaches growth_rate(x) from below as n grows;
    the gap behaves like exp(-(3.5*ln(n) + O(1))/n), so convergence is
    slow: still ~2.5% at n = 1000.
    """
    k = round(x * n)
    if not 1 <= k <= (n + 1) // 2:
        raise ValueError(f"k={k} from x={x} outside 1..{(n + 1) // 2}")
    summand = two_stack_count_by_descents(n, k - 1) * binomial(2 * n - 2 * k, n - 1)
    return math.exp(math.log(summand) / n)


def bound_nth_root(n: int) -> float:
    """
    The n-th root of the exact three-stack bound; increases toward the
    limiting growth rate (the maximum of growth_rate) as n grows.
    """
    return math.exp(math.log(three_stack_bound(n)) / n)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
