import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stackwords.growth import (
    MAXIMIZER_METHODS,
    bound_nth_root,
    critical_point,
    growth_rate,
    growth_rate_unsimplified,
    maximize_growth_rate,
    summand_nth_root,
)

# closed-form critical point evaluated in double precision, frozen
X_STAR = 0.28839189261893894


class TestGrowthRate:
    def test_left_endpoint(self):
        assert growth_rate(0.0) == pytest.approx(4.0, abs=1e-12)

    def test_right_endpoint(self):
        assert growth_rate(0.5) == pytest.approx(27 / 4, abs=1e-9)

    def test_value_at_critical_point(self):
        assert growth_rate(X_STAR) == pytest.approx(12.532954622868, abs=1e-9)
        assert abs(growth_rate(0.2883918927) - 12.53296) < 5e-5

    def test_domain(self):
        with pytest.raises(ValueError):
            growth_rate(-0.01)
        with pytest.raises(ValueError):
            growth_rate(0.51)

    @pytest.mark.parametrize("x", [0.1, 0.25, 0.4])
    def test_agrees_with_unsimplified_form(self, x):
        assert growth_rate_unsimplified(x) == pytest.approx(growth_rate(x), rel=1e-12)

    def test_unsimplified_open_interval_only(self):
        with pytest.raises(ValueError):
            growth_rate_unsimplified(0.0)
        with pytest.raises(ValueError):
            growth_rate_unsimplified(0.5)

    @given(st.floats(0.001, 0.499))
    def test_forms_agree_everywhere(self, x):
        assert abs(growth_rate(x) - growth_rate_unsimplified(x)) / growth_rate(x) < 1e-11


class TestCriticalPoint:
    def test_frozen_value(self):
        assert critical_point() == pytest.approx(X_STAR, abs=1e-15)

    def test_interval(self):
        assert 0.28 < critical_point() < 0.29

    def test_stationarity_by_finite_difference(self):
        h = 1e-6
        x = critical_point()
        slope = (math.log(growth_rate(x + h)) - math.log(growth_rate(x - h))) / (2 * h)
        assert abs(slope) < 1e-6


class TestMaximize:
    def test_golden_section_matches_closed_form(self):
        found = maximize_growth_rate(1e-10)
        assert found.method == "golden_section"
        assert found.iterations > 0
        assert abs(found.x_star - critical_point()) < 1e-8
        assert 0.0 < found.x_star < 0.5

    def test_bisection_matches_closed_form(self):
        found = maximize_growth_rate(1e-10, "derivative_bisection")
        assert found.method == "derivative_bisection"
        assert abs(found.x_star - critical_point()) < 1e-8

    def test_g_star_is_reevaluated(self):
        found = maximize_growth_rate(1e-10)
        assert found.g_star == growth_rate(found.x_star)
        assert found.tolerance == 1e-10

    def test_dominates_a_grid(self):
        found = maximize_growth_rate(1e-10)
        for i in range(10_000):
            x = (i + 1) * 0.5 / 10_001
            assert found.g_star >= growth_rate(x) - 1e-12

    def test_methods_agree(self):
        a = maximize_growth_rate(1e-10, "golden_section")
        b = maximize_growth_rate(1e-10, "derivative_bisection")
        assert abs(a.x_star - b.x_star) < 1e-8
        assert a.g_star == pytest.approx(b.g_star, rel=1e-14)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            maximize_growth_rate(0.0)
        with pytest.raises(ValueError):
            maximize_growth_rate(1e-10, "newton")
        assert MAXIMIZER_METHODS == ("golden_section", "derivative_bisection")


class TestSummandRoot:
    def test_frozen_values(self):
        assert summand_nth_root(500, X_STAR) == pytest.approx(11.979385610978825, rel=1e-12)
        assert summand_nth_root(1000, X_STAR) == pytest.approx(12.223408191683257, rel=1e-12)
        assert summand_nth_root(1000, 0.1) == pytest.approx(8.359808404046278, rel=1e-12)

    def test_convergence_toward_growth_rate(self):
        # slow convergence: the gap shrinks like exp(-(3.5 ln n + C)/n)
        for x in (0.1, X_STAR, 0.4):
            target = growth_rate(x)
            gaps = [abs(summand_nth_root(n, x) - target) / target for n in (200, 500, 1000)]
            assert gaps[0] > gaps[1] > gaps[2]
            assert gaps[2] < 0.03

    def test_approaches_from_below(self):
        for n in (200, 500, 1000):
            assert summand_nth_root(n, X_STAR) < growth_rate(X_STAR)

    def test_k_range_guard(self):
        with pytest.raises(ValueError):
            summand_nth_root(100, 0.001)  # k rounds to 0
        with pytest.raises(ValueError):
            summand_nth_root(10, 0.65)  # k = 7 beyond (n+1)/2


class TestBoundRoot:
    def test_single_entry(self):
        assert bound_nth_root(1) == 1.0

    def test_frozen_values(self):
        assert bound_nth_root(10) == pytest.approx(5.354772109777149, rel=1e-12)
        assert bound_nth_root(200) == pytest.approx(11.49425921972356, rel=1e-12)

    def test_increasing_and_below_limit(self):
        roots = [bound_nth_root(n) for n in (10, 50, 200, 1000)]
        assert roots == sorted(roots)
        assert all(r < 12.6 for r in roots)

    def test_within_polynomial_factor_of_max(self):
        # at most n summands, each at most the largest
        g_star = maximize_growth_rate(1e-10).g_star
        for n in (10, 50, 200, 1000):
            assert bound_nth_root(n) < g_star * n ** (2.0 / n)
