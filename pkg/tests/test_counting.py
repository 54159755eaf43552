import pytest
from hypothesis import given
from hypothesis import strategies as st

from stackwords.counting import (
    CountCache,
    _exact_div,
    binomial,
    brute_force_count,
    brute_force_image_descent_counts,
    catalan,
    three_stack_bound,
    trivial_bound,
    two_stack_count,
    two_stack_count_by_descents,
)
from stackwords.machine import is_t_stack_sortable
from stackwords.perms import all_permutations, descent_count

# brute-force values, frozen from exhaustive enumeration
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
TWO_STACK = [1, 2, 6, 22, 91, 408, 1938, 9614]
THREE_STACK = [1, 2, 6, 24, 114, 606, 3494, 21426]
THREE_STACK_BOUND = [1, 2, 10, 60, 419, 3220, 26520, 230040, 2077669]


class TestBinomial:
    @pytest.mark.parametrize("a, b, expected", [(4, 2, 6), (0, 0, 1), (12, 4, 495)])
    def test_values(self, a, b, expected):
        assert binomial(a, b) == expected

    def test_out_of_range_is_zero(self):
        assert binomial(4, -1) == 0
        assert binomial(4, 5) == 0

    def test_negative_upper_index(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(1, 60), st.integers(0, 60))
    def test_pascal(self, a, b):
        assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


class TestCatalan:
    def test_values(self):
        assert [catalan(n) for n in range(11)] == CATALAN

    def test_negative(self):
        with pytest.raises(ValueError):
            catalan(-1)

    @given(st.integers(0, 20))
    def test_recurrence(self, n):
        assert catalan(n + 1) == sum(catalan(i) * catalan(n - i) for i in range(n + 1))


class TestTwoStackCount:
    def test_values(self):
        assert [two_stack_count(n) for n in range(1, 9)] == TWO_STACK

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            two_stack_count(0)

    def test_matches_brute_force(self):
        for n in range(1, 7):
            assert brute_force_count(n, 2) == two_stack_count(n)


class TestByDescents:
    def test_length_four_row(self):
        assert [two_stack_count_by_descents(4, d) for d in range(4)] == [1, 10, 10, 1]

    def test_length_seven_row(self):
        assert [two_stack_count_by_descents(7, d) for d in range(7)] == [1, 56, 462, 900, 462, 56, 1]

    def test_out_of_range_is_zero(self):
        assert two_stack_count_by_descents(4, -1) == 0
        assert two_stack_count_by_descents(4, 4) == 0

    def test_matches_brute_force(self):
        for n in range(1, 7):
            tallies = {}
            for p in all_permutations(n):
                if is_t_stack_sortable(p, 2):
                    d = descent_count(p)
                    tallies[d] = tallies.get(d, 0) + 1
            for d in range(n):
                assert tallies.get(d, 0) == two_stack_count_by_descents(n, d), (n, d)

    @given(st.integers(1, 80))
    def test_sums_to_total(self, n):
        assert sum(two_stack_count_by_descents(n, d) for d in range(n)) == two_stack_count(n)

    @given(st.integers(1, 80), st.integers(0, 79))
    def test_symmetry(self, n, d):
        assert two_stack_count_by_descents(n, d) == two_stack_count_by_descents(n, n - 1 - d)


class TestThreeStackBound:
    def test_values(self):
        assert [three_stack_bound(n) for n in range(1, 10)] == THREE_STACK_BOUND

    def test_bounds_the_count(self):
        for n in range(1, 7):
            assert brute_force_count(n, 3) <= three_stack_bound(n)

    def test_tight_for_tiny_lengths(self):
        assert three_stack_bound(1) == 1
        assert three_stack_bound(2) == 2  # equals the count

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            three_stack_bound(0)


class TestTrivialBound:
    @pytest.mark.parametrize("n, t, expected", [(2, 1, 16), (1, 3, 16), (3, 2, 729)])
    def test_values(self, n, t, expected):
        assert trivial_bound(n, t) == expected

    def test_dominates_brute_force(self):
        for n in range(1, 7):
            for t in (1, 2, 3):
                assert brute_force_count(n, t) <= trivial_bound(n, t)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            trivial_bound(0, 1)
        with pytest.raises(ValueError):
            trivial_bound(1, 0)


class TestBruteForce:
    def test_small_counts(self):
        assert brute_force_count(3, 1) == 5
        assert brute_force_count(4, 2) == 22
        assert brute_force_count(4, 3) == 24  # n <= t+1 sorts everything

    def test_frozen_table(self):
        for n in range(1, 7):
            assert brute_force_count(n, 1) == CATALAN[n]
            assert brute_force_count(n, 2) == TWO_STACK[n - 1]
            assert brute_force_count(n, 3) == THREE_STACK[n - 1]

    def test_limit_guard(self):
        with pytest.raises(ValueError, match="exceeds enumeration limit"):
            brute_force_count(11, 1)

    def test_image_descent_tallies(self):
        assert brute_force_image_descent_counts(1) == {0: 1}
        assert brute_force_image_descent_counts(2) == {0: 2}
        assert brute_force_image_descent_counts(5) == {0: 42, 1: 68, 2: 4}

    def test_tallies_partition_the_count(self):
        for n in range(1, 7):
            tallies = brute_force_image_descent_counts(n)
            assert sum(tallies.values()) == brute_force_count(n, 3)


class TestExactDivision:
    def test_quotient(self):
        assert _exact_div(12, 4, "test") == 3

    def test_remainder_fails_loudly(self):
        with pytest.raises(ArithmeticError, match="not divisible"):
            _exact_div(13, 4, "test")


class TestCountCache:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "counts.csv"
        cache = CountCache(path)
        assert cache.get(4, 2) is None
        assert cache.counted(4, 2) == 22
        cache.save()
        assert path.read_text().splitlines()[0] == "n,t,count"
        reloaded = CountCache(path)
        assert reloaded.get(4, 2) == 22

    def test_cached_value_is_reused(self, tmp_path):
        path = tmp_path / "counts.csv"
        cache = CountCache(path)
        cache.put(3, 1, 999)  # wrong on purpose: cached values are advisory
        assert cache.counted(3, 1) == 999
        assert brute_force_count(3, 1) == 5
