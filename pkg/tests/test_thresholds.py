# -*- coding: utf-8 -*-

"""f(P, ω)、零码率阈值与极值性质"""

from collections import Counter
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.distributions import p_qlp, random_rational_point, uniform
from models.codebook import Codebook
from models.simplex_point import SimplexPoint
from services.thresholds import (
    PatternTable,
    check_average_subset,
    check_increase_criterion,
    check_schur_concavity,
    check_uniform_maximality,
    code_average_bound,
    code_averaged_radius,
    column_distributions,
    f_uniform,
    f_value,
    max_omega,
    monte_carlo_f,
    rational_grid,
    threshold_table,
    zero_rate_threshold,
)
from utils.exceptions import BudgetExceededError, DimensionMismatchError, ModeMismatchError, ParameterError


def brute_force_threshold(q, ell, L):
    """对 [q]^L 逐个模式统计出现最多的 ℓ 个符号"""
    total = 0
    for xs in product(range(q), repeat=L):
        total += sum(sorted(Counter(xs).values(), reverse=True)[:ell])
    return 1 - Fraction(total, L * q ** L)


def omega(*entries):
    return SimplexPoint.rational([Fraction(x) for x in entries])


class TestThreshold:

    @pytest.mark.parametrize("q,ell,L,expected", [
        (2, 1, 2, Fraction(1, 4)),
        (2, 1, 3, Fraction(1, 4)),
        (2, 1, 4, Fraction(5, 16)),
        (3, 1, 2, Fraction(1, 3)),
        (3, 1, 3, Fraction(10, 27)),
        (3, 1, 4, Fraction(11, 27)),
        (3, 2, 3, Fraction(2, 27)),
    ])
    def test_known_values(self, q, ell, L, expected):
        assert zero_rate_threshold(q, ell, L) == expected

    @pytest.mark.parametrize("q,ell,L", [(2, 1, 5), (3, 1, 5), (3, 2, 4), (4, 1, 3), (4, 3, 4)])
    def test_matches_brute_force(self, q, ell, L):
        assert zero_rate_threshold(q, ell, L) == brute_force_threshold(q, ell, L)

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_nondecreasing_in_L_and_below_limit(self, q):
        values = [zero_rate_threshold(q, 1, L) for L in range(2, 9)]
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert all(v < 1 - Fraction(1, q) for v in values)

    def test_invalid_parameters(self):
        with pytest.raises(ParameterError):
            zero_rate_threshold(3, 1, 1)
        with pytest.raises(ParameterError):
            zero_rate_threshold(3, 3, 2)
        with pytest.raises(ParameterError):
            zero_rate_threshold(1, 1, 2)

    def test_table(self):
        table = threshold_table(3, 1, [2, 3, 4])
        assert list(table.columns) == ["q", "ell", "L", "p_star", "p_star_decimal"]
        assert list(table["p_star"]) == [Fraction(1, 3), Fraction(10, 27), Fraction(11, 27)]
        assert table["p_star_decimal"].iloc[0] == pytest.approx(1 / 3)


class TestFunctional:

    def test_known_values(self):
        U3 = uniform(3)
        assert f_value(U3, omega("3/4", "1/4")) == Fraction(1, 6)
        assert f_value(U3, uniform(2)) == Fraction(1, 3)
        assert f_value(U3, omega("1/2", "1/4", "1/4")) == Fraction(1, 3)
        assert f_value(U3, uniform(3)) == Fraction(10, 27)

    def test_uniform_weights_give_threshold(self):
        for q, ell, L in [(2, 1, 3), (3, 2, 3), (4, 1, 2)]:
            assert f_value(uniform(q), uniform(L), ell) == zero_rate_threshold(q, ell, L)

    def test_binary_odd_list_size_tie(self):
        # q=2, L=3 时存在 ω ≠ U_L 取到同样的值
        U2 = uniform(2)
        assert f_value(U2, omega("1/2", "1/4", "1/4")) == f_value(U2, uniform(3)) == Fraction(1, 4)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 4), st.integers(2, 4), st.integers(0, 2 ** 32 - 1))
    def test_fast_path_agrees(self, q, L, seed):
        rng = np.random.default_rng(seed)
        P = random_rational_point(q, rng)
        for ell in range(1, q):
            assert f_value(P, uniform(L), ell) == f_uniform(P, L, ell)

    def test_point_mass_is_zero(self):
        P = SimplexPoint.rational([0, 1, 0])
        assert f_value(P, omega("1/2", "1/3", "1/6")) == 0

    def test_max_omega(self):
        w = omega("1/2", "1/3", "1/6")
        assert max_omega((1, 2, 1), w) == Fraction(2, 3)
        assert max_omega((1, 2, 3), w, ell=2) == Fraction(5, 6)
        with pytest.raises(DimensionMismatchError):
            max_omega((1, 2), w)

    def test_pattern_table_reuse(self):
        table = PatternTable(uniform(3), 2)
        assert table.value(uniform(2)) == Fraction(1, 3)
        assert table.value(omega("3/4", "1/4")) == Fraction(1, 6)
        with pytest.raises(DimensionMismatchError):
            table.value(uniform(3))

    def test_rational_mode_required(self):
        with pytest.raises(ModeMismatchError):
            f_value(uniform(3), uniform(2).to_float())

    def test_budget(self, small_budget_config):
        with pytest.raises(BudgetExceededError):
            f_value(uniform(3), uniform(3), config=small_budget_config)

    def test_monte_carlo_estimate(self, rng):
        mean, stderr = monte_carlo_f(uniform(3), omega("1/2", "1/4", "1/4"), samples=20000, rng=rng)
        assert stderr > 0
        assert abs(mean - 1 / 3) <= 5 * stderr


class TestExtremalChecks:

    def test_increase_criterion(self):
        report = check_increase_criterion(uniform(3), omega("1/5", "1/2", "3/10"))
        assert report.holds
        assert report.patterns_checked == 27
        assert report.f_increase_holds
        assert report.strict_with_positive_probability
        assert report.strict_increase_holds

    def test_increase_criterion_needs_distinct_tail(self):
        with pytest.raises(ParameterError):
            check_increase_criterion(uniform(3), omega("1/2", "1/4", "1/4"))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2 ** 32 - 1))
    def test_averaging_any_subset_never_decreases(self, seed):
        rng = np.random.default_rng(seed)
        P = random_rational_point(3, rng)
        w = random_rational_point(4, rng)
        size = int(rng.integers(1, 5))
        subset = [int(i) + 1 for i in rng.choice(4, size=size, replace=False)]
        assert check_average_subset(P, w, subset).holds

    @pytest.mark.parametrize("q,L", [(3, 2), (3, 3), (4, 2), (4, 3)])
    def test_uniform_maximality_is_strict(self, q, L, rng):
        report = check_uniform_maximality(uniform(q), L, trials=60, rng=rng)
        assert report.strict_expected
        assert report.holds
        assert report.f_at_uniform == zero_rate_threshold(q, 1, L)

    def test_uniform_maximality_needs_two_entries(self):
        with pytest.raises(ParameterError):
            check_uniform_maximality(uniform(3), 1, trials=1)

    def test_binary_case_is_not_strict(self, rng):
        report = check_uniform_maximality(uniform(2), 3, trials=30, rng=rng)
        assert not report.strict_expected
        assert not report.nonstrict_violations

    @pytest.mark.parametrize("ell,L", [(1, 2), (1, 3), (2, 3)])
    def test_schur_concavity(self, ell, L, rng):
        grid = rational_grid(Fraction(ell, 3), Fraction(1), 10)
        report = check_schur_concavity(3, ell, L, grid=grid, random_trials=60, rng=rng)
        assert report.holds
        assert report.values[0] == f_uniform(uniform(3), L, ell)
        assert report.values[-1] == 0

    def test_schur_grid_range(self):
        with pytest.raises(ParameterError):
            check_schur_concavity(3, 1, 2, grid=[Fraction(1, 4)], random_trials=0)

    def test_rational_grid(self):
        assert rational_grid(Fraction(1, 2), Fraction(1), 3) == [Fraction(1, 2), Fraction(2, 3), Fraction(1)]


class TestCodeAverage:

    def test_column_distributions(self, simplex_code):
        assert all(P == uniform(3) for P in column_distributions(simplex_code))

    def test_simplex_code_bound(self, simplex_code):
        report = code_average_bound(simplex_code, uniform(2))
        assert report.code_radius == Fraction(2, 3)
        assert report.mass_parameter == Fraction(1, 3)
        assert report.expectation == Fraction(1, 3)
        assert report.bound == Fraction(1, 3)
        assert report.holds

    def test_direct_enumeration_matches_columns(self, rng):
        for _ in range(8):
            rows = [tuple(int(x) for x in rng.integers(1, 4, size=3)) for _ in range(int(rng.integers(1, 4)))]
            code = Codebook.from_rows(3, rows)
            w = random_rational_point(2, rng)
            report = code_average_bound(code, w)
            assert code_averaged_radius(code, w) == report.expectation
            assert report.holds

    def test_mass_parameter_uses_radius(self):
        code = Codebook.from_rows(3, [(1, 1, 1), (1, 1, 2)])
        report = code_average_bound(code, uniform(2))
        assert report.code_radius == Fraction(1, 3)
        assert report.mass_parameter == Fraction(2, 3)
        assert report.bound == f_uniform(p_qlp(3, 1, Fraction(2, 3)), 2)
        assert report.holds


NON_UNIFORM = {
    3: omega("1/2", "1/3", "1/6"),
    4: omega("2/5", "3/10", "1/5", "1/10"),
}


@pytest.mark.slow
class TestExtremalChecksAtScale:

    @pytest.mark.parametrize("q", [3, 4])
    @pytest.mark.parametrize("L", [2, 3, 4])
    def test_uniform_maximality(self, q, L, rng):
        for P in (uniform(q), NON_UNIFORM[q]):
            report = check_uniform_maximality(P, L, trials=1000, rng=rng)
            assert report.strict_expected
            assert report.holds, (P.entries, L)
            assert not report.findings

    @pytest.mark.parametrize("q", [3, 4])
    @pytest.mark.parametrize("L", [2, 3, 4])
    def test_increase_criterion_on_sampled_omega(self, q, L, rng):
        for P in (uniform(q), NON_UNIFORM[q]):
            checked = 0
            while checked < 100:
                w = random_rational_point(L, rng)
                if w[L - 2] == w[L - 1]:
                    continue
                report = check_increase_criterion(P, w)
                assert report.holds, (P.entries, w.entries)
                assert report.f_increase_holds
                checked += 1

    @pytest.mark.parametrize("ell,L", [(1, 2), (1, 3), (2, 3)])
    def test_schur_concavity_default_grid(self, ell, L, rng):
        report = check_schur_concavity(3, ell, L, random_trials=500, rng=rng)
        assert report.grid == rational_grid(Fraction(ell, 3), Fraction(1), 24)
        assert report.holds
