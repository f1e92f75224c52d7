# -*- coding: utf-8 -*-

"""平衡列构造码、精确半径与一阶系数（scipy.stats.multivariate_hypergeom 作为独立参照）"""

from collections import Counter
from fractions import Fraction
from itertools import combinations, product

import pytest
from scipy.stats import multivariate_hypergeom

from core.combinatorics import multinomial
from services.construction import (
    TRADEOFF_COLUMNS,
    c_coefficient,
    coefficient_verified,
    exact_expected_plurality,
    exact_radius,
    generate,
    hypergeometric_type,
    list_average_radii,
    spec_for,
    tradeoff_frame,
    tradeoff_table,
)
from services.radii import average_radius, tuple_type
from services.thresholds import zero_rate_threshold
from utils.exceptions import BudgetExceededError, ParameterError, ResidualGrowthError

from tests.conftest import SIMPLEX_ROWS


class TestGenerate:

    def test_smallest_code(self):
        code = generate(spec_for(3, 1, 2, 1))
        assert code.rows == tuple(SIMPLEX_ROWS)

    @pytest.mark.parametrize("q,m", [(3, 1), (3, 2), (2, 2), (4, 1)])
    def test_columns_are_balanced_and_distinct(self, q, m):
        spec = spec_for(q, 1, 2, m)
        code = generate(spec)
        columns = [code.column(j) for j in range(code.n)]
        assert code.size == q * m
        assert code.n == spec.n == len(set(columns))
        for column in columns:
            assert Counter(column) == {x: m for x in range(1, q + 1)}

    def test_budget(self, small_budget_config):
        with pytest.raises(BudgetExceededError):
            generate(spec_for(3, 1, 2, 2), small_budget_config)

    def test_preconditions(self):
        with pytest.raises(ParameterError):
            spec_for(3, 3, 2, 1)
        with pytest.raises(ParameterError):
            spec_for(3, 1, 1, 1)
        with pytest.raises(ParameterError):
            spec_for(3, 1, 2, 0)


class TestTypeRegularity:

    @pytest.mark.parametrize("m,L", [(1, 2), (1, 3), (2, 2), (2, 3)])
    def test_every_tuple_has_hypergeometric_type(self, m, L):
        spec = spec_for(3, 1, L, m)
        code = generate(spec)
        types = {tuple_type(code.select(rows), 3) for rows in combinations(range(code.size), L)}
        assert len(types) == 1
        (tt,) = types
        for u in product(range(1, 4), repeat=L):
            assert tt.weight(u) == hypergeometric_type(spec, u)

    @pytest.mark.parametrize("q,m,L", [(3, 2, 3), (4, 2, 3), (3, 3, 4)])
    def test_matches_scipy(self, q, m, L):
        spec = spec_for(q, 1, L, m)
        for u in product(range(1, q + 1), repeat=L):
            counts = [u.count(x) for x in range(1, q + 1)]
            pmf = multivariate_hypergeom.pmf(x=counts, m=[m] * q, n=L)
            assert float(hypergeometric_type(spec, u)) == pytest.approx(pmf / multinomial(counts), abs=1e-12)

    def test_weights_sum_to_one(self):
        spec = spec_for(3, 1, 3, 2)
        assert sum(hypergeometric_type(spec, u) for u in product(range(1, 4), repeat=3)) == 1

    def test_pattern_validation(self):
        spec = spec_for(3, 1, 2, 1)
        with pytest.raises(ParameterError):
            hypergeometric_type(spec, (1, 2, 3))
        with pytest.raises(ParameterError):
            hypergeometric_type(spec, (1, 4))


class TestExactRadius:

    @pytest.mark.parametrize("m,expected", [(1, Fraction(1, 2)), (2, Fraction(2, 5)), (3, Fraction(3, 8))])
    def test_pair_radius(self, m, expected):
        assert exact_radius(spec_for(3, 1, 2, m)) == expected

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_every_pair_attains_formula(self, m):
        spec = spec_for(3, 1, 2, m)
        radii = list_average_radii(spec)
        assert len(radii) == spec.M * (spec.M - 1) // 2
        assert set(radii.values()) == {exact_radius(spec)}

    @pytest.mark.parametrize("q,ell,L,m", [(3, 1, 3, 2), (4, 2, 3, 1), (4, 1, 3, 1)])
    def test_plurality_matches_enumeration(self, q, ell, L, m):
        spec = spec_for(q, ell, L, m)
        code = generate(spec)
        rows = code.select(range(L))
        assert 1 - exact_expected_plurality(spec) == average_radius(rows, q, ell)

    def test_list_enumeration_budget(self, small_budget_config):
        with pytest.raises(BudgetExceededError):
            list_average_radii(spec_for(3, 1, 2, 2), config=small_budget_config)


class TestCoefficient:

    @pytest.mark.parametrize("q", [3, 4, 5, 6])
    def test_pair_coefficient(self, q):
        assert c_coefficient(q, 1, 2) == Fraction(q - 1, 2 * q * q)

    def test_c_312(self):
        assert c_coefficient(3, 1, 2) == Fraction(1, 9)

    @pytest.mark.parametrize("q", [3, 4, 5])
    @pytest.mark.parametrize("ell", [1, 2])
    def test_positive_above_ell(self, q, ell):
        for L in range(max(2, ell + 1), 7):
            assert c_coefficient(q, ell, L) > 0

    def test_unverified_range_still_returns(self):
        assert not coefficient_verified(2, 2)
        assert isinstance(c_coefficient(4, 2, 2), Fraction)

    def test_binary_alphabet_rejected(self):
        with pytest.raises(ParameterError):
            c_coefficient(2, 1, 2)


class TestTradeoff:

    def test_table(self):
        report = tradeoff_table(3, 1, 2, [3, 1, 2])
        assert [row["m"] for row in report.rows] == [1, 2, 3]
        assert report.p_star == zero_rate_threshold(3, 1, 2)
        assert report.coefficient == Fraction(1, 9)
        assert [row["residual"] for row in report.rows] == [Fraction(1, 18), Fraction(1, 90), Fraction(1, 216)]
        assert report.scaled_residuals_nonincreasing
        assert report.above_threshold
        assert report.p_exact_decreasing

    def test_frame_columns(self):
        frame = tradeoff_frame(tradeoff_table(3, 1, 2, [1, 2]))
        assert list(frame.columns) == TRADEOFF_COLUMNS
        assert list(frame["n"]) == [6, 90]

    def test_empty_range(self):
        with pytest.raises(ParameterError):
            tradeoff_table(3, 1, 2, [])

    def test_residual_growth_raises(self, monkeypatch):
        import services.construction as construction

        monkeypatch.setattr(
            construction, "exact_radius",
            lambda spec: Fraction(1, 3) + Fraction(1, 9 * spec.m) + Fraction(spec.m, 1000),
        )
        with pytest.raises(ResidualGrowthError):
            tradeoff_table(3, 1, 2, [1, 2])

    def test_large_m_within_two_c_over_m(self):
        spec = spec_for(3, 1, 2, 50)
        p_exact = exact_radius(spec)
        limit = zero_rate_threshold(3, 1, 2)
        # m/(3m-1)
        assert p_exact == Fraction(50, 149)
        assert 0 < p_exact - limit <= 2 * c_coefficient(3, 1, 2) / 50

    def test_residual_shrinks_under_doubling(self):
        pairs = [(1, 2), (2, 4), (4, 8), (8, 16), (25, 50)]
        report = tradeoff_table(3, 1, 2, sorted({m for pair in pairs for m in pair}))
        residual = {row["m"]: row["residual"] for row in report.rows}
        for m, doubled in pairs:
            assert 2.5 <= residual[m] / residual[doubled] <= 6
