# -*- coding: utf-8 -*-

"""列表可恢复性判定、元组统计与投影子码"""

from fractions import Fraction

import jsonschema
import pytest

from core.combinatorics import lr_distance
from models.codebook import Codebook
from models.reports import VerdictKind
from services.exporters.serialization import abundance_to_json
from services.verifier import (
    abundance_statistics,
    is_list_recoverable,
    is_list_recoverable_via_radius,
    projection_subcode,
    relaxed_code_radius,
    verdict_to_json,
)
from utils.exceptions import BudgetExceededError, ParameterError


class TestBallSearch:

    def test_passes_at_threshold(self, simplex_code):
        verdict = is_list_recoverable(simplex_code, Fraction(1, 3))
        assert verdict.passed
        assert verdict.witness_center is None

    def test_fails_at_exact_radius_with_witness(self, simplex_code):
        verdict = is_list_recoverable(simplex_code, Fraction(1, 2))
        assert verdict.verdict is VerdictKind.FAIL
        assert len(verdict.captured_rows) >= 2
        for i in verdict.captured_rows:
            assert lr_distance(simplex_code.rows[i], verdict.witness_center) <= 3

    def test_fewer_codewords_than_L_passes(self, simplex_code):
        verdict = is_list_recoverable(simplex_code, Fraction(1), L=4)
        assert verdict.passed

    def test_workers_do_not_change_witness(self, simplex_code):
        one = is_list_recoverable(simplex_code, Fraction(1, 2), workers=1)
        two = is_list_recoverable(simplex_code, Fraction(1, 2), workers=2)
        assert one.witness_center == two.witness_center
        assert one.captured_rows == two.captured_rows

    def test_budget(self, simplex_code, small_budget_config):
        with pytest.raises(BudgetExceededError):
            is_list_recoverable(simplex_code, Fraction(1, 3), config=small_budget_config)

    @pytest.mark.parametrize("p,ell", [(-1, 1), (Fraction(1, 3), 0), (Fraction(1, 3), 3)])
    def test_bad_parameters(self, simplex_code, p, ell):
        with pytest.raises(ParameterError):
            is_list_recoverable(simplex_code, p, ell=ell)


class TestTupleRadiusVerdict:

    def test_simplex_code(self, simplex_code):
        passed = is_list_recoverable_via_radius(simplex_code, Fraction(1, 3))
        assert passed.passed
        assert passed.min_radius == Fraction(1, 2)
        failed = is_list_recoverable_via_radius(simplex_code, Fraction(1, 2))
        assert not failed.passed
        assert failed.method == "tuple_radius"
        assert failed.captured_rows == [0, 1]

    def test_agrees_with_ball_search(self, rng):
        for _ in range(25):
            q = int(rng.integers(2, 4))
            n = int(rng.integers(2, 5))
            M = int(rng.integers(2, 5))
            L = int(rng.integers(2, 4))
            rows = rng.integers(1, q + 1, size=(M, n)).tolist()
            code = Codebook.from_rows(q, rows)
            p = Fraction(int(rng.integers(0, n + 1)), n)
            ball = is_list_recoverable(code, p, 1, L)
            radius = is_list_recoverable_via_radius(code, p, 1, L)
            assert ball.verdict == radius.verdict, (rows, p, L)

    def test_list_decoding_agreement(self):
        code = Codebook.from_rows(4, [(1, 2, 3), (2, 3, 4), (3, 4, 1), (4, 1, 2)])
        for k in range(4):
            p = Fraction(k, 3)
            ball = is_list_recoverable(code, p, ell=2, L=3)
            radius = is_list_recoverable_via_radius(code, p, ell=2, L=3)
            assert ball.verdict == radius.verdict


class TestVerdictJson:

    def test_keys_and_schema(self, simplex_code, load_schema):
        schema = load_schema("verdict.schema.json")
        for p in (Fraction(1, 3), Fraction(1, 2)):
            for verdict in (is_list_recoverable(simplex_code, p),
                            is_list_recoverable_via_radius(simplex_code, p)):
                data = verdict_to_json(verdict)
                jsonschema.validate(data, schema)

    def test_fail_fields(self, simplex_code):
        data = verdict_to_json(is_list_recoverable(simplex_code, Fraction(1, 2)))
        assert data["verdict"] == "FAIL"
        assert data["p"] == "1/2"
        assert data["p_decimal"] == 0.5
        assert len(data["witness_center"]) == 6
        assert data["min_radius"] is None


class TestAbundance:

    def test_simplex_code_is_exhaustive(self, simplex_code):
        report = abundance_statistics(simplex_code)
        assert report.exhaustive
        assert report.tuples_examined == 6
        # 每个有序对恰好覆盖 6 个非对角模式各一次
        assert report.histogram == [(Fraction(1, 9), 6)]
        assert report.max_deviation == Fraction(1, 9)
        assert report.close_tuples == 0
        assert report.confidence_interval is None

    def test_close_tuples_are_radius_consistent(self, simplex_code):
        report = abundance_statistics(simplex_code, epsilon=Fraction(1, 9))
        assert report.close_tuples == 6
        assert report.fraction_close == 1.0
        assert report.radius_consistency_violations == 0

    def test_dichotomy(self, simplex_code):
        report = abundance_statistics(simplex_code)
        assert report.code_radius == Fraction(2, 3)
        assert report.dichotomy_threshold == Fraction(2, 3)
        assert report.biased is True
        shifted = abundance_statistics(simplex_code, delta=Fraction(1, 6))
        assert shifted.biased is False

    def test_sampling_over_budget(self, rng, small_budget_config):
        small_budget_config.SAMPLE_SIZE = 200
        code = Codebook.from_rows(3, rng.integers(1, 4, size=(6, 5)).tolist())
        report = abundance_statistics(code, config=small_budget_config, rng=rng)
        assert not report.exhaustive
        assert report.tuples_examined == 200
        low, high = report.confidence_interval
        assert 0.0 <= low <= report.fraction_close <= high <= 1.0
        assert report.code_radius is None
        assert report.biased is None

    def test_sampled_report_schema(self, rng, small_budget_config, load_schema):
        small_budget_config.SAMPLE_SIZE = 100
        code = Codebook.from_rows(3, rng.integers(1, 4, size=(6, 5)).tolist())
        data = abundance_to_json(abundance_statistics(code, config=small_budget_config, rng=rng))
        jsonschema.validate(data, load_schema("abundance.schema.json"))
        assert data["exhaustive"] is False
        assert data["code_radius"] is None

    def test_seeded_sampling_is_reproducible(self, small_budget_config):
        small_budget_config.SAMPLE_SIZE = 100
        code = Codebook.from_rows(2, [(1, 1, 2), (1, 2, 2), (2, 1, 1), (2, 2, 1), (1, 1, 1)])
        first = abundance_statistics(code, config=small_budget_config)
        second = abundance_statistics(code, config=small_budget_config)
        assert first.histogram == second.histogram

    def test_L_must_be_at_least_two(self, simplex_code):
        with pytest.raises(ParameterError):
            abundance_statistics(simplex_code, L=1)


class TestProjection:

    CONCENTRATED = [(1, 1, 1, 2), (1, 1, 2, 3), (1, 1, 3, 1), (2, 1, 1, 1)]

    def test_certified_subcode(self):
        code = Codebook.from_rows(3, self.CONCENTRATED)
        result = projection_subcode(code, [0, 1])
        assert result.hypothesis_holds
        assert result.projected_radius == Fraction(1, 2)
        assert result.majority_set == (1,)
        assert result.subcode_rows == [0, 2, 3]
        assert result.certified_radius == Fraction(1, 4)
        assert result.bound == Fraction(37, 60)
        assert result.certified

    def test_subcode_holds_selected_rows(self):
        code = Codebook.from_rows(3, self.CONCENTRATED)
        result = projection_subcode(code, [0, 1])
        assert result.subcode == Codebook.from_rows(3, [self.CONCENTRATED[i] for i in (0, 2, 3)])
        assert result.subcode.n == 4

    def test_hypothesis_fails_on_spread_projection(self, simplex_code):
        result = projection_subcode(simplex_code, [0, 1])
        assert not result.hypothesis_holds
        assert result.projected_radius == 1
        assert result.subcode_rows == []
        assert not result.certified

    def test_bad_arguments(self, simplex_code):
        with pytest.raises(ParameterError):
            projection_subcode(simplex_code, [6])
        with pytest.raises(ParameterError):
            projection_subcode(simplex_code, [])
        with pytest.raises(ParameterError):
            projection_subcode(simplex_code, [0, 1], s=2)


class TestRelaxedCodeRadius:

    def test_simplex_code(self, simplex_code):
        assert relaxed_code_radius(simplex_code) == pytest.approx(0.5, abs=1e-7)

    def test_not_above_integer_radius(self, rng):
        rows = rng.integers(1, 4, size=(4, 4)).tolist()
        code = Codebook.from_rows(3, rows)
        integer = is_list_recoverable_via_radius(code, Fraction(0)).min_radius
        assert relaxed_code_radius(code) <= float(integer) + 1e-7

    def test_too_few_codewords(self, simplex_code):
        with pytest.raises(ParameterError):
            relaxed_code_radius(simplex_code, L=4)


@pytest.mark.slow
class TestVerdictAgreementAtScale:

    def test_hundred_instances(self, rng):
        for _ in range(100):
            ell = int(rng.integers(1, 3))
            n = int(rng.integers(2, 5))
            M = int(rng.integers(2, 6))
            L = int(rng.integers(ell + 1, 4))
            rows = rng.integers(1, 4, size=(M, n)).tolist()
            code = Codebook.from_rows(3, rows)
            p = Fraction(int(rng.integers(0, n + 1)), n)
            ball = is_list_recoverable(code, p, ell, L)
            radius = is_list_recoverable_via_radius(code, p, ell, L)
            assert ball.verdict == radius.verdict, (rows, p, ell, L)
