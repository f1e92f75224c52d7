# -*- coding: utf-8 -*-

"""性质检查套件的注册、执行与单项检查"""

import numpy as np

from services.property_suite import (
    PropertySuite,
    _random_instance,
    check_construction_verdict,
    check_monte_carlo_agreement,
    default_suite,
)


class TestSuite:

    def test_registered_names(self):
        text = default_suite().get_help_text()
        assert "monte_carlo_agreement" in text
        assert "construction_verdict" in text

    def test_exception_counts_as_failure(self):
        def broken(rng, trials):
            raise RuntimeError("boom")

        suite = PropertySuite()
        suite.register("broken", broken)
        [result] = suite.run(seed=1, trials=1)
        assert not result.passed
        assert "RuntimeError" in result.detail

    def test_random_instances_cover_range(self):
        rng = np.random.default_rng(0)
        sizes = set()
        for _ in range(300):
            q, ell, rows = _random_instance(rng)
            assert q == 3 and ell in (1, 2)
            sizes.add((len(rows[0]), len(rows)))
        assert max(n for n, _ in sizes) == 6
        assert max(L for _, L in sizes) == 4
        assert min(n for n, _ in sizes) == 1


class TestChecks:

    def test_monte_carlo_agreement(self):
        passed, detail = check_monte_carlo_agreement(np.random.default_rng(5), 10)
        assert passed, detail

    def test_construction_verdict(self):
        passed, detail = check_construction_verdict(np.random.default_rng(0), 1)
        assert passed, detail
