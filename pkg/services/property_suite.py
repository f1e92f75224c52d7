#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
性质检查套件：统一注册与执行半径、线性规划、阈值与构造模块的不变量检查。

每项检查接收 (rng, trials)，返回 (是否通过, 说明)。套件按注册顺序执行，
第 k 项使用种子 [seed, k]，因此给定种子时输出完全确定。
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Callable, List, Tuple

import numpy as np

from core.combinatorics import lr_distance, subsets
from core.distributions import random_rational_point, uniform
from models.codebook import Codebook, ListSet
from models.reports import PropertyResult
from models.simplex_point import SimplexPoint
from utils.exceptions import log_exception
from utils.logger import get_logger

CheckFunc = Callable[[np.random.Generator, int], Tuple[bool, str]]

_logger = get_logger("PropertySuite")


class PropertyCheck:
    """单项性质检查"""

    def __init__(self, name: str, func: CheckFunc, description: str = ""):
        """
        初始化性质检查。

        Args:
            name: 性质名称（用于注册和输出）
            func: 检查函数，接收 (rng, trials)，返回 (passed, detail)
            description: 性质描述（用于帮助信息）
        """
        self.name = name
        self.func = func
        self.description = description

    def execute(self, rng: np.random.Generator, trials: int) -> PropertyResult:
        """执行检查；检查函数抛出的异常记为失败。"""
        try:
            passed, detail = self.func(rng, trials)
            return PropertyResult(self.name, bool(passed), detail)
        except Exception as e:
            log_exception("PropertySuite", f"执行性质 '{self.name}' 时出错: {e}")
            return PropertyResult(self.name, False, f"{type(e).__name__}: {e}")


class PropertySuite:
    """统一注册和执行性质检查。"""

    def __init__(self):
        self._checks: List[PropertyCheck] = []

    def register(self, name: str, func: CheckFunc, description: str = "") -> None:
        """
        注册性质检查。

        Args:
            name: 性质名称
            func: 检查函数
            description: 性质描述
        """
        self._checks.append(PropertyCheck(name, func, description))
        _logger.debug(f"注册性质: {name}")

    def run(self, seed: int = 7, trials: int = 20) -> List[PropertyResult]:
        """
        按注册顺序执行全部检查。

        Args:
            seed: 随机种子
            trials: 每项检查的随机实例数

        Returns:
            每项检查的结果
        """
        results = []
        for index, check in enumerate(self._checks):
            rng = np.random.default_rng([seed, index])
            result = check.execute(rng, trials)
            _logger.info(f"{'PASS' if result.passed else 'FAIL'} {check.name}")
            results.append(result)
        return results

    def get_help_text(self) -> str:
        lines = ["可用性质："]
        for check in self._checks:
            if check.description:
                lines.append(f"  - {check.name}: {check.description}")
            else:
                lines.append(f"  - {check.name}")
        return "\n".join(lines)


# ------------------------------------------------------------------ checks --

def _random_list(rng: np.random.Generator, q: int, n: int, L: int) -> List[Tuple[int, ...]]:
    return [tuple(int(x) for x in rng.integers(1, q + 1, size=n)) for _ in range(L)]


def _random_instance(rng: np.random.Generator):
    q = 3
    ell = int(rng.integers(1, 3))
    n = int(rng.integers(1, 7))
    L = int(rng.integers(2, 5))
    return q, ell, _random_list(rng, q, n, L)


def check_radius_sandwich(rng, trials):
    from services.lp.relaxation import relaxed_radius
    from services.radii import average_radius, chebyshev_radius_exact, max_weighted_average_radius

    for _ in range(trials):
        q, ell, rows = _random_instance(rng)
        n, L = len(rows[0]), len(rows)
        omegas = [random_rational_point(L, rng) for _ in range(10)] + [uniform(L)]
        avg = average_radius(rows, q, ell)
        best, _omega = max_weighted_average_radius(rows, q, ell, omegas)
        relaxed, _center = relaxed_radius(rows, q, ell)
        cheb, _y = chebyshev_radius_exact(rows, q, ell)
        tol = 1e-6
        if not (avg <= best and float(best) <= relaxed + tol and relaxed <= float(cheb) + tol
                and float(cheb) <= relaxed + L / n + tol):
            return False, f"反例 q={q}, ℓ={ell}, rows={rows}"
    return True, f"{trials} 个实例"


def check_weighted_uniform_is_average(rng, trials):
    from services.radii import average_radius, weighted_average_radius

    for _ in range(trials):
        q, ell, rows = _random_instance(rng)
        if weighted_average_radius(rows, q, uniform(len(rows)), ell) != average_radius(rows, q, ell):
            return False, f"反例 rows={rows}"
    return True, f"{trials} 个实例"


def check_weighted_column_permutation(rng, trials):
    from services.radii import weighted_average_radius

    for _ in range(trials):
        q, ell, rows = _random_instance(rng)
        omega = random_rational_point(len(rows), rng)
        order = rng.permutation(len(rows[0]))
        permuted = [tuple(row[j] for j in order) for row in rows]
        if weighted_average_radius(rows, q, omega, ell) != weighted_average_radius(permuted, q, omega, ell):
            return False, f"反例 rows={rows}"
    return True, f"{trials} 个实例"


def check_embedded_vertices(rng, trials):
    from services.radii import embedded_distance

    checked = 0
    for q in range(2, 6):
        for ell in range(1, q):
            candidates = subsets(q, ell)
            for a, subset in enumerate(candidates):
                vertex = SimplexPoint.rational([1 if b == a else 0 for b in range(len(candidates))])
                center = ListSet(q=q, ell=ell, sets=(subset,))
                for x in range(1, q + 1):
                    checked += 1
                    if embedded_distance(x, vertex, q, ell) != lr_distance((x,), center):
                        return False, f"反例 q={q}, ℓ={ell}, x={x}, A={subset}"
    return True, f"{checked} 个 (x, A)"


def check_minimax_equality(rng, trials):
    from services.lp.relaxation import relaxed_radius, relaxed_radius_via_omega
    from services.radii import tuple_type

    worst = 0.0
    for _ in range(trials):
        q, ell, rows = _random_instance(rng)
        gap = abs(relaxed_radius(rows, q, ell)[0] - relaxed_radius_via_omega(tuple_type(rows, q), ell))
        worst = max(worst, gap)
    return worst <= 1e-6, f"最大差 {worst:.3g}"


def check_rounding(rng, trials):
    from services.lp.relaxation import relaxed_radius, round_center

    for _ in range(trials):
        q, ell, rows = _random_instance(rng)
        n, L = len(rows[0]), len(rows)
        relaxed, center = relaxed_radius(rows, q, ell)
        if len(center.non_vertex_blocks()) > L:
            return False, f"非顶点块过多 rows={rows}"
        _rounded, distance = round_center(center, rows, q, ell)
        if float(distance) > n * relaxed + L + 1e-6:
            return False, f"取整距离越界 rows={rows}"
    return True, f"{trials} 个实例"


def check_solver_certificates(rng, trials):
    from services.lp.relaxation import relaxed_problem
    from services.lp.solver import complementary_slackness_residual, primal_residual, solve

    for _ in range(trials):
        q, ell, rows = _random_instance(rng)
        problem = relaxed_problem(rows, q, ell)
        solution = solve(problem)
        if not solution.is_optimal:
            return False, f"未求得最优解 rows={rows}"
        if solution.nonzero_count > problem.num_rows:
            return False, f"不是基本可行解 rows={rows}"
        if primal_residual(problem, solution) > 1e-8 or complementary_slackness_residual(problem, solution) > 1e-7:
            return False, f"残差过大 rows={rows}"
    return True, f"{trials} 个实例"


def check_f_paths_agree(rng, trials):
    from services.thresholds import f_uniform, f_value

    for _ in range(trials):
        q = int(rng.integers(2, 5))
        L = int(rng.integers(2, 5))
        ell = int(rng.integers(1, q))
        P = random_rational_point(q, rng)
        if f_value(P, uniform(L), ell) != f_uniform(P, L, ell):
            return False, f"反例 P={P.entries}, L={L}, ℓ={ell}"
    return True, f"{trials} 个实例"


def check_threshold_trend(rng, trials):
    from services.thresholds import zero_rate_threshold

    for q in (2, 3, 4):
        values = [zero_rate_threshold(q, 1, L) for L in range(2, 9)]
        if any(b < a for a, b in zip(values, values[1:])):
            return False, f"q={q} 时 p* 随 L 下降"
        if values[-1] >= 1 - Fraction(1, q):
            return False, f"q={q} 时 p* 超过 1-1/q"
    return True, "q ∈ {2,3,4}, L = 2..8"


def check_increase_criterion_random(rng, trials):
    from services.thresholds import check_increase_criterion

    done = 0
    while done < trials:
        q = int(rng.integers(2, 5))
        L = int(rng.integers(2, 5))
        omega = random_rational_point(L, rng)
        if omega[L - 2] == omega[L - 1]:
            continue
        report = check_increase_criterion(random_rational_point(q, rng), omega, 1)
        if not report.holds or not report.f_increase_holds:
            return False, f"反例 ω={omega.entries}"
        done += 1
    return True, f"{trials} 个实例"


def check_uniform_maximality_property(rng, trials):
    from services.thresholds import check_uniform_maximality

    for q, L in ((3, 2), (3, 3), (4, 2), (4, 3)):
        report = check_uniform_maximality(uniform(q), L, 1, trials=trials, rng=rng)
        if not report.holds:
            return False, f"q={q}, L={L} 出现反例"
    return True, "P = U_q, q ∈ {3,4}, L ∈ {2,3}"


def check_schur_concavity_property(rng, trials):
    from services.thresholds import check_schur_concavity, rational_grid

    for ell, L in ((1, 2), (1, 3), (2, 3)):
        grid = rational_grid(Fraction(ell, 3), Fraction(1), 12)
        report = check_schur_concavity(3, ell, L, grid=grid, random_trials=trials, rng=rng)
        if not report.holds:
            return False, f"ℓ={ell}, L={L} 出现反例"
    return True, "q=3, (ℓ,L) ∈ {(1,2),(1,3),(2,3)}"


def check_code_average_identity(rng, trials):
    from services.thresholds import code_average_bound, code_averaged_radius

    for _ in range(trials):
        q = 3
        code = Codebook.from_rows(q, _random_list(rng, q, int(rng.integers(1, 4)), int(rng.integers(1, 4))))
        omega = random_rational_point(2, rng)
        report = code_average_bound(code, omega, 1)
        if code_averaged_radius(code, omega, 1) != report.expectation or not report.holds:
            return False, f"反例 code={code.rows}"
    return True, f"{trials} 个码"


def check_type_regularity(rng, trials):
    from services.construction import generate, hypergeometric_type, spec_for
    from services.radii import tuple_type

    for m in (1, 2):
        for L in (2, 3):
            spec = spec_for(3, 1, L, m)
            code = generate(spec)
            for rows in combinations(range(code.size), L):
                tt = tuple_type(code.select(rows), 3)
                for u in product(range(1, 4), repeat=L):
                    if tt.weight(u) != hypergeometric_type(spec, u):
                        return False, f"m={m}, L={L}, rows={rows}, u={u}"
    return True, "q=3, m ≤ 2, L ≤ 3"


def check_construction_average(rng, trials):
    from services.construction import exact_radius, list_average_radii, spec_for

    for m in (1, 2):
        spec = spec_for(3, 1, 2, m)
        expected = exact_radius(spec)
        if any(value != expected for value in list_average_radii(spec).values()):
            return False, f"m={m} 的平均半径与闭式不符"
    return True, "q=3, ℓ=1, L=2, m ≤ 2"


def check_coefficient_positive(rng, trials):
    from services.construction import c_coefficient

    for q in (3, 4, 5):
        for ell in (1, 2):
            for L in range(ell + 1, 7):
                if L < 2 or ell >= q:
                    continue
                if c_coefficient(q, ell, L) <= 0:
                    return False, f"c_{{{q},{ell},{L}}} ≤ 0"
    return True, "q ∈ {3,4,5}, ℓ ∈ {1,2}, ℓ < L ≤ 6"


def check_tradeoff_residual(rng, trials):
    from services.construction import tradeoff_table

    report = tradeoff_table(3, 1, 2, [1, 2, 3])
    ok = report.scaled_residuals_nonincreasing and report.above_threshold and report.p_exact_decreasing
    return ok, "m ∈ {1,2,3}"


def check_monte_carlo_agreement(rng, trials):
    from services.thresholds import f_value, monte_carlo_f

    cases = max(1, trials // 10)
    for _ in range(cases):
        q = int(rng.integers(2, 5))
        L = int(rng.integers(2, 5))
        ell = int(rng.integers(1, q))
        P = random_rational_point(q, rng, full_support=True)
        omega = random_rational_point(L, rng)
        exact = float(f_value(P, omega, ell))
        mean, stderr = monte_carlo_f(P, omega, ell, samples=100_000, rng=rng)
        if abs(mean - exact) > 4 * stderr:
            return False, f"P={P.entries}, ω={omega.entries}: 估计 {mean:.6f} ± {stderr:.6f}, 精确 {exact:.6f}"
    return True, f"{cases} 个实例，每个 10^5 次抽样，误差 ≤ 4 SE"


def check_construction_verdict(rng, trials):
    from services.construction import exact_radius, generate, spec_for
    from services.thresholds import zero_rate_threshold
    from services.verifier import is_list_recoverable

    for q in (2, 3):
        spec = spec_for(q, 1, 2, 1)
        code = generate(spec)
        if not is_list_recoverable(code, zero_rate_threshold(q, 1, 2)).passed:
            return False, f"q={q} 的构造码在 p* 处判为 FAIL"
        if is_list_recoverable(code, exact_radius(spec)).passed:
            return False, f"q={q} 的构造码在 p_exact 处判为 PASS"
    return True, "q ∈ {2,3}, ℓ=1, L=2, m=1：p* 处 PASS，p_exact 处 FAIL"


def default_suite() -> PropertySuite:
    """注册全部性质的套件"""
    suite = PropertySuite()
    suite.register("radius_sandwich", check_radius_sandwich, "average ≤ max_ω ≤ relaxed ≤ chebyshev ≤ relaxed + L/n")
    suite.register("weighted_uniform_is_average", check_weighted_uniform_is_average, "rad̄_{U_L} = rad̄")
    suite.register("weighted_column_permutation", check_weighted_column_permutation, "rad̄_ω 只依赖类型")
    suite.register("embedded_distance_vertices", check_embedded_vertices, "顶点处嵌入距离等于列表恢复距离")
    suite.register("minimax_equality", check_minimax_equality, "松弛半径 = max_ω rad̄_ω")
    suite.register("rounding_bound", check_rounding, "取整后最大距离 ≤ n·rad + L")
    suite.register("solver_certificates", check_solver_certificates, "基本可行解与互补松弛残差")
    suite.register("f_paths_agree", check_f_paths_agree, "模式枚举与 q-划分快速路径一致")
    suite.register("threshold_trend", check_threshold_trend, "p*(q,1,L) 随 L 不减且小于 1-1/q")
    suite.register("increase_criterion", check_increase_criterion_random, "平均化最后两个坐标的逐点判据")
    suite.register("uniform_maximality", check_uniform_maximality_property, "f(U_q, ω) < f(U_q, U_L)")
    suite.register("schur_concavity", check_schur_concavity_property, "Schur 性质、单调性、中点凹性")
    suite.register("monte_carlo_agreement", check_monte_carlo_agreement, "f(P, ω) 的抽样估计在 4 个标准误内")
    suite.register("code_average_identity", check_code_average_identity, "码平均加权半径的列分解与上界")
    suite.register("type_regularity", check_type_regularity, "构造码的 L 元组类型为超几何分布")
    suite.register("construction_average", check_construction_average, "构造码 L-列表的平均半径闭式")
    suite.register("coefficient_positive", check_coefficient_positive, "c_{q,ℓ,L} > 0")
    suite.register("tradeoff_residual", check_tradeoff_residual, "m²·|r(m)| 单调不增")
    suite.register("construction_verdict", check_construction_verdict, "构造码在 p* 处 PASS，在 p_exact 处 FAIL")
    return suite
