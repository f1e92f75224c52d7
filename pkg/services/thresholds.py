#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
阈值服务 - f(P, ω)、零码率阈值 p*(q, ℓ, L) 以及极值性质的可执行检查

f(P, ω) = E_{X ~ P^{⊗L}}[1 - max_{A∈𝒳} Σ_{i: X_i∈A} ω(i)]。
参考路径是对 [q]^L 的完全枚举；f(P, U_L) 另有按 q-划分归并的快速路径，两者互相校验。
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from core.combinatorics import compositions, maxl, multinomial, top_sum
from core.distributions import average_out, max_mass, p_qlp, random_rational_point, uniform
from models.codebook import Codebook
from models.reports import (
    AveragingReport,
    CodeAverageReport,
    CriterionReport,
    MaximalityReport,
    SchurReport,
)
from models.simplex_point import SimplexPoint, require_rational
from utils.config import Config, get_config
from utils.exceptions import DimensionMismatchError, ParameterError, check_budget
from utils.logger import get_logger

_logger = get_logger("ThresholdService")


def _check_ell(q: int, ell: int) -> None:
    if not 1 <= ell < q:
        raise ParameterError(f"需要 1 ≤ ℓ < q，实际 ℓ={ell}, q={q}")


def _scaled_integers(point: SimplexPoint) -> Tuple[List[int], int]:
    """把有理点写成公分母下的整数向量"""
    denominator = math.lcm(*(x.denominator for x in point))
    return [int(x * denominator) for x in point], denominator


class PatternTable:
    """
    P^{⊗L} 下的模式表

    [q]^L 中的模式按“哪些位置取相同符号”归并，只保留位置划分和整数化概率，
    同一个 P 可以对很多 ω 重复求值。
    """

    def __init__(self, P: SimplexPoint, L: int, ell: int = 1, config: Optional[Config] = None):
        config = config or get_config()
        require_rational(P)
        q = len(P)
        _check_ell(q, ell)
        if L < 1:
            raise ParameterError(f"L 必须 ≥ 1，实际 L={L}")
        check_budget("f 的模式枚举", q ** L, config.F_ENUMERATION_BUDGET,
                     hint="q^L 过大，可改用 monte_carlo_f 估计")
        self.q, self.L, self.ell = q, L, ell

        weights, denominator = _scaled_integers(P)
        support = [x for x in range(q) if weights[x] > 0]
        table: Dict[Tuple[Tuple[int, ...], ...], int] = defaultdict(int)
        for pattern in product(support, repeat=L):
            positions: Dict[int, List[int]] = {}
            for pos, symbol in enumerate(pattern):
                positions.setdefault(symbol, []).append(pos)
            key = tuple(sorted(tuple(group) for group in positions.values()))
            table[key] += math.prod(weights[x] for x in pattern)
        self._table = dict(table)
        self._scale = denominator ** L
        _logger.debug(f"模式表: q={q}, L={L}, 位置划分 {len(self._table)} 个")

    def value(self, omega: SimplexPoint) -> Fraction:
        """精确计算 f(P, ω)"""
        require_rational(omega)
        if len(omega) != self.L:
            raise DimensionMismatchError(f"ω 的维数 {len(omega)} 与 L={self.L} 不一致")
        w, denominator = _scaled_integers(omega)
        captured = 0
        for groups, probability in self._table.items():
            masses = [sum(w[pos] for pos in group) for group in groups]
            captured += probability * top_sum(masses, self.ell)
        return 1 - Fraction(captured, self._scale * denominator)


def f_value(P: SimplexPoint, omega: SimplexPoint, ell: int = 1, config: Optional[Config] = None) -> Fraction:
    """f_ℓ(P, ω)，对 [q]^L 完全枚举"""
    return PatternTable(P, len(omega), ell, config).value(omega)


def max_omega(xs: Sequence[int], omega: SimplexPoint, ell: int = 1):
    """max_{ω,ℓ}(x_1, ..., x_L) = max_A Σ_{i: x_i∈A} ω(i)"""
    if len(xs) != len(omega):
        raise DimensionMismatchError(f"符号个数 {len(xs)} 与 ω 的维数 {len(omega)} 不一致")
    masses: Dict[int, object] = {}
    for symbol, weight in zip(xs, omega):
        masses[symbol] = masses.get(symbol, 0) + weight
    return top_sum(masses.values(), ell)


def f_uniform(P: SimplexPoint, L: int, ell: int = 1) -> Fraction:
    """f_ℓ(P, U_L) = 1 - (1/L) Σ_a multinomial(a) Π P_x^{a_x} maxl(a)"""
    require_rational(P)
    q = len(P)
    _check_ell(q, ell)
    expected = Fraction(0)
    for a in compositions(q, L):
        weight = math.prod((P[x] ** a[x] for x in range(q)), start=Fraction(1))
        if weight:
            expected += multinomial(a) * weight * maxl(a, ell)
    return 1 - expected / L


def zero_rate_threshold(q: int, ell: int, L: int) -> Fraction:
    """p*(q, ℓ, L) = 1 - E_{U_q^{⊗L}}[plur_ℓ] / L"""
    if q < 2:
        raise ParameterError(f"q 必须 ≥ 2，实际 q={q}")
    _check_ell(q, ell)
    if L < 2:
        raise ParameterError(f"L 必须 ≥ 2，实际 L={L}")
    total = sum(multinomial(a) * maxl(a, ell) for a in compositions(q, L))
    return 1 - Fraction(total, L * q ** L)


def threshold_table(q: int, ell: int, L_values: Iterable[int]) -> pd.DataFrame:
    """不同 L 下的 p*(q, ℓ, L)"""
    digits = get_config().DECIMAL_DIGITS
    rows = []
    for L in L_values:
        value = zero_rate_threshold(q, ell, L)
        rows.append({"q": q, "ell": ell, "L": L, "p_star": value, "p_star_decimal": round(float(value), digits)})
    return pd.DataFrame(rows, columns=["q", "ell", "L", "p_star", "p_star_decimal"])


# ------------------------------------------------------------------ checks --

def check_increase_criterion(P: SimplexPoint, omega: SimplexPoint, ell: int = 1,
                             config: Optional[Config] = None) -> CriterionReport:
    """
    平均化 ω 最后两个坐标的逐点判据

    对每个 x ∈ [q]^L 检查 ½(max_ω(x) + max_ω(x')) ≥ max_ω̄(x)，其中 x' 交换了最后两个符号。
    """
    config = config or get_config()
    require_rational(P, omega)
    q, L = len(P), len(omega)
    if L < 2:
        raise ParameterError("判据需要 L ≥ 2")
    if omega[L - 2] == omega[L - 1]:
        raise ParameterError("ω 的最后两个坐标相等，平均化不改变 ω")
    check_budget("判据的模式枚举", q ** L, config.F_ENUMERATION_BUDGET)

    averaged = average_out(omega, (L - 1, L))
    violations = []
    strict = 0
    strict_positive = False
    for xs in product(range(1, q + 1), repeat=L):
        swapped = xs[:L - 2] + (xs[L - 1], xs[L - 2])
        lhs = (max_omega(xs, omega, ell) + max_omega(swapped, omega, ell)) / 2
        rhs = max_omega(xs, averaged, ell)
        if lhs < rhs:
            violations.append(xs)
        elif lhs > rhs:
            strict += 1
            if all(P[x - 1] > 0 for x in xs):
                strict_positive = True

    table = PatternTable(P, L, ell, config)
    return CriterionReport(
        L=L,
        ell=ell,
        patterns_checked=q ** L,
        holds=not violations,
        strict_instances=strict,
        strict_with_positive_probability=strict_positive,
        violations=violations,
        f_before=table.value(omega),
        f_after=table.value(averaged),
    )


def check_average_subset(P: SimplexPoint, omega: SimplexPoint, subset: Sequence[int], ell: int = 1,
                         config: Optional[Config] = None) -> AveragingReport:
    """在任意坐标子集 S 上平均化后 f 不减"""
    table = PatternTable(P, len(omega), ell, config)
    return AveragingReport(
        subset=tuple(sorted(subset)),
        f_before=table.value(omega),
        f_after=table.value(average_out(omega, subset)),
    )


def check_uniform_maximality(
    P: SimplexPoint,
    L: int,
    ell: int = 1,
    trials: int = 1000,
    rng: Optional[np.random.Generator] = None,
    denominator: Optional[int] = None,
    config: Optional[Config] = None,
) -> MaximalityReport:
    """
    随机 ω ≠ U_L 上检查 f(P, ω) ≤ f(P, U_L)，P 全支撑且 q ≥ 3 时要求严格

    严格性只对 P = U_q 计为失败；其他 P 的相等情况记入 findings。
    """
    if L < 2:
        raise ParameterError("Δ([1]) 中只有 U_1，极大性检查需要 L ≥ 2")
    config = config or get_config()
    rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
    denominator = denominator or config.RANDOM_DENOMINATOR
    table = PatternTable(P, L, ell, config)
    flat = uniform(L)
    peak = table.value(flat)
    q = len(P)
    report = MaximalityReport(
        L=L, ell=ell, trials=trials, f_at_uniform=peak,
        strict_expected=P.is_full_support() and q >= 3,
    )
    is_uniform_p = P == uniform(q)

    for _ in range(trials):
        omega = random_rational_point(L, rng, denominator)
        while omega == flat:
            omega = random_rational_point(L, rng, denominator)
        value = table.value(omega)
        if value > peak:
            report.nonstrict_violations.append(omega)
        elif value == peak and report.strict_expected:
            if is_uniform_p:
                report.strict_failures.append(omega)
            else:
                report.findings.append(omega)

    if report.findings:
        _logger.info(f"非均匀 P 下有 {len(report.findings)} 个 ω 取到与 U_L 相同的值")
    return report


def rational_grid(low: Fraction, high: Fraction, max_denominator: int) -> List[Fraction]:
    """[low, high] 中分母不超过 max_denominator 的全部有理数（升序）"""
    values = {
        Fraction(a, b)
        for b in range(1, max_denominator + 1)
        for a in range(0, b + 1)
        if low <= Fraction(a, b) <= high
    }
    return sorted(values)


def check_schur_concavity(
    q: int,
    ell: int,
    L: int,
    grid: Optional[Sequence[Fraction]] = None,
    random_trials: int = 500,
    rng: Optional[np.random.Generator] = None,
    denominator: Optional[int] = None,
    config: Optional[Config] = None,
) -> SchurReport:
    """
    p ↦ f(P_{q,ℓ,p}, U_L) 的三项性质：

    (a) 对随机 P，f(P, U_L) ≤ f(P_{q,ℓ,p}, U_L)，p 为 P 的最大 ℓ-质量
    (b) 在网格上单调不增
    (c) 网格上任意两点的中点凹性
    """
    config = config or get_config()
    rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
    denominator = denominator or config.RANDOM_DENOMINATOR
    _check_ell(q, ell)
    low = Fraction(ell, q)
    points = sorted(set(grid)) if grid is not None else rational_grid(low, Fraction(1), 24)
    for p in points:
        if not low <= p <= 1:
            raise ParameterError(f"网格点 {p} 不在 [{low}, 1] 内")

    cache: Dict[Fraction, Fraction] = {}

    def extremal(p: Fraction) -> Fraction:
        if p not in cache:
            cache[p] = f_uniform(p_qlp(q, ell, p), L, ell)
        return cache[p]

    values = [extremal(p) for p in points]
    report = SchurReport(q=q, ell=ell, L=L, grid=list(points), values=values, random_trials=random_trials)

    for _ in range(random_trials):
        P = random_rational_point(q, rng, denominator)
        mass, _subset = max_mass(P, ell)
        if f_uniform(P, L, ell) > extremal(mass):
            report.schur_violations.append(P)

    for (p1, v1), (p2, v2) in zip(zip(points, values), zip(points[1:], values[1:])):
        if v2 > v1:
            report.monotone_violations.append((p1, p2))

    for p1, p2 in combinations(points, 2):
        report.pairs_checked += 1
        if extremal((p1 + p2) / 2) < (extremal(p1) + extremal(p2)) / 2:
            report.concavity_violations.append((p1, p2))

    _logger.debug(f"Schur 检查: 网格 {len(points)} 点, {report.pairs_checked} 对")
    return report


# ------------------------------------------------------------ code average --

def column_distributions(code: Codebook) -> List[SimplexPoint]:
    """每个坐标上的符号经验分布 P_j"""
    if code.size == 0:
        raise ParameterError("空码没有列分布")
    result = []
    for j in range(code.n):
        column = code.column(j)
        result.append(SimplexPoint.rational([Fraction(column.count(x), code.size) for x in range(1, code.q + 1)]))
    return result


def code_average_bound(code: Codebook, omega: SimplexPoint, ell: int = 1,
                       config: Optional[Config] = None) -> CodeAverageReport:
    """
    E_{𝒞^L}[rad̄_ω] = (1/n) Σ_j f(P_j, ω) 与 f(P_{q,ℓ,p'}, U_L) 的比较

    p' = max(ℓ/q, 1 - rad_ℓ(𝒞))：每列最大 ℓ-质量的平均值不小于 p'。
    """
    from services.radii import code_chebyshev_radius

    config = config or get_config()
    require_rational(omega)
    L = len(omega)
    radius, _center = code_chebyshev_radius(code, ell, config)
    mass = max(Fraction(ell, code.q), 1 - radius)

    column_values = [f_value(P, omega, ell, config) for P in column_distributions(code)]
    expectation = sum(column_values, Fraction(0)) / code.n
    bound = f_uniform(p_qlp(code.q, ell, mass), L, ell)
    return CodeAverageReport(
        code_radius=radius,
        mass_parameter=mass,
        expectation=expectation,
        bound=bound,
        column_values=column_values,
    )


def code_averaged_radius(code: Codebook, omega: SimplexPoint, ell: int = 1,
                         config: Optional[Config] = None) -> Fraction:
    """直接对 𝒞^L 的全部有序元组（允许重复）平均加权平均半径"""
    from services.radii import weighted_average_radius

    config = config or get_config()
    require_rational(omega)
    L = len(omega)
    check_budget("码上的元组枚举", code.size ** L, config.TUPLE_BUDGET)
    total = Fraction(0)
    for rows in product(code.rows, repeat=L):
        total += weighted_average_radius(rows, code.q, omega, ell)
    return total / code.size ** L


def monte_carlo_f(
    P: SimplexPoint,
    omega: SimplexPoint,
    ell: int = 1,
    samples: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> Tuple[float, float]:
    """
    抽样估计 f(P, ω)

    Returns:
        (估计值, 标准误)
    """
    config = get_config()
    samples = samples or config.SAMPLE_SIZE
    rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
    q, L = len(P), len(omega)
    _check_ell(q, ell)
    probabilities = np.array([float(x) for x in P])
    weights = np.array([float(w) for w in omega])

    draws = rng.choice(q, size=(samples, L), p=probabilities / probabilities.sum())
    masses = np.stack([(draws == x) @ weights for x in range(q)], axis=1)
    captured = np.sort(masses, axis=1)[:, -ell:].sum(axis=1)
    values = 1.0 - captured
    return float(values.mean()), float(values.std(ddof=1) / math.sqrt(samples))
