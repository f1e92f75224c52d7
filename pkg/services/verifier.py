#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
验证服务 - 列表可恢复性的精确判定与近似随机元组统计

- is_list_recoverable：在 𝒳ⁿ 上穷举球心，找容纳 ≥ L 个码字的半径 pn 的球
- is_list_recoverable_via_radius：对全部 L-子集取最小 ℓ-半径，与上者互相校验
- abundance_statistics：L 元组类型与 q^{-L} 的偏差统计
- projection_subcode：投影 + 鸽巢原理得到的子码及其半径证书
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.combinatorics import lr_distance, subset_index, subsets
from core.distributions import uniform
from models.codebook import Codebook, ListSet
from models.reports import AbundanceReport, ProjectionResult, Verdict, VerdictKind
from services.exporters.serialization import decimal_value, fraction_text
from services.radii import (
    chebyshev_radius_exact,
    code_chebyshev_radius,
    tuple_type,
    weighted_average_radius,
)
from services.thresholds import zero_rate_threshold
from utils.config import Config, get_config
from utils.exceptions import BudgetExceededError, ParameterError, check_budget
from utils.logger import get_logger
from utils.workers import run_partitioned

_logger = get_logger("VerifierService")


def _check_parameters(code: Codebook, p, ell: int, L: int) -> Fraction:
    p = Fraction(p)
    if p < 0:
        raise ParameterError(f"p 必须非负，实际 p={p}")
    if not 1 <= ell < code.q:
        raise ParameterError(f"需要 1 ≤ ℓ < q，实际 ℓ={ell}, q={code.q}")
    if L < 1:
        raise ParameterError(f"L 必须 ≥ 1，实际 L={L}")
    return p


class BallSearch:
    """在 𝒳ⁿ 上按坐标深度优先搜索球心，存活码字不足 L 个时剪枝"""

    def __init__(self, code: Codebook, radius: int, ell: int, L: int):
        self.code = code
        self.radius = radius
        self.ell = ell
        self.L = L
        self.candidates = subsets(code.q, ell)
        self._miss = [
            [tuple(0 if row[j] in subset else 1 for row in code.rows) for subset in self.candidates]
            for j in range(code.n)
        ]

    def search_partition(self, first: int) -> Optional[Tuple[int, ...]]:
        """返回该分区内字典序第一个见证中心（𝒳 下标序列），没有则返回 None"""
        n = self.code.n
        path = [first]

        def dfs(j: int, dist: List[int]) -> bool:
            alive = sum(1 for d in dist if d <= self.radius)
            if alive < self.L:
                return False
            if j == n:
                return True
            for a, misses in enumerate(self._miss[j]):
                path.append(a)
                if dfs(j + 1, [d + x for d, x in zip(dist, misses)]):
                    return True
                path.pop()
            return False

        return tuple(path) if dfs(1, list(self._miss[0][first])) else None

    def run(self, workers: int) -> Optional[ListSet]:
        results = run_partitioned(self.search_partition, list(range(len(self.candidates))), workers)
        for path in results:
            if path is not None:
                return ListSet(q=self.code.q, ell=self.ell, sets=tuple(self.candidates[a] for a in path))
        return None


def is_list_recoverable(
    code: Codebook,
    p,
    ell: int = 1,
    L: int = 2,
    config: Optional[Config] = None,
    workers: Optional[int] = None,
) -> Verdict:
    """
    (p, ℓ, L)-列表可恢复性：不存在 Y 使闭球 B_lr(Y, pn) 含有 ≥ L 个码字

    Raises:
        BudgetExceededError: C(q,ℓ)^n 超过预算；此时可改用 is_list_recoverable_via_radius
    """
    config = config or get_config()
    workers = config.DEFAULT_WORKERS if workers is None else workers
    p = _check_parameters(code, p, ell, L)
    if code.size < L:
        return Verdict(VerdictKind.PASS, p, ell, L)

    check_budget(
        "列表恢复球心枚举", math.comb(code.q, ell) ** code.n, config.CHEBYSHEV_BUDGET,
        hint="可改用 is_list_recoverable_via_radius 检查 L-子集半径",
    )
    radius = math.floor(p * code.n)
    center = BallSearch(code, radius, ell, L).run(workers)
    if center is None:
        return Verdict(VerdictKind.PASS, p, ell, L)

    captured = [i for i, row in enumerate(code.rows) if lr_distance(row, center) <= radius]
    _logger.debug(f"找到见证中心，捕获 {len(captured)} 个码字")
    return Verdict(VerdictKind.FAIL, p, ell, L, witness_center=center, captured_rows=captured)


def is_list_recoverable_via_radius(
    code: Codebook,
    p,
    ell: int = 1,
    L: int = 2,
    config: Optional[Config] = None,
) -> Verdict:
    """min_{|S|=L} rad_ℓ(S) > p 时 PASS；不存在 L-子集时最小值视为 +∞"""
    config = config or get_config()
    p = _check_parameters(code, p, ell, L)
    if code.size < L:
        return Verdict(VerdictKind.PASS, p, ell, L, method="tuple_radius")

    check_budget("L-子集枚举", math.comb(code.size, L), config.TUPLE_BUDGET)
    best: Optional[Tuple[Fraction, Tuple[int, ...], ListSet]] = None
    for rows in combinations(range(code.size), L):
        radius, center = chebyshev_radius_exact(code.select(rows), code.q, ell, config, workers=1)
        if best is None or radius < best[0]:
            best = (radius, rows, center)

    radius, rows, center = best
    if radius > p:
        return Verdict(VerdictKind.PASS, p, ell, L, min_radius=radius, method="tuple_radius")
    return Verdict(
        VerdictKind.FAIL, p, ell, L,
        witness_center=center, captured_rows=list(rows), min_radius=radius, method="tuple_radius",
    )


def relaxed_code_radius(code: Codebook, ell: int = 1, L: int = 2, config: Optional[Config] = None) -> float:
    """ρ_ℓ(𝒞)：全部 L-子集上松弛半径的最小值"""
    from services.lp.relaxation import relaxed_radius

    config = config or get_config()
    if code.size < L:
        raise ParameterError(f"码字个数 {code.size} 少于 L={L}")
    check_budget("L-子集枚举", math.comb(code.size, L), config.TUPLE_BUDGET)
    return min(
        relaxed_radius(code.select(rows), code.q, ell, config)[0]
        for rows in combinations(range(code.size), L)
    )


def _wald_interval(successes: int, trials: int) -> Tuple[float, float]:
    """95% 正态近似置信区间"""
    estimate = successes / trials
    half = 1.96 * math.sqrt(estimate * (1.0 - estimate) / trials)
    return max(0.0, estimate - half), min(1.0, estimate + half)


def abundance_statistics(
    code: Codebook,
    ell: int = 1,
    L: int = 2,
    epsilon=Fraction(1, 10),
    delta=Fraction(0),
    config: Optional[Config] = None,
    rng: Optional[np.random.Generator] = None,
) -> AbundanceReport:
    """
    不同码字组成的有序 L 元组中，类型与 q^{-L} 的最大偏差不超过 ε 的比例

    元组总数超过 TUPLE_BUDGET 时改为带种子的均匀抽样，并给出置信区间。对 ε-接近的元组
    同时检查 |rad̄_{U_L} - f(U_q, U_L)| ≤ q^L ε。
    """
    config = config or get_config()
    epsilon, delta = Fraction(epsilon), Fraction(delta)
    if L < 2:
        raise ParameterError(f"L 必须 ≥ 2，实际 L={L}")
    q, M = code.q, code.size
    threshold = zero_rate_threshold(q, ell, L)
    tolerance = q ** L * epsilon
    flat = uniform(L)

    total = math.perm(M, L)
    exhaustive = total <= config.TUPLE_BUDGET
    if exhaustive:
        tuples = permutations(range(M), L)
    else:
        rng = rng if rng is not None else np.random.default_rng(config.DEFAULT_SEED)
        _logger.info(f"{total} 个元组超过预算，改为抽样 {config.SAMPLE_SIZE} 个")
        tuples = (
            tuple(int(i) for i in rng.choice(M, size=L, replace=False))
            for _ in range(config.SAMPLE_SIZE)
        )

    histogram: Counter = Counter()
    examined = close = inconsistent = 0
    for rows in tuples:
        listed = code.select(rows)
        deviation = tuple_type(listed, q).deviation_from_uniform()
        histogram[deviation] += 1
        examined += 1
        if deviation <= epsilon:
            close += 1
            if abs(weighted_average_radius(listed, q, flat, ell) - threshold) > tolerance:
                inconsistent += 1

    code_radius = None
    if M:
        try:
            code_radius = code_chebyshev_radius(code, ell, config)[0]
        except BudgetExceededError as exc:
            _logger.warning(f"跳过整码半径: {exc}")

    return AbundanceReport(
        ell=ell,
        L=L,
        epsilon=epsilon,
        tuples_examined=examined,
        close_tuples=close,
        exhaustive=exhaustive,
        histogram=sorted(histogram.items()),
        max_deviation=max(histogram) if histogram else Fraction(0),
        confidence_interval=None if exhaustive or not examined else _wald_interval(close, examined),
        radius_consistency_violations=inconsistent,
        code_radius=code_radius,
        dichotomy_threshold=1 - Fraction(ell, q) - delta,
    )


def _complement_majority(row: Sequence[int], complement: Sequence[int], q: int, ell: int) -> Tuple[int, ...]:
    """码字在补集坐标上出现最多的 ℓ 个符号（次数相同取较小符号）"""
    counts = Counter(row[j] for j in complement)
    ranked = sorted(range(1, q + 1), key=lambda x: (-counts.get(x, 0), x))
    return tuple(sorted(ranked[:ell]))


def projection_subcode(
    code: Codebook,
    coordinates: Sequence[int],
    ell: int = 1,
    epsilon=Fraction(1, 10),
    s: Optional[int] = None,
    config: Optional[Config] = None,
) -> ProjectionResult:
    """
    若 rad_ℓ(π_A(𝒞)) ≤ 1 - ℓ/q - ε，按补集上的多数 ℓ-集合做鸽巢分类，取最大的一类

    中心 Z 在 A 上取投影码的最优中心，在补集上取该类共同的多数集合，
    从而 rad_ℓ(子码) ≤ 1 - ℓ/q - (|A|/n) ε。坐标下标从 0 开始。
    """
    config = config or get_config()
    epsilon = Fraction(epsilon)
    if code.size == 0:
        raise ParameterError("空码没有子码")
    coords = sorted(set(coordinates))
    if not coords or coords[0] < 0 or coords[-1] >= code.n:
        raise ParameterError(f"坐标集合 {coordinates} 不合法（n={code.n}）")
    if s is not None and code.size < math.comb(code.q, ell) * s:
        raise ParameterError(f"码字个数 {code.size} 少于 C(q,ℓ)·s = {math.comb(code.q, ell) * s}")

    q, n = code.q, code.n
    projected_radius, projected_center = code_chebyshev_radius(code.project(coords), ell, config)
    hypothesis_bound = 1 - Fraction(ell, q) - epsilon
    if projected_radius > hypothesis_bound:
        _logger.info("投影半径不满足假设，不给出子码")
        return ProjectionResult(False, projected_radius, hypothesis_bound)

    complement = [j for j in range(n) if j not in set(coords)]
    classes: Dict[Tuple[int, ...], List[int]] = {}
    for index, row in enumerate(code.rows):
        classes.setdefault(_complement_majority(row, complement, q, ell), []).append(index)
    order = subset_index(q, ell)
    majority, members = max(classes.items(), key=lambda item: (len(item[1]), -order[item[0]]))

    sets = [None] * n
    for k, j in enumerate(coords):
        sets[j] = projected_center.sets[k]
    for j in complement:
        sets[j] = majority
    center = ListSet(q=q, ell=ell, sets=tuple(sets))

    subcode = code.subcode(members)
    certified = Fraction(max(lr_distance(row, center) for row in subcode.rows), n)
    return ProjectionResult(
        hypothesis_holds=True,
        projected_radius=projected_radius,
        hypothesis_bound=hypothesis_bound,
        subcode_rows=members,
        center=center,
        certified_radius=certified,
        bound=1 - Fraction(ell, q) - Fraction(len(coords), n) * epsilon,
        majority_set=majority,
        subcode=subcode,
    )


def verdict_to_json(verdict: Verdict) -> dict:
    """判定结果的 JSON 字段：verdict, p, ell, L, witness_center, captured_rows"""
    return {
        "verdict": verdict.verdict.value,
        "p": fraction_text(verdict.p),
        "p_decimal": decimal_value(verdict.p),
        "ell": verdict.ell,
        "L": verdict.L,
        "witness_center": verdict.witness_center.to_serializable() if verdict.witness_center else None,
        "captured_rows": list(verdict.captured_rows),
        "min_radius": fraction_text(verdict.min_radius) if verdict.min_radius is not None else None,
        "method": verdict.method,
    }
