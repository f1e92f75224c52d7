#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
半径服务 - 一个码字列表的四种半径

- 精确 Chebyshev ℓ-半径：在 𝒳ⁿ 上做分支定界搜索
- 平均半径 / 加权平均半径：按列分离的闭式解
- 嵌入距离 d(χ, η)：列表恢复距离在 Δ(𝒳) 上的仿射延拓
- 元组类型 typ(c_1, ..., c_L)
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.combinatorics import lr_distance, plurality, subsets, top_sum
from core.distributions import uniform
from models.codebook import Codebook, Codeword, ListSet, check_symbol
from models.reports import RadiusReport, TupleType
from models.simplex_point import SimplexPoint
from utils.config import Config, get_config
from utils.exceptions import (
    BudgetExceededError,
    DimensionMismatchError,
    ParameterError,
    check_budget,
)
from utils.logger import get_logger
from utils.workers import run_partitioned

_logger = get_logger("RadiusService")


def _validate_list(codewords: Sequence[Sequence[int]], q: int) -> Tuple[Tuple[Codeword, ...], int]:
    """检查列表非空、等长、符号落在 [1..q]，返回 (规范化列表, n)"""
    if q < 2:
        raise ParameterError(f"字母表大小 q 必须 ≥ 2，实际为 {q}")
    rows = tuple(tuple(int(x) for x in c) for c in codewords)
    if not rows:
        raise ParameterError("码字列表不能为空")
    n = len(rows[0])
    if n < 1:
        raise ParameterError("码长 n 必须 ≥ 1")
    for index, row in enumerate(rows):
        if len(row) != n:
            raise DimensionMismatchError(f"第 {index} 个码字长度为 {len(row)}，期望 {n}")
        for value in row:
            check_symbol(value, q)
    return rows, n


def _check_ell(q: int, ell: int) -> None:
    if not 1 <= ell <= q - 1:
        raise ParameterError(f"ℓ 必须满足 1 ≤ ℓ ≤ q-1，实际 ℓ={ell}, q={q}")


def tuple_type(codewords: Sequence[Sequence[int]], q: int) -> TupleType:
    """列表的类型：每一列 (c_1(j), ..., c_L(j)) 的经验分布"""
    rows, n = _validate_list(codewords, q)
    counts = Counter(zip(*rows))
    return TupleType(q=q, L=len(rows), n=n, counts=dict(counts))


# ---------------------------------------------------------------- Chebyshev --

class ChebyshevSearch:
    """
    精确 ℓ-半径的分支定界搜索

    中心 Y 按坐标逐个确定，每个坐标按 𝒳 的顺序尝试；第一个坐标作为分区，
    各分区独立搜索后按分区顺序归约，因此结果与并行度无关。
    """

    def __init__(self, codewords: Sequence[Sequence[int]], q: int, ell: int = 1,
                 config: Optional[Config] = None):
        self.config = config or get_config()
        self.rows, self.n = _validate_list(codewords, q)
        _check_ell(q, ell)
        self.q = q
        self.ell = ell
        self.L = len(self.rows)
        self.candidates = subsets(q, ell)

        required = len(self.candidates) ** self.n
        check_budget(
            "Chebyshev 中心枚举", required, self.config.CHEBYSHEV_BUDGET,
            hint="减小 n 或通过 ZR_BUDGET 提高预算",
        )

        # miss[j][a][i] = 1 当且仅当 c_i(j) ∉ 𝒳[a]
        self._miss: List[List[Tuple[int, ...]]] = []
        for j in range(self.n):
            column = [row[j] for row in self.rows]
            self._miss.append([
                tuple(0 if symbol in subset else 1 for symbol in column)
                for subset in self.candidates
            ])
        column_min = [min(sum(m) for m in self._miss[j]) for j in range(self.n)]
        self._suffix = [0] * (self.n + 1)
        for j in range(self.n - 1, -1, -1):
            self._suffix[j] = self._suffix[j + 1] + column_min[j]
        _logger.debug(f"Chebyshev 搜索: L={self.L}, n={self.n}, |𝒳|={len(self.candidates)}, 上界 {required}")

    def _bound(self, j: int, dist: Sequence[int], total: int) -> int:
        # max 不小于平均值；剩余列至少贡献各自的最小缺失数
        return max(max(dist), -(-(total + self._suffix[j]) // self.L))

    def _search_partition(self, first: int) -> Tuple[int, Optional[Tuple[int, ...]]]:
        best_value = self.n + 1
        best_path: Optional[Tuple[int, ...]] = None
        path = [first]

        def dfs(j: int, dist: List[int], total: int) -> None:
            nonlocal best_value, best_path
            if self._bound(j, dist, total) >= best_value:
                return
            if j == self.n:
                best_value, best_path = max(dist), tuple(path)
                return
            for a, misses in enumerate(self._miss[j]):
                path.append(a)
                dfs(j + 1, [d + x for d, x in zip(dist, misses)], total + sum(misses))
                path.pop()

        first_misses = self._miss[0][first]
        dfs(1, list(first_misses), sum(first_misses))
        return best_value, best_path

    def run(self, workers: Optional[int] = None) -> Tuple[Fraction, ListSet]:
        workers = self.config.DEFAULT_WORKERS if workers is None else workers
        results = run_partitioned(self._search_partition, list(range(len(self.candidates))), workers)
        best_value, best_path = min(
            (value, path) for value, path in results if path is not None
        )
        center = ListSet(q=self.q, ell=self.ell, sets=tuple(self.candidates[a] for a in best_path))
        return Fraction(best_value, self.n), center


def chebyshev_radius_exact(
    codewords: Sequence[Sequence[int]],
    q: int,
    ell: int = 1,
    config: Optional[Config] = None,
    workers: Optional[int] = None,
) -> Tuple[Fraction, ListSet]:
    """
    精确 ℓ-半径 rad_ℓ(c_1, ..., c_L)

    Returns:
        (相对半径, 第一个最优中心)

    Raises:
        BudgetExceededError: C(q,ℓ)^n 超过 CHEBYSHEV_BUDGET
    """
    return ChebyshevSearch(codewords, q, ell, config).run(workers)


def code_chebyshev_radius(code: Codebook, ell: int = 1, config: Optional[Config] = None,
                          workers: Optional[int] = None) -> Tuple[Fraction, ListSet]:
    """整个码的 ℓ-半径 rad_ℓ(𝒞)"""
    if code.size == 0:
        raise ParameterError("空码没有半径")
    return chebyshev_radius_exact(code.rows, code.q, ell, config, workers)


# ------------------------------------------------------------------ average --

def average_radius(codewords: Sequence[Sequence[int]], q: int, ell: int = 1) -> Fraction:
    """(1/n) Σ_j (1 - plur_ℓ(第 j 列)/L)"""
    rows, n = _validate_list(codewords, q)
    _check_ell(q, ell)
    L = len(rows)
    misses = sum(L - plurality(column, ell, q) for column in zip(*rows))
    return Fraction(misses, n * L)


def _column_masses(column: Sequence[int], omega: SimplexPoint) -> Dict[int, object]:
    masses: Dict[int, object] = {}
    for symbol, weight in zip(column, omega):
        masses[symbol] = masses.get(symbol, 0) + weight
    return masses


def weighted_average_radius(codewords: Sequence[Sequence[int]], q: int, omega: SimplexPoint,
                            ell: int = 1):
    """
    加权平均 ℓ-半径 1 - (1/n) Σ_j max_A Σ_{i: c_i(j)∈A} ω(i)

    对 A 的最大化等于该列各符号 ω-质量中最大的 ℓ 个之和。有理模式返回 Fraction，
    浮点模式返回 float。
    """
    rows, n = _validate_list(codewords, q)
    _check_ell(q, ell)
    if len(omega) != len(rows):
        raise DimensionMismatchError(f"ω 的维数 {len(omega)} 与列表大小 {len(rows)} 不一致")
    captured = sum(top_sum(_column_masses(column, omega).values(), ell) for column in zip(*rows))
    if omega.is_rational:
        return 1 - Fraction(captured) / n
    return 1.0 - float(captured) / n


def weighted_average_center(codewords: Sequence[Sequence[int]], q: int, omega: SimplexPoint,
                            ell: int = 1) -> ListSet:
    """逐列取 argmax_A Σ_{i: c_i(j)∈A} ω(i)（平局取 𝒳 中靠前者）"""
    rows, n = _validate_list(codewords, q)
    _check_ell(q, ell)
    if len(omega) != len(rows):
        raise DimensionMismatchError(f"ω 的维数 {len(omega)} 与列表大小 {len(rows)} 不一致")
    chosen = []
    for column in zip(*rows):
        masses = _column_masses(column, omega)
        best_subset, best_mass = None, None
        for subset in subsets(q, ell):
            mass = sum(masses.get(x, 0) for x in subset)
            if best_mass is None or mass > best_mass:
                best_subset, best_mass = subset, mass
        chosen.append(best_subset)
    return ListSet(q=q, ell=ell, sets=tuple(chosen))


def max_weighted_average_radius(codewords: Sequence[Sequence[int]], q: int, ell: int,
                                omegas: Sequence[SimplexPoint]) -> Tuple[object, SimplexPoint]:
    """在给定的 ω 样本中取加权平均半径的最大值"""
    if not omegas:
        raise ParameterError("至少需要一个 ω")
    best_value, best_omega = None, None
    for omega in omegas:
        value = weighted_average_radius(codewords, q, omega, ell)
        if best_value is None or value > best_value:
            best_value, best_omega = value, omega
    return best_value, best_omega


# ---------------------------------------------------------------- embedding --

def embed(x: int, q: int, ell: int = 1) -> Tuple[int, ...]:
    """φ_ℓ(x)：𝒳 上 {A : x ∈ A} 的指示向量"""
    _check_ell(q, ell)
    check_symbol(x, q)
    return tuple(1 if x in subset else 0 for subset in subsets(q, ell))


def embedded_distance(x: int, eta: SimplexPoint, q: int, ell: int = 1):
    """d(φ_ℓ(x), η) = ½(‖φ_ℓ(x) - η‖₁ - C(q-1,ℓ-1) + 1)"""
    chi = embed(x, q, ell)
    if len(eta) != len(chi):
        raise DimensionMismatchError(f"η 的维数 {len(eta)} 与 |𝒳|={len(chi)} 不一致")
    l1 = sum(abs(c - e) for c, e in zip(chi, eta))
    value = l1 - math.comb(q - 1, ell - 1) + 1
    if eta.is_rational:
        return Fraction(value) / 2
    return float(value) / 2.0


# ------------------------------------------------------------------- report --

def radius_report(
    codewords: Sequence[Sequence[int]],
    q: int,
    ell: int = 1,
    omegas: Optional[Dict[str, SimplexPoint]] = None,
    config: Optional[Config] = None,
    workers: Optional[int] = None,
) -> RadiusReport:
    """汇总四种半径；超出预算的字段留空并记录原因"""
    from services.lp.relaxation import relaxed_radius

    config = config or get_config()
    rows, n = _validate_list(codewords, q)
    L = len(rows)
    flat = uniform(L)
    report = RadiusReport(
        L=L, n=n, ell=ell,
        average=average_radius(rows, q, ell),
        average_center=weighted_average_center(rows, q, flat, ell),
    )
    report.weighted["U_L"] = weighted_average_radius(rows, q, flat, ell)
    for label, omega in (omegas or {}).items():
        report.weighted[label] = weighted_average_radius(rows, q, omega, ell)

    try:
        report.chebyshev, report.chebyshev_center = chebyshev_radius_exact(rows, q, ell, config, workers)
    except BudgetExceededError as exc:
        _logger.warning(f"跳过精确 Chebyshev 半径: {exc}")
        report.notes.append(str(exc))

    report.relaxed, report.relaxed_center = relaxed_radius(rows, q, ell, config=config)

    if not report.check_sandwich():
        _logger.error("半径夹逼关系不成立，请检查 LP 容差")
        report.notes.append("sandwich check failed")
    return report


def max_lr_distance(codewords: Sequence[Sequence[int]], center: ListSet) -> int:
    """列表中各码字到中心的最大列表恢复距离"""
    return max(lr_distance(c, center) for c in codewords)
