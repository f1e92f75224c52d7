#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
有限集合上的概率向量：均匀分布、平均化、极值族 P_{q,p} / P_{q,ℓ,p}、随机采样
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Tuple

import numpy as np

from core.combinatorics import subsets
from models.simplex_point import PointMode, SimplexPoint
from utils.exceptions import ParameterError


def uniform(k: int, mode: PointMode = PointMode.RATIONAL) -> SimplexPoint:
    """[k] 上的均匀分布"""
    if k < 1:
        raise ParameterError(f"均匀分布需要 k ≥ 1，实际 k={k}")
    if mode is PointMode.FLOAT:
        return SimplexPoint.floating([1.0 / k] * k)
    return SimplexPoint.rational([Fraction(1, k)] * k)


def average_out(omega: SimplexPoint, subset: Iterable[int]) -> SimplexPoint:
    """
    把 ω 在坐标子集 S（1 起下标）上的分量替换为它们的平均值

    Args:
        omega: 权重向量
        subset: S ⊆ [1..L]，非空
    """
    indices = sorted(set(subset))
    if not indices:
        raise ParameterError("平均化的坐标子集 S 不能为空")
    size = len(omega)
    if indices[0] < 1 or indices[-1] > size:
        raise ParameterError(f"坐标子集 {indices} 超出 [1..{size}]")

    entries = list(omega.entries)
    total = sum(entries[i - 1] for i in indices)
    mean = total / len(indices) if not omega.is_rational else Fraction(total, len(indices))
    for i in indices:
        entries[i - 1] = mean
    return SimplexPoint(tuple(entries), omega.mode)


def p_qp(q: int, p) -> SimplexPoint:
    """P_{q,p}：前 q-1 个分量为 (1-p)/(q-1)，最后一个为 p"""
    p = Fraction(p)
    if q < 2:
        raise ParameterError(f"q 必须 ≥ 2，实际 q={q}")
    if not Fraction(1, q) <= p <= 1:
        raise ParameterError(f"p={p} 不在 [1/{q}, 1] 内")
    rest = (1 - p) / (q - 1)
    return SimplexPoint.rational([rest] * (q - 1) + [p])


def p_qlp(q: int, ell: int, p) -> SimplexPoint:
    """P_{q,ℓ,p}：前 q-ℓ 个分量为 (1-p)/(q-ℓ)，后 ℓ 个为 p/ℓ"""
    p = Fraction(p)
    if not 1 <= ell < q:
        raise ParameterError(f"需要 1 ≤ ℓ < q，实际 ℓ={ell}, q={q}")
    if not Fraction(ell, q) <= p <= 1:
        raise ParameterError(f"p={p} 不在 [{ell}/{q}, 1] 内")
    low = (1 - p) / (q - ell)
    high = p / ell
    return SimplexPoint.rational([low] * (q - ell) + [high] * ell)


def max_mass(distribution: SimplexPoint, ell: int = 1) -> Tuple[object, Tuple[int, ...]]:
    """
    ℓ-子集能够覆盖的最大概率质量

    Returns:
        (p, A)：p = max_A Σ_{i∈A} P(i)，A 为按 𝒳 顺序的第一个最大化子集（1 起）
    """
    q = len(distribution)
    best_value = None
    best_subset: Tuple[int, ...] = ()
    for subset in subsets(q, ell):
        value = sum(distribution[i - 1] for i in subset)
        if best_value is None or value > best_value:
            best_value, best_subset = value, subset
    return best_value, best_subset


def random_rational_point(
    k: int,
    rng: np.random.Generator,
    denominator: int = 64,
    full_support: bool = False,
) -> SimplexPoint:
    """
    随机有理点：分量为 a_i / denominator，(a_i) 为 denominator 的随机 k-划分

    Args:
        k: 维数
        rng: numpy 随机数生成器
        denominator: 公分母上界
        full_support: 是否要求所有分量为正
    """
    if k < 1:
        raise ParameterError("维数 k 必须 ≥ 1")
    if full_support and denominator < k:
        raise ParameterError("全支撑采样需要 denominator ≥ k")
    # 隔板法：在 denominator + k - 1 个位置中选 k - 1 个隔板
    slots = denominator + k - 1 if not full_support else denominator - 1
    bars = np.sort(rng.choice(slots, size=k - 1, replace=False)) if k > 1 else np.array([], dtype=int)
    if full_support:
        cuts = [0] + [int(b) + 1 for b in bars] + [denominator]
        parts = [cuts[i + 1] - cuts[i] for i in range(k)]
    else:
        edges = [-1] + [int(b) for b in bars] + [slots]
        parts = [edges[i + 1] - edges[i] - 1 for i in range(k)]
    return SimplexPoint.rational([Fraction(a, denominator) for a in parts])


def random_float_point(k: int, rng: np.random.Generator) -> SimplexPoint:
    """Dirichlet(1,...,1) 浮点点"""
    weights = rng.dirichlet(np.ones(k))
    weights = weights / weights.sum()
    return SimplexPoint.floating([float(w) for w in weights])


def pairwise_averaging(omega: SimplexPoint, rounds: int, rng: np.random.Generator) -> Tuple[SimplexPoint, float]:
    """
    反复随机选取两个坐标做平均化

    Returns:
        (最终点, 与均匀分布的最大偏差)
    """
    current = omega
    size = len(omega)
    if size >= 2:
        for _ in range(rounds):
            i, j = rng.choice(size, size=2, replace=False)
            current = average_out(current, (int(i) + 1, int(j) + 1))
    deviation = max(abs(float(x) - 1.0 / size) for x in current)
    return current, deviation
