#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
松弛 Chebyshev 半径

中心 y 的每个坐标放宽为 Δ(𝒳) 上的分布 y(j)，码字 c_i 到 y 的距离为
Σ_j (1 - Σ_{A∋c_i(j)} y(j,A))。最小化最大距离是一个线性规划；其对偶等价于
在 ω ∈ Δ([L]) 上最大化加权平均半径，只依赖列表的类型。
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.combinatorics import lr_distance, subsets
from models.codebook import ListSet
from models.lp import LpProblem, LpSolution
from models.reports import FractionalCenter, TupleType
from models.simplex_point import SimplexPoint
from services.lp.solver import SimplexSolver
from services.radii import _check_ell, _validate_list
from utils.config import Config, get_config
from utils.exceptions import ParameterError, ZeroRateError
from utils.logger import get_logger

_logger = get_logger("Relaxation")


def _membership(rows, q: int, ell: int) -> np.ndarray:
    """member[i, j, a] = 1 当且仅当 c_i(j) ∈ 𝒳[a]"""
    candidates = subsets(q, ell)
    L, n = len(rows), len(rows[0])
    member = np.zeros((L, n, len(candidates)))
    for i, row in enumerate(rows):
        for j, symbol in enumerate(row):
            for a, subset in enumerate(candidates):
                if symbol in subset:
                    member[i, j, a] = 1.0
    return member


def _center_block_rows(n: int, K: int, width: int) -> Tuple[np.ndarray, List[str]]:
    """Σ_A y(j,A) = 1 的 n 行"""
    rows = np.zeros((n, width))
    for j in range(n):
        rows[j, j * K:(j + 1) * K] = 1.0
    return rows, [f"simplex_{j}" for j in range(n)]


def _y_names(q: int, ell: int, n: int) -> List[str]:
    return [
        f"y_{j}_{''.join(str(x) for x in subset)}"
        for j in range(n) for subset in subsets(q, ell)
    ]


def relaxed_problem(codewords: Sequence[Sequence[int]], q: int, ell: int = 1) -> LpProblem:
    """
    最小化 T = t·n 的等式形式线性规划（写成 max -T）

    变量顺序：y(j,A)（j 优先），T，松弛变量 z_1..z_L。
    约束：Σ_A y(j,A) = 1；S_i(y) + T - z_i = n。
    """
    rows, n = _validate_list(codewords, q)
    _check_ell(q, ell)
    L, K = len(rows), len(subsets(q, ell))
    width = n * K + 1 + L
    member = _membership(rows, q, ell)

    block, row_names = _center_block_rows(n, K, width)
    distance_rows = np.zeros((L, width))
    for i in range(L):
        distance_rows[i, :n * K] = member[i].reshape(-1)
        distance_rows[i, n * K] = 1.0
        distance_rows[i, n * K + 1 + i] = -1.0
    matrix = np.vstack([block, distance_rows])
    rhs = np.concatenate([np.ones(n), np.full(L, float(n))])
    objective = np.zeros(width)
    objective[n * K] = -1.0
    names = _y_names(q, ell, n) + ["T"] + [f"z_{i}" for i in range(L)]
    return LpProblem(objective, matrix, rhs, tuple(names), tuple(row_names + [f"dist_{i}" for i in range(L)]))


def feasibility_problem(codewords: Sequence[Sequence[int]], q: int, t, ell: int = 1) -> LpProblem:
    """
    判定 rad ≤ t 的可行性问题：Σ_A y(j,A) = 1；d(c_i, y) + z_i = t·n

    变量顺序：y(j,A)，z_1..z_L；目标为 0。
    """
    rows, n = _validate_list(codewords, q)
    _check_ell(q, ell)
    L, K = len(rows), len(subsets(q, ell))
    width = n * K + L
    member = _membership(rows, q, ell)

    block, row_names = _center_block_rows(n, K, width)
    distance_rows = np.zeros((L, width))
    for i in range(L):
        distance_rows[i, :n * K] = -member[i].reshape(-1)
        distance_rows[i, n * K + i] = 1.0
    matrix = np.vstack([block, distance_rows])
    rhs = np.concatenate([np.ones(n), np.full(L, float(t) * n - n)])
    names = _y_names(q, ell, n) + [f"z_{i}" for i in range(L)]
    return LpProblem(np.zeros(width), matrix, rhs, tuple(names), tuple(row_names + [f"dist_{i}" for i in range(L)]))


def solve_relaxed(codewords: Sequence[Sequence[int]], q: int, ell: int = 1,
                  config: Optional[Config] = None) -> Tuple[LpProblem, LpSolution]:
    config = config or get_config()
    problem = relaxed_problem(codewords, q, ell)
    solution = SimplexSolver(config.LP_TOLERANCE).solve(problem)
    if not solution.is_optimal:
        # y 取任意顶点、T 取 n 总是可行，且 T ≥ 0 有界
        raise ZeroRateError(f"松弛半径线性规划求解失败: {solution.status.value}")
    return problem, solution


def relaxed_radius(codewords: Sequence[Sequence[int]], q: int, ell: int = 1,
                   config: Optional[Config] = None) -> Tuple[float, FractionalCenter]:
    """
    松弛半径 rad(c_1, ..., c_L) 及一个最优的分数中心

    返回的中心来自求解器给出的第一个最优基本可行解，至多 L 个坐标块不是顶点。
    """
    config = config or get_config()
    rows, n = _validate_list(codewords, q)
    K = len(subsets(q, ell))
    problem, solution = solve_relaxed(rows, q, ell, config)

    blocks = []
    for j in range(n):
        values = np.array(solution.x[j * K:(j + 1) * K], dtype=float)
        values[values <= config.LP_TOLERANCE] = 0.0
        values = values / values.sum()
        blocks.append(SimplexPoint.floating([float(v) for v in values]))
    value = max(0.0, -solution.objective_value / n)
    _logger.debug(f"松弛半径 {value:.12g}，非零变量 {solution.nonzero_count}/{problem.num_rows}")
    return value, FractionalCenter(q=q, ell=ell, blocks=tuple(blocks), tolerance=config.LP_TOLERANCE)


def omega_problem(tt: TupleType, ell: int = 1) -> LpProblem:
    """
    对偶一侧：max_ω 1 - Σ_u typ_u · max_A Σ_{i: u(i)∈A} ω(i)

    变量顺序：ω_1..ω_L，t_u（类型支撑中的模式，按字典序），松弛 s_{u,A}。
    约束：Σ ω = 1；t_u - Σ_{i: u(i)∈A} ω(i) - s_{u,A} = 0。
    """
    _check_ell(tt.q, ell)
    candidates = subsets(tt.q, ell)
    patterns = sorted(tt.counts)
    L, P, K = tt.L, len(patterns), len(candidates)
    width = L + P + P * K

    matrix = np.zeros((1 + P * K, width))
    matrix[0, :L] = 1.0
    row_names = ["omega_sum"]
    for p, pattern in enumerate(patterns):
        for a, subset in enumerate(candidates):
            r = 1 + p * K + a
            matrix[r, L + p] = 1.0
            for i, symbol in enumerate(pattern):
                if symbol in subset:
                    matrix[r, i] -= 1.0
            matrix[r, L + P + p * K + a] = -1.0
            row_names.append(f"cap_{p}_{a}")
    rhs = np.zeros(1 + P * K)
    rhs[0] = 1.0
    objective = np.zeros(width)
    weights = tt.weights
    for p, pattern in enumerate(patterns):
        objective[L + p] = -float(weights[pattern])
    names = (
        [f"omega_{i}" for i in range(L)]
        + [f"t_{p}" for p in range(P)]
        + [f"s_{p}_{a}" for p in range(P) for a in range(K)]
    )
    return LpProblem(objective, matrix, rhs, tuple(names), tuple(row_names))


def optimal_omega(tt: TupleType, ell: int = 1, config: Optional[Config] = None) -> Tuple[float, SimplexPoint]:
    """求解 ω 一侧的线性规划，返回 (最优值, 最优 ω)"""
    config = config or get_config()
    solution = SimplexSolver(config.LP_TOLERANCE).solve(omega_problem(tt, ell))
    if not solution.is_optimal:
        raise ZeroRateError(f"ω 线性规划求解失败: {solution.status.value}")
    omega = np.clip(solution.x[:tt.L], 0.0, None)
    omega = omega / omega.sum()
    return 1.0 + solution.objective_value, SimplexPoint.floating([float(w) for w in omega])


def relaxed_radius_via_omega(tt: TupleType, ell: int = 1, config: Optional[Config] = None) -> float:
    """通过 ω 一侧计算松弛半径；与 relaxed_radius 在容差内相等"""
    return optimal_omega(tt, ell, config)[0]


def round_center(center: FractionalCenter, codewords: Sequence[Sequence[int]],
                 q: int, ell: int = 1) -> Tuple[ListSet, Fraction]:
    """
    把分数中心取整为 ℓ-子集序列

    顶点块 e_A 映射为 A，其余块取 𝒳 中的第一个子集。每个非顶点块至多让距离增加 1，
    因此最大距离不超过 n·rad + L。

    Returns:
        (取整后的中心, 到列表的最大列表恢复距离（绝对值）)

    Raises:
        ParameterError: 非顶点块超过 L 个，说明输入不是基本可行解
    """
    rows, n = _validate_list(codewords, q)
    if center.n != n or center.q != q or center.ell != ell:
        raise ParameterError("分数中心与列表的参数不一致")
    candidates = subsets(q, ell)
    fractional = center.non_vertex_blocks()
    if len(fractional) > len(rows):
        raise ParameterError(
            f"分数中心有 {len(fractional)} 个非顶点块，超过 L={len(rows)}，不是基本可行解"
        )
    chosen = []
    for j in range(n):
        index = center.vertex_index(j)
        chosen.append(candidates[index if index is not None else 0])
    rounded = ListSet(q=q, ell=ell, sets=tuple(chosen))
    return rounded, Fraction(max(lr_distance(c, rounded) for c in rows))
