#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
两阶段单纯形法（Bland 规则），返回基本可行解

问题形式：max c·x, s.t. A x = b, x ≥ 0。每次迭代直接用当前基矩阵求解
（修正单纯形），规模只有几百个变量，不做稀疏或数值稳定性上的优化。
"""

from __future__ import annotations

import csv
from typing import List, Optional, Tuple

import numpy as np

from models.lp import LpProblem, LpSolution, LpStatus
from utils.config import get_config
from utils.logger import get_logger


class SimplexSolver:
    """稠密两阶段单纯形求解器"""

    def __init__(self, tolerance: Optional[float] = None, max_iterations: int = 50000):
        self.tolerance = tolerance if tolerance is not None else get_config().LP_TOLERANCE
        self.max_iterations = max_iterations
        self._logger = get_logger("SimplexSolver")

    # ------------------------------------------------------------------ API --
    def solve(self, problem: LpProblem) -> LpSolution:
        A = np.array(problem.matrix, dtype=float)
        b = np.array(problem.rhs, dtype=float)
        c = np.array(problem.objective, dtype=float)
        m, n = A.shape

        # 保证 b ≥ 0
        flip = b < 0
        A[flip] *= -1.0
        b[flip] *= -1.0

        # 第一阶段：人工变量 n..n+m-1，最大化 -Σ 人工变量
        A1 = np.hstack([A, np.eye(m)])
        c1 = np.concatenate([np.zeros(n), -np.ones(m)])
        basis = list(range(n, n + m))
        status, basis, iterations = self._iterate(A1, b, c1, basis)
        x1 = self._basic_solution(A1, b, basis)
        if status is not LpStatus.OPTIMAL or float(c1 @ x1) < -self.tolerance * max(1.0, float(np.abs(b).sum())):
            self._logger.debug("第一阶段目标为负，问题不可行")
            return LpSolution(status=LpStatus.INFEASIBLE, iterations=iterations, tolerance=self.tolerance)

        basis, kept_rows = self._drive_out_artificials(A1, b, basis, n)
        A2 = A[kept_rows]
        b2 = b[kept_rows]

        # 第二阶段
        status, basis, more = self._iterate(A2, b2, c, basis)
        iterations += more
        if status is LpStatus.UNBOUNDED:
            return LpSolution(status=LpStatus.UNBOUNDED, iterations=iterations, tolerance=self.tolerance)

        x = self._basic_solution(A2, b2, basis)
        x[np.abs(x) <= self.tolerance] = 0.0

        # 对偶值按原始（未翻转符号）的行计算，冗余行取 0
        original = np.asarray(problem.matrix, dtype=float)[kept_rows]
        duals = np.zeros(m)
        duals[kept_rows] = np.linalg.solve(original[:, basis].T, c[basis])

        self._logger.debug(f"单纯形完成: {iterations} 次迭代, 目标值 {float(c @ x):.12g}")
        return LpSolution(
            status=LpStatus.OPTIMAL,
            x=x,
            basis=tuple(sorted(basis)),
            objective_value=float(c @ x),
            duals=duals,
            iterations=iterations,
            tolerance=self.tolerance,
        )

    # ------------------------------------------------------------- internals --
    @staticmethod
    def _basic_solution(A: np.ndarray, b: np.ndarray, basis: List[int]) -> np.ndarray:
        x = np.zeros(A.shape[1])
        if basis:
            x[basis] = np.linalg.solve(A[:, basis], b)
        return x

    def _iterate(self, A: np.ndarray, b: np.ndarray, c: np.ndarray,
                 basis: List[int]) -> Tuple[LpStatus, List[int], int]:
        """从可行基出发做 Bland 规则迭代"""
        basis = list(basis)
        tol = self.tolerance
        for iteration in range(self.max_iterations):
            B = A[:, basis]
            x_B = np.linalg.solve(B, b)
            y = np.linalg.solve(B.T, c[basis])
            reduced = c - A.T @ y

            in_basis = set(basis)
            entering = next(
                (j for j in range(A.shape[1]) if j not in in_basis and reduced[j] > tol),
                None,
            )
            if entering is None:
                return LpStatus.OPTIMAL, basis, iteration

            direction = np.linalg.solve(B, A[:, entering])
            leaving_pos = None
            best_ratio = None
            for pos, step in enumerate(direction):
                if step <= tol:
                    continue
                ratio = max(x_B[pos], 0.0) / step
                if (best_ratio is None or ratio < best_ratio - tol
                        or (abs(ratio - best_ratio) <= tol and basis[pos] < basis[leaving_pos])):
                    best_ratio, leaving_pos = ratio, pos
            if leaving_pos is None:
                return LpStatus.UNBOUNDED, basis, iteration
            basis[leaving_pos] = entering
        raise RuntimeError(f"单纯形迭代超过上限 {self.max_iterations}")

    def _drive_out_artificials(self, A1: np.ndarray, b: np.ndarray, basis: List[int],
                               n: int) -> Tuple[List[int], List[int]]:
        """把零水平的人工变量换出基；换不出的行是冗余行，直接删除"""
        basis = list(basis)
        rows = list(range(A1.shape[0]))
        pos = 0
        while pos < len(basis):
            if basis[pos] < n:
                pos += 1
                continue
            B = A1[np.ix_(rows, basis)]
            row_of_inverse = np.linalg.solve(B.T, np.eye(len(basis))[pos])
            candidates = row_of_inverse @ A1[rows, :n]
            in_basis = set(basis)
            replacement = next(
                (j for j in range(n) if j not in in_basis and abs(candidates[j]) > self.tolerance),
                None,
            )
            if replacement is None:
                # 该行是其余行的线性组合
                row = self._row_of_artificial(basis[pos], n)
                rows.remove(row)
                basis.pop(pos)
                self._logger.debug(f"删除冗余约束行 {row}")
                continue
            basis[pos] = replacement
            pos += 1
        return basis, rows

    @staticmethod
    def _row_of_artificial(index: int, n: int) -> int:
        return index - n


def solve(problem: LpProblem, tolerance: Optional[float] = None) -> LpSolution:
    """用默认求解器求解一个线性规划"""
    return SimplexSolver(tolerance).solve(problem)


def primal_residual(problem: LpProblem, solution: LpSolution) -> float:
    """‖A x - b‖_∞"""
    if solution.x is None:
        return float("inf")
    return float(np.max(np.abs(problem.matrix @ solution.x - problem.rhs), initial=0.0))


def complementary_slackness_residual(problem: LpProblem, solution: LpSolution) -> float:
    """max_j |x_j · (c_j - a_j·y)|，并把对偶不可行的部分也计入"""
    if not solution.is_optimal:
        return float("inf")
    reduced = problem.objective - problem.matrix.T @ solution.duals
    slackness = np.abs(solution.x * reduced)
    dual_violation = np.clip(reduced, 0.0, None)
    return float(max(np.max(slackness, initial=0.0), np.max(dual_violation, initial=0.0)))


def dump_tsv(problem: LpProblem, path: str) -> str:
    """把问题写成 TSV（首行变量名加 rhs，第二行目标函数），便于外部交叉验证"""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, delimiter="\t")
        writer.writerow(["row", *problem.variable_names, "rhs"])
        writer.writerow(["objective", *[repr(float(v)) for v in problem.objective], ""])
        for name, row, rhs in zip(problem.row_names, problem.matrix, problem.rhs):
            writer.writerow([name, *[repr(float(v)) for v in row], repr(float(rhs))])
    return path
