#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
线性规划数据模型（等式标准形：max c·x, s.t. A x = b, x ≥ 0）
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from utils.exceptions import DimensionMismatchError, ParameterError


class LpStatus(Enum):
    """求解状态"""
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """等式标准形线性规划，目标为最大化"""
    objective: np.ndarray
    matrix: np.ndarray
    rhs: np.ndarray
    variable_names: Tuple[str, ...] = ()
    row_names: Tuple[str, ...] = ()

    def __post_init__(self):
        c = np.asarray(self.objective, dtype=float).reshape(-1)
        a = np.asarray(self.matrix, dtype=float)
        b = np.asarray(self.rhs, dtype=float).reshape(-1)
        if a.ndim != 2:
            raise ParameterError("约束矩阵必须是二维的")
        if a.shape != (b.size, c.size):
            raise DimensionMismatchError(
                f"约束矩阵形状 {a.shape} 与 b({b.size})、c({c.size}) 不匹配"
            )
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b)) and np.all(np.isfinite(c))):
            raise ParameterError("线性规划数据必须全部有限")
        for arr in (a, b, c):
            arr.setflags(write=False)
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "matrix", a)
        object.__setattr__(self, "rhs", b)
        if not self.variable_names:
            object.__setattr__(self, "variable_names", tuple(f"x{j}" for j in range(c.size)))
        if not self.row_names:
            object.__setattr__(self, "row_names", tuple(f"r{i}" for i in range(b.size)))

    @property
    def num_rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def num_variables(self) -> int:
        return self.matrix.shape[1]

    @classmethod
    def from_lists(
        cls,
        objective: Sequence[float],
        matrix: Sequence[Sequence[float]],
        rhs: Sequence[float],
    ) -> LpProblem:
        return cls(np.array(objective, dtype=float), np.array(matrix, dtype=float), np.array(rhs, dtype=float))


@dataclass(frozen=True)
class LpSolution:
    """求解结果；最优时 x 为基本可行解"""
    status: LpStatus
    x: Optional[np.ndarray] = None
    basis: Tuple[int, ...] = ()
    objective_value: Optional[float] = None
    duals: Optional[np.ndarray] = None
    iterations: int = 0
    tolerance: float = 1e-9
    nonzero_count: int = field(init=False, default=0)

    def __post_init__(self):
        count = 0 if self.x is None else int(np.sum(np.abs(self.x) > self.tolerance))
        object.__setattr__(self, "nonzero_count", count)

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL
