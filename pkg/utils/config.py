#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
工具包配置管理
"""

import os
from typing import Optional


class Config:
    """全局配置类"""

    def __init__(self):
        # 枚举预算
        self.CHEBYSHEV_BUDGET = 10 ** 7       # C(q,ℓ)^n 个候选中心
        self.F_ENUMERATION_BUDGET = 10 ** 8   # q^L 项
        self.CONSTRUCTION_N_BUDGET = 10 ** 6  # 构造码的码长 n
        self.TUPLE_BUDGET = 10 ** 6           # M^L 或 C(M,L) 个元组

        # 随机抽样
        self.DEFAULT_SEED = 7
        self.SAMPLE_SIZE = 20000
        self.RANDOM_DENOMINATOR = 64

        # 数值容差
        self.LP_TOLERANCE = 1e-9
        self.FLOAT_SUM_TOLERANCE = 1e-12

        # 输出
        self.DECIMAL_DIGITS = 12
        self.OUTPUT_DIR = "outputs"

        # 并行
        self.DEFAULT_WORKERS = 1

        self._apply_environment()

    def _apply_environment(self) -> None:
        """环境变量覆盖：ZR_BUDGET 替换所有枚举预算，ZR_WORKERS 替换并行数"""
        budget = _read_int_env("ZR_BUDGET")
        if budget is not None:
            self.CHEBYSHEV_BUDGET = budget
            self.F_ENUMERATION_BUDGET = budget
            self.CONSTRUCTION_N_BUDGET = budget
            self.TUPLE_BUDGET = budget

        workers = _read_int_env("ZR_WORKERS")
        if workers is not None and workers >= 1:
            self.DEFAULT_WORKERS = workers


def _read_int_env(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw.strip())
    except ValueError:
        return None


_config: Optional[Config] = None


def get_config() -> Config:
    """获取进程级配置实例"""
    global _config
    if _config is None:
        _config = Config()
    return _config


def reset_config() -> Config:
    """重新读取环境变量并生成新的配置实例"""
    global _config
    _config = Config()
    return _config
