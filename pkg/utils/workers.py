#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
分区并行执行工具：结果始终按分区顺序返回，保证归约确定性。
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def run_partitioned(func: Callable[[T], R], parts: Sequence[T], workers: int = 1) -> List[R]:
    """
    对每个分区执行 func。

    Args:
        func: 分区处理函数（必须是纯函数）
        parts: 分区列表
        workers: 最大工作线程数，<=1 时顺序执行

    Returns:
        与 parts 顺序一致的结果列表
    """
    if workers <= 1 or len(parts) <= 1:
        return [func(part) for part in parts]

    with ThreadPoolExecutor(max_workers=min(workers, len(parts))) as pool:
        return list(pool.map(func, parts))
