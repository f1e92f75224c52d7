#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
精确组合原语：距离、复数（plurality）、q-划分、多项式系数

所有闭式量都使用 Python 整数 / fractions.Fraction 精确计算。
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from models.codebook import Composition, ListSet
from utils.exceptions import DimensionMismatchError, ParameterError


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    """两个等长字之间不同坐标的个数"""
    if len(u) != len(v):
        raise DimensionMismatchError(f"长度不一致: {len(u)} != {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


def lr_distance(u: Sequence[int], centers: ListSet) -> int:
    """列表恢复距离：u(j) 不在 Y_j 中的坐标个数"""
    if len(u) != centers.n:
        raise DimensionMismatchError(f"码字长度 {len(u)} 与中心长度 {centers.n} 不一致")
    misses = 0
    for symbol, subset in zip(u, centers.sets):
        if not 1 <= symbol <= centers.q:
            raise DimensionMismatchError(f"符号 {symbol} 超出字母表 [1..{centers.q}]")
        if symbol not in subset:
            misses += 1
    return misses


def top_sum(values: Iterable, ell: int):
    """最大的 ℓ 个数之和"""
    ordered = sorted(values, reverse=True)
    return sum(ordered[:ell])


def plurality(xs: Sequence[int], ell: int, q: Optional[int] = None) -> int:
    """
    top-ℓ 复数：出现最多的 ℓ 个符号一共出现的次数

    Args:
        xs: L 个符号
        ell: ℓ
        q: 字母表大小（给出时检查 ℓ ≤ q）
    """
    if not xs:
        raise ParameterError("plurality 需要非空的符号序列")
    if ell < 1 or (q is not None and ell > q):
        raise ParameterError(f"ℓ={ell} 不满足 1 ≤ ℓ ≤ q")
    return top_sum(Counter(xs).values(), ell)


def compositions(q: int, total: int) -> List[Composition]:
    """按字典序枚举 𝒜_{q,L}，每个恰好一次"""
    if q < 1 or total < 0:
        raise ParameterError(f"需要 q ≥ 1 且 L ≥ 0，实际 q={q}, L={total}")
    return [Composition(parts) for parts in _composition_tuples(q, total)]


@lru_cache(maxsize=256)
def _composition_tuples(q: int, total: int) -> Tuple[Tuple[int, ...], ...]:
    if q == 1:
        return ((total,),)
    result = []
    for first in range(total + 1):
        for rest in _composition_tuples(q - 1, total - first):
            result.append((first,) + rest)
    return tuple(result)


def multinomial(parts: Iterable[int]) -> int:
    """多项式系数 L!/(a_1!...a_q!)；任一分量为负时按约定取 0"""
    values = list(parts)
    if any(a < 0 for a in values):
        return 0
    result = 1
    running = 0
    for a in values:
        running += a
        result *= math.comb(running, a)
    return result


def maxl(parts: Iterable[int], ell: int) -> int:
    """最大的 ℓ 个分量之和"""
    values = list(parts)
    if not 1 <= ell <= len(values):
        raise ParameterError(f"ℓ={ell} 不满足 1 ≤ ℓ ≤ q={len(values)}")
    return top_sum(values, ell)


@lru_cache(maxsize=128)
def subsets(q: int, ell: int) -> Tuple[Tuple[int, ...], ...]:
    """𝒳 = ([q] 选 ℓ)，按反字典序（colex）排列"""
    if not 1 <= ell <= q:
        raise ParameterError(f"ℓ={ell} 不满足 1 ≤ ℓ ≤ q={q}")
    return tuple(sorted(combinations(range(1, q + 1), ell), key=lambda s: tuple(reversed(s))))


def subset_index(q: int, ell: int) -> dict:
    """ℓ-子集 → 在 𝒳 中的位置"""
    return {subset: index for index, subset in enumerate(subsets(q, ell))}
