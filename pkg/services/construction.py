#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
构造服务 - 平衡列构造码

M = q·m 个码字，列为所有恰含 m 个 1、m 个 2、…、m 个 q 的长为 qm 的向量，
每一行是一个码字。任意 L 个不同码字在一列上的取值服从无放回抽样（多元超几何分布），
因此所有 L 元组共享同一个类型，平均半径有精确闭式。
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import pandas as pd

from core.combinatorics import compositions, maxl, multinomial
from models.codebook import Codebook, SimplexCodeSpec
from models.reports import TradeoffReport
from services.thresholds import zero_rate_threshold
from utils.config import Config, get_config
from utils.exceptions import ParameterError, ResidualGrowthError, ZeroRateError, check_budget
from utils.logger import get_logger

_logger = get_logger("ConstructionService")

TRADEOFF_COLUMNS = ["m", "M", "n", "p_exact", "p_star", "c_over_m", "residual"]


def spec_for(q: int, ell: int, L: int, m: int) -> SimplexCodeSpec:
    """构造参数（带前置条件检查）"""
    return SimplexCodeSpec(q=q, ell=ell, L=L, m=m)


def _balanced_columns(q: int, m: int) -> Iterator[Tuple[int, ...]]:
    """按字典序生成每个符号恰好出现 m 次的长为 qm 的向量"""
    length = q * m
    remaining = [m] * (q + 1)
    prefix: List[int] = []

    def extend() -> Iterator[Tuple[int, ...]]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for symbol in range(1, q + 1):
            if remaining[symbol]:
                remaining[symbol] -= 1
                prefix.append(symbol)
                yield from extend()
                prefix.pop()
                remaining[symbol] += 1

    return extend()


def generate(spec: SimplexCodeSpec, config: Optional[Config] = None) -> Codebook:
    """
    生成构造码

    Raises:
        BudgetExceededError: n 超过 CONSTRUCTION_N_BUDGET
    """
    config = config or get_config()
    n = spec.n
    check_budget("构造码的码长", n, config.CONSTRUCTION_N_BUDGET, hint="减小 m")
    if spec.q == 2:
        _logger.warning("q=2 的构造码只用于交叉检验，构造结论针对 q ≥ 3")
    columns = list(_balanced_columns(spec.q, spec.m))
    _logger.debug(f"生成构造码: q={spec.q}, m={spec.m}, M={spec.M}, n={n}")
    return Codebook.from_rows(spec.q, zip(*columns), n=n)


def hypergeometric_type(spec: SimplexCodeSpec, pattern: Sequence[int]) -> Fraction:
    """任意 L 个不同码字的类型在模式 u 上的取值：C(qm-L; m-a) / C(qm; m,...,m)"""
    if len(pattern) != spec.L:
        raise ParameterError(f"模式长度 {len(pattern)} 与 L={spec.L} 不一致")
    counts = [0] * spec.q
    for symbol in pattern:
        if not 1 <= symbol <= spec.q:
            raise ParameterError(f"符号 {symbol} 不在 [1..{spec.q}] 内")
        counts[symbol - 1] += 1
    return Fraction(multinomial(spec.m - a for a in counts), spec.n)


def exact_expected_plurality(spec: SimplexCodeSpec) -> Fraction:
    """
    (1/L) E[plur_ℓ]，其中 L 个符号从平衡多重集中无放回抽取

    分量 a_i > m 的项按约定为零（多项式系数含负分量时为 0）。
    """
    total_columns = spec.n
    expected = Fraction(0)
    for a in compositions(spec.q, spec.L):
        rest = multinomial(spec.m - a_i for a_i in a)
        if rest:
            expected += Fraction(maxl(a, spec.ell) * multinomial(a) * rest, spec.L * total_columns)
    return expected


def exact_radius(spec: SimplexCodeSpec) -> Fraction:
    """p_exact = 1 - exact_expected_plurality：任意 L 个不同码字的平均 ℓ-半径"""
    return 1 - exact_expected_plurality(spec)


def coefficient_verified(ell: int, L: int) -> bool:
    """正性证明只覆盖 L > ℓ"""
    return L > ell


def c_coefficient(q: int, ell: int, L: int) -> Fraction:
    """
    c_{q,ℓ,L} = q^{-L} Σ_a (maxl(a)/L) C(L; a) (Σ_i C(a_i,2) - C(L,2)/q)

    L > ℓ 时必须为正；L ≤ ℓ 时照常返回但只记录警告。
    """
    if q < 3:
        raise ParameterError(f"系数只对 q ≥ 3 定义，实际 q={q}")
    if not 1 <= ell < q:
        raise ParameterError(f"需要 1 ≤ ℓ < q，实际 ℓ={ell}, q={q}")
    if L < 2:
        raise ParameterError(f"L 必须 ≥ 2，实际 L={L}")
    pair_term = Fraction(math.comb(L, 2), q)
    total = Fraction(0)
    for a in compositions(q, L):
        collisions = sum(math.comb(a_i, 2) for a_i in a)
        total += Fraction(maxl(a, ell), L) * multinomial(a) * (collisions - pair_term)
    value = total / q ** L
    if not coefficient_verified(ell, L):
        _logger.warning(f"c_{{{q},{ell},{L}}} 的正性未经验证（需要 L > ℓ）")
    elif value <= 0:
        raise ZeroRateError(f"c_{{{q},{ell},{L}}} = {value} 不为正")
    return value


def tradeoff_table(q: int, ell: int, L: int, m_values: Sequence[int]) -> TradeoffReport:
    """p_exact(m) 与一阶近似 p* + c/m 的对比"""
    if not m_values:
        raise ParameterError("m 列表不能为空")
    p_star = zero_rate_threshold(q, ell, L)
    coefficient = c_coefficient(q, ell, L)
    rows = []
    for m in sorted(set(m_values)):
        spec = spec_for(q, ell, L, m)
        p_exact = exact_radius(spec)
        c_over_m = coefficient / m
        rows.append({
            "m": m,
            "M": spec.M,
            "n": spec.n,
            "p_exact": p_exact,
            "p_star": p_star,
            "c_over_m": c_over_m,
            "residual": p_exact - p_star - c_over_m,
        })
    report = TradeoffReport(q=q, ell=ell, L=L, p_star=p_star, coefficient=coefficient, rows=rows)
    if not report.scaled_residuals_nonincreasing:
        scaled = ", ".join(f"m={row['m']}: {value}" for row, value in zip(rows, report.scaled_residuals))
        raise ResidualGrowthError(f"m²·|r(m)| 在给定范围内不是单调不增的（{scaled}）")
    return report


def tradeoff_frame(report: TradeoffReport) -> pd.DataFrame:
    """折中表的 DataFrame 形式（分数保持为 Fraction 对象）"""
    return pd.DataFrame(report.rows, columns=TRADEOFF_COLUMNS)


def list_average_radii(spec: SimplexCodeSpec, code: Optional[Codebook] = None,
                       config: Optional[Config] = None) -> Dict[Tuple[int, ...], Fraction]:
    """所有 C(M, L) 个不同 L-列表的平均 ℓ-半径"""
    from services.radii import average_radius

    config = config or get_config()
    check_budget("L-列表枚举", math.comb(spec.M, spec.L), config.TUPLE_BUDGET)
    code = code if code is not None else generate(spec, config)
    return {
        rows: average_radius(code.select(rows), spec.q, spec.ell)
        for rows in combinations(range(code.size), spec.L)
    }
