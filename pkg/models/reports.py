#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
半径、阈值、构造与验证结果的数据模型
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from models.codebook import Codebook, ListSet
from models.simplex_point import SimplexPoint

Pattern = Tuple[int, ...]


@dataclass(frozen=True)
class TupleType:
    """L 元组的类型：n 列在 [q]^L 上的经验分布（只记录出现过的模式）"""
    q: int
    L: int
    n: int
    counts: Dict[Pattern, int]

    @property
    def weights(self) -> Dict[Pattern, Fraction]:
        return {u: Fraction(k, self.n) for u, k in self.counts.items()}

    def weight(self, pattern: Sequence[int]) -> Fraction:
        return Fraction(self.counts.get(tuple(pattern), 0), self.n)

    def all_patterns(self):
        """[q]^L 中的全部模式（按字典序）"""
        return product(range(1, self.q + 1), repeat=self.L)

    def deviation_from_uniform(self) -> Fraction:
        """max_u |typ_u - q^{-L}|"""
        target = Fraction(1, self.q ** self.L)
        worst = Fraction(0)
        for u in self.all_patterns():
            worst = max(worst, abs(self.weight(u) - target))
        return worst

    def __eq__(self, other) -> bool:
        if not isinstance(other, TupleType):
            return NotImplemented
        return (self.q, self.L) == (other.q, other.L) and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self.q, self.L, frozenset(self.weights.items())))


@dataclass(frozen=True)
class FractionalCenter:
    """松弛中心：每个坐标一块 Δ(𝒳) 上的浮点分布"""
    q: int
    ell: int
    blocks: Tuple[SimplexPoint, ...]
    tolerance: float = 1e-9

    @property
    def n(self) -> int:
        return len(self.blocks)

    def vertex_index(self, j: int) -> Optional[int]:
        """第 j 块若是顶点 e_A，返回 A 在 𝒳 中的位置，否则返回 None"""
        support = [a for a, value in enumerate(self.blocks[j]) if value > self.tolerance]
        if len(support) == 1 and abs(self.blocks[j][support[0]] - 1.0) <= 1e-6:
            return support[0]
        return None

    def non_vertex_blocks(self) -> List[int]:
        return [j for j in range(self.n) if self.vertex_index(j) is None]

    def to_serializable(self) -> list:
        return [list(block.entries) for block in self.blocks]


@dataclass
class RadiusReport:
    """一个列表的四种半径及其证书中心"""
    L: int
    n: int
    ell: int
    average: Fraction
    average_center: ListSet
    weighted: Dict[str, Fraction] = field(default_factory=dict)
    chebyshev: Optional[Fraction] = None
    chebyshev_center: Optional[ListSet] = None
    relaxed: Optional[float] = None
    relaxed_center: Optional[FractionalCenter] = None
    notes: List[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.chebyshev is not None and self.relaxed is not None

    def check_sandwich(self, tolerance: float = 1e-6) -> bool:
        """weighted ≤ relaxed ≤ chebyshev ≤ relaxed + L/n（缺失字段跳过）"""
        ok = True
        if self.relaxed is not None:
            ok = ok and float(self.average) <= self.relaxed + tolerance
            ok = ok and all(float(w) <= self.relaxed + tolerance for w in self.weighted.values())
        if self.chebyshev is not None:
            ok = ok and all(w <= self.chebyshev for w in self.weighted.values())
            ok = ok and self.average <= self.chebyshev
        if self.complete:
            ok = ok and self.relaxed <= float(self.chebyshev) + tolerance
            ok = ok and float(self.chebyshev) <= self.relaxed + self.L / self.n + tolerance
        return ok


@dataclass
class CriterionReport:
    """平均化最后两个坐标时的增长判据检查结果"""
    L: int
    ell: int
    patterns_checked: int
    holds: bool
    strict_instances: int
    strict_with_positive_probability: bool
    violations: List[Pattern]
    f_before: Fraction
    f_after: Fraction

    @property
    def f_increase_holds(self) -> bool:
        return self.f_after >= self.f_before

    @property
    def strict_increase_holds(self) -> bool:
        """有正概率的严格实例时 f 必须严格增长"""
        return not self.strict_with_positive_probability or self.f_after > self.f_before


@dataclass
class AveragingReport:
    """在任意坐标子集上平均化 ω 前后的 f 值"""
    subset: Tuple[int, ...]
    f_before: Fraction
    f_after: Fraction

    @property
    def holds(self) -> bool:
        return self.f_after >= self.f_before


@dataclass
class MaximalityReport:
    """ω ↦ f(P, ω) 在 U_L 处取最大值的抽样检查"""
    L: int
    ell: int
    trials: int
    f_at_uniform: Fraction
    strict_expected: bool
    nonstrict_violations: List[SimplexPoint] = field(default_factory=list)
    strict_failures: List[SimplexPoint] = field(default_factory=list)
    findings: List[SimplexPoint] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.nonstrict_violations and not self.strict_failures


@dataclass
class SchurReport:
    """Schur 性质、单调性与中点凹性的检查结果"""
    q: int
    ell: int
    L: int
    grid: List[Fraction]
    values: List[Fraction]
    random_trials: int
    schur_violations: List[SimplexPoint] = field(default_factory=list)
    monotone_violations: List[Tuple[Fraction, Fraction]] = field(default_factory=list)
    concavity_violations: List[Tuple[Fraction, Fraction]] = field(default_factory=list)
    pairs_checked: int = 0

    @property
    def holds(self) -> bool:
        return not (self.schur_violations or self.monotone_violations or self.concavity_violations)


@dataclass
class CodeAverageReport:
    """码平均加权半径的上界检查"""
    code_radius: Fraction
    mass_parameter: Fraction
    expectation: Fraction
    bound: Fraction
    column_values: List[Fraction]

    @property
    def holds(self) -> bool:
        return self.expectation <= self.bound


@dataclass
class TradeoffReport:
    """构造码的 (m, p) 折中表"""
    q: int
    ell: int
    L: int
    p_star: Fraction
    coefficient: Fraction
    rows: List[Dict[str, object]]

    @property
    def scaled_residuals(self) -> List[Fraction]:
        return [abs(row["residual"]) * row["m"] ** 2 for row in self.rows]

    @property
    def scaled_residuals_nonincreasing(self) -> bool:
        values = self.scaled_residuals
        return all(b <= a for a, b in zip(values, values[1:]))

    @property
    def above_threshold(self) -> bool:
        return all(row["p_exact"] > self.p_star for row in self.rows)

    @property
    def p_exact_decreasing(self) -> bool:
        values = [row["p_exact"] for row in self.rows]
        return all(b < a for a, b in zip(values, values[1:]))


class VerdictKind(Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass
class Verdict:
    """列表可恢复性判定结果；FAIL 时总是带有证据"""
    verdict: VerdictKind
    p: Fraction
    ell: int
    L: int
    witness_center: Optional[ListSet] = None
    captured_rows: List[int] = field(default_factory=list)
    min_radius: Optional[Fraction] = None
    method: str = "ball_search"

    @property
    def passed(self) -> bool:
        return self.verdict is VerdictKind.PASS


@dataclass
class AbundanceReport:
    """近似随机 L 元组的统计"""
    ell: int
    L: int
    epsilon: Fraction
    tuples_examined: int
    close_tuples: int
    exhaustive: bool
    histogram: List[Tuple[Fraction, int]]
    max_deviation: Fraction
    confidence_interval: Optional[Tuple[float, float]] = None
    radius_consistency_violations: int = 0
    code_radius: Optional[Fraction] = None
    dichotomy_threshold: Optional[Fraction] = None

    @property
    def fraction_close(self) -> float:
        return self.close_tuples / self.tuples_examined if self.tuples_examined else 0.0

    @property
    def biased(self) -> Optional[bool]:
        if self.code_radius is None or self.dichotomy_threshold is None:
            return None
        return self.code_radius <= self.dichotomy_threshold


@dataclass
class ProjectionResult:
    """投影引理给出的子码及其半径证书"""
    hypothesis_holds: bool
    projected_radius: Fraction
    hypothesis_bound: Fraction
    subcode_rows: List[int] = field(default_factory=list)
    center: Optional[ListSet] = None
    certified_radius: Optional[Fraction] = None
    bound: Optional[Fraction] = None
    majority_set: Optional[Tuple[int, ...]] = None
    subcode: Optional[Codebook] = None

    @property
    def certified(self) -> bool:
        return self.certified_radius is not None and self.bound is not None and self.certified_radius <= self.bound


@dataclass
class PropertyResult:
    """性质检查套件中单项的结果"""
    name: str
    passed: bool
    detail: str = ""
