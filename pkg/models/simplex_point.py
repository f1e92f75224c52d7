#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
概率单纯形上的点：输入分布 P、权重 ω、松弛中心的每一块 y(j)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence, Tuple, Union

from utils.exceptions import ModeMismatchError, ParameterError

Number = Union[Fraction, float]

FLOAT_SUM_TOLERANCE = 1e-12


class PointMode(Enum):
    """数值模式标签"""
    RATIONAL = "rational"
    FLOAT = "float"


@dataclass(frozen=True)
class SimplexPoint:
    """Δ([k]) 中的一个点，分量为精确有理数或浮点数"""
    entries: Tuple[Number, ...]
    mode: PointMode = PointMode.RATIONAL

    def __post_init__(self):
        if len(self.entries) < 1:
            raise ParameterError("单纯形点至少需要一个分量")
        if self.mode is PointMode.RATIONAL:
            entries = tuple(_as_fraction(x) for x in self.entries)
            if any(x < 0 for x in entries):
                raise ParameterError(f"分量必须非负: {entries}")
            if sum(entries) != 1:
                raise ParameterError(f"分量之和必须为 1，实际为 {sum(entries)}")
        else:
            entries = tuple(float(x) for x in self.entries)
            if any(x < 0 for x in entries):
                raise ParameterError(f"分量必须非负: {entries}")
            if abs(sum(entries) - 1.0) > FLOAT_SUM_TOLERANCE:
                raise ParameterError(f"分量之和偏离 1 超过 {FLOAT_SUM_TOLERANCE}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def rational(cls, entries: Sequence) -> SimplexPoint:
        return cls(tuple(entries), PointMode.RATIONAL)

    @classmethod
    def floating(cls, entries: Sequence) -> SimplexPoint:
        return cls(tuple(entries), PointMode.FLOAT)

    @property
    def is_rational(self) -> bool:
        return self.mode is PointMode.RATIONAL

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Number]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> Number:
        return self.entries[index]

    def max_entry(self) -> Tuple[Number, int]:
        """最大分量及其下标（0 起，平局取最小下标）"""
        best_index = 0
        for index, value in enumerate(self.entries):
            if value > self.entries[best_index]:
                best_index = index
        return self.entries[best_index], best_index

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.entries) if x > 0)

    def is_full_support(self) -> bool:
        return all(x > 0 for x in self.entries)

    def to_float(self) -> SimplexPoint:
        if not self.is_rational:
            return self
        return SimplexPoint(tuple(float(x) for x in self.entries), PointMode.FLOAT)

    def to_serializable(self) -> list:
        if self.is_rational:
            return [f"{x.numerator}/{x.denominator}" for x in self.entries]
        return list(self.entries)


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise ModeMismatchError(f"有理数模式下不接受浮点分量 {value!r}")
    return Fraction(value)


def require_same_mode(*points: SimplexPoint) -> PointMode:
    """同一表达式中的点必须处于同一模式"""
    modes = {p.mode for p in points}
    if len(modes) > 1:
        raise ModeMismatchError("不能在同一计算中混用有理数模式与浮点模式")
    return modes.pop()


def require_rational(*points: SimplexPoint) -> None:
    for point in points:
        if not point.is_rational:
            raise ModeMismatchError("该运算需要有理数模式的单纯形点")
