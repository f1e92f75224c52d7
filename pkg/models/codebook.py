#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
码本相关数据模型：符号、码本、列表集合、组合（q-划分）
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from utils.exceptions import DimensionMismatchError, ParameterError

# 符号取值 1..q，与 [q] = {1,...,q} 保持一致
Symbol = int
Codeword = Tuple[int, ...]


def check_symbol(value: int, q: int) -> int:
    """检查符号是否落在 [1..q]"""
    if not isinstance(value, int) or not 1 <= value <= q:
        raise ParameterError(f"符号 {value!r} 不在 [1..{q}] 内")
    return value


@dataclass(frozen=True)
class Codebook:
    """码本：M×n 的符号矩阵，每一行是一个码字"""
    q: int
    rows: Tuple[Codeword, ...]
    n: int = 0

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError(f"字母表大小 q 必须 ≥ 2，实际为 {self.q}")
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        n = self.n if not rows else len(rows[0])
        if n < 1:
            raise ParameterError("码长 n 必须 ≥ 1")
        for index, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatchError(f"第 {index} 行长度为 {len(row)}，期望 {n}")
            for value in row:
                check_symbol(value, self.q)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_rows(cls, q: int, rows: Iterable[Sequence[int]], n: int = 0) -> Codebook:
        """从任意可迭代的行构造码本（空码本需要显式给出 n）"""
        return cls(q=q, rows=tuple(tuple(row) for row in rows), n=n)

    @property
    def size(self) -> int:
        """码字个数 M"""
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Codeword]:
        return iter(self.rows)

    def __getitem__(self, index: int) -> Codeword:
        return self.rows[index]

    def select(self, indices: Sequence[int]) -> List[Codeword]:
        """按行号（0 起）取出一个列表"""
        for index in indices:
            if not 0 <= index < self.size:
                raise ParameterError(f"行号 {index} 越界（M={self.size}）")
        return [self.rows[index] for index in indices]

    def column(self, j: int) -> Tuple[int, ...]:
        """第 j 列（0 起）"""
        return tuple(row[j] for row in self.rows)

    def project(self, coordinates: Sequence[int]) -> Codebook:
        """投影到坐标子集（0 起）"""
        coords = list(coordinates)
        if not coords:
            raise ParameterError("投影坐标集合不能为空")
        return Codebook.from_rows(self.q, (tuple(row[j] for j in coords) for row in self.rows), n=len(coords))

    def subcode(self, indices: Sequence[int]) -> Codebook:
        """按行号取子码"""
        return Codebook.from_rows(self.q, self.select(indices), n=self.n)


@dataclass(frozen=True)
class ListSet:
    """列表恢复中心：长度为 n 的 ℓ-子集序列 Y = (Y_1, ..., Y_n)"""
    q: int
    ell: int
    sets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not 1 <= self.ell <= self.q - 1:
            raise ParameterError(f"ℓ 必须满足 1 ≤ ℓ ≤ q-1，实际 ℓ={self.ell}, q={self.q}")
        normalized = []
        for j, subset in enumerate(self.sets):
            members = tuple(sorted(int(x) for x in subset))
            if len(set(members)) != self.ell or len(members) != self.ell:
                raise ParameterError(f"第 {j} 个集合 {subset!r} 不是 {self.ell} 个不同元素")
            for value in members:
                check_symbol(value, self.q)
            normalized.append(members)
        object.__setattr__(self, "sets", tuple(normalized))

    @classmethod
    def from_symbols(cls, q: int, center: Sequence[int]) -> ListSet:
        """ℓ=1：把普通中心字看作单点集合序列"""
        return cls(q=q, ell=1, sets=tuple((x,) for x in center))

    @property
    def n(self) -> int:
        return len(self.sets)

    def contains(self, j: int, symbol: int) -> bool:
        return symbol in self.sets[j]

    def as_symbols(self) -> Codeword:
        """ℓ=1 时还原为普通中心字"""
        if self.ell != 1:
            raise ParameterError("只有 ℓ=1 的列表集合才能还原为中心字")
        return tuple(s[0] for s in self.sets)

    def to_serializable(self) -> list:
        if self.ell == 1:
            return list(self.as_symbols())
        return [list(s) for s in self.sets]


@dataclass(frozen=True)
class SimplexCodeSpec:
    """构造码参数：M = q·m 个码字，列为全部平衡向量"""
    q: int
    ell: int
    L: int
    m: int

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError(f"q 必须 ≥ 2，实际 q={self.q}")
        if not 1 <= self.ell < self.q:
            raise ParameterError(f"需要 1 ≤ ℓ < q，实际 ℓ={self.ell}, q={self.q}")
        if self.L < 2:
            raise ParameterError(f"L 必须 ≥ 2，实际 L={self.L}")
        if self.m < 1:
            raise ParameterError(f"m 必须 ≥ 1，实际 m={self.m}")
        if self.L > self.M:
            raise ParameterError(f"L={self.L} 超过码字个数 M={self.M}")

    @property
    def M(self) -> int:
        return self.q * self.m

    @property
    def n(self) -> int:
        """C(qm; m, ..., m)"""
        result = 1
        running = 0
        for _ in range(self.q):
            running += self.m
            result *= math.comb(running, self.m)
        return result


@dataclass(frozen=True)
class Composition:
    """q-划分：(a_1, ..., a_q)，a_i ≥ 0，总和为 L"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        if not parts:
            raise ParameterError("组合至少需要一个分量")
        if any(a < 0 for a in parts):
            raise ParameterError(f"组合 {parts} 含有负分量")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def q(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]
