#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Repository层 - 码本文件的读写
文件格式：首行 "q n M"，之后 M 行，每行 n 个以空格分隔的符号
"""

from __future__ import annotations

import os
from abc import ABC, abstractmethod

from models.codebook import Codebook
from utils.exceptions import CodebookFormatError, ZeroRateError
from utils.logger import get_logger


def parse_codebook(text: str) -> Codebook:
    """
    解析码本文本

    Raises:
        CodebookFormatError: 头部或任一行不符合格式
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise CodebookFormatError("码本文件为空")
    header = lines[0].split()
    if len(header) != 3:
        raise CodebookFormatError(f"头部应为 'q n M'，实际为 {lines[0]!r}")
    try:
        q, n, size = (int(x) for x in header)
    except ValueError as exc:
        raise CodebookFormatError(f"头部含有非整数: {lines[0]!r}") from exc

    body = lines[1:]
    if len(body) != size:
        raise CodebookFormatError(f"头部声明 M={size}，实际有 {len(body)} 行")
    rows = []
    for number, line in enumerate(body, start=2):
        try:
            row = tuple(int(x) for x in line.split())
        except ValueError as exc:
            raise CodebookFormatError(f"第 {number} 行含有非整数: {line!r}") from exc
        if len(row) != n:
            raise CodebookFormatError(f"第 {number} 行长度为 {len(row)}，期望 n={n}")
        rows.append(row)
    try:
        return Codebook.from_rows(q, rows, n=n)
    except ZeroRateError as exc:
        raise CodebookFormatError(f"码本内容不合法: {exc}") from exc


def format_codebook(code: Codebook) -> str:
    """码本 → 文本"""
    lines = [f"{code.q} {code.n} {code.size}"]
    lines.extend(" ".join(str(x) for x in row) for row in code.rows)
    return "\n".join(lines) + "\n"


class CodebookRepository(ABC):
    """码本Repository抽象接口"""

    @abstractmethod
    def load(self, name: str) -> Codebook:
        """读取码本"""
        pass

    @abstractmethod
    def save(self, code: Codebook, name: str) -> str:
        """保存码本，返回实际位置"""
        pass


class FileCodebookRepository(CodebookRepository):
    """文本文件码本Repository实现"""

    def __init__(self, base_dir: str = "."):
        self.base_dir = base_dir
        self._logger = get_logger("CodebookRepository")

    def _path(self, name: str) -> str:
        return name if os.path.isabs(name) else os.path.join(self.base_dir, name)

    def load(self, name: str) -> Codebook:
        path = self._path(name)
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as exc:
            raise CodebookFormatError(f"无法读取码本文件 {path}: {exc}") from exc
        code = parse_codebook(text)
        self._logger.debug(f"读取码本 {path}: q={code.q}, n={code.n}, M={code.size}")
        return code

    def save(self, code: Codebook, name: str) -> str:
        path = self._path(name)
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(format_codebook(code))
        self._logger.debug(f"保存码本 {path}")
        return path
