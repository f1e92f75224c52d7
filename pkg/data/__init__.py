#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
数据访问层：码本文件的解析、格式化与读写。
"""

from data.codebook_repository import (
    CodebookRepository,
    FileCodebookRepository,
    parse_codebook,
    format_codebook,
)

__all__ = [
    "CodebookRepository",
    "FileCodebookRepository",
    "parse_codebook",
    "format_codebook",
]
