#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
工具脚本模块：命令行入口。
"""

from tools.zr_cli import build_parser, main

__all__ = [
    "build_parser",
    "main",
]
