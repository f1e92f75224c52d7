#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
服务层模块：半径、线性规划、阈值、构造、验证与结果导出。
"""

__all__ = [
    "radii",
    "lp",
    "thresholds",
    "construction",
    "verifier",
    "property_suite",
    "exporters",
]
