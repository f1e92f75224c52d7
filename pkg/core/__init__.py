#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
核心模块 - 精确组合原语与单纯形上的分布
"""

from core.combinatorics import (
    hamming_distance,
    lr_distance,
    plurality,
    compositions,
    multinomial,
    maxl,
    subsets,
    top_sum,
)
from core.distributions import (
    uniform,
    average_out,
    p_qp,
    p_qlp,
    max_mass,
)

__all__ = [
    'hamming_distance',
    'lr_distance',
    'plurality',
    'compositions',
    'multinomial',
    'maxl',
    'subsets',
    'top_sum',
    'uniform',
    'average_out',
    'p_qp',
    'p_qlp',
    'max_mass',
]
