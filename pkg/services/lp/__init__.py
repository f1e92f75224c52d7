#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
线性规划：Bland 规则单纯形求解器与松弛半径
"""

from services.lp.solver import (
    SimplexSolver,
    solve,
    primal_residual,
    complementary_slackness_residual,
    dump_tsv,
)
from services.lp.relaxation import (
    relaxed_problem,
    feasibility_problem,
    relaxed_radius,
    relaxed_radius_via_omega,
    optimal_omega,
    round_center,
)

__all__ = [
    'SimplexSolver',
    'solve',
    'primal_residual',
    'complementary_slackness_residual',
    'dump_tsv',
    'relaxed_problem',
    'feasibility_problem',
    'relaxed_radius',
    'relaxed_radius_via_omega',
    'optimal_omega',
    'round_center',
]
