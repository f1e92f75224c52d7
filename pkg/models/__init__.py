#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
数据模型模块
"""

from models.codebook import Codebook, Codeword, Composition, ListSet, SimplexCodeSpec, Symbol
from models.simplex_point import PointMode, SimplexPoint
from models.lp import LpProblem, LpSolution, LpStatus
from models.reports import (
    TupleType,
    FractionalCenter,
    RadiusReport,
    CriterionReport,
    AveragingReport,
    MaximalityReport,
    SchurReport,
    CodeAverageReport,
    TradeoffReport,
    Verdict,
    VerdictKind,
    AbundanceReport,
    ProjectionResult,
    PropertyResult,
)

__all__ = [
    "Codebook",
    "Codeword",
    "Composition",
    "ListSet",
    "SimplexCodeSpec",
    "Symbol",
    "PointMode",
    "SimplexPoint",
    "LpProblem",
    "LpSolution",
    "LpStatus",
    "TupleType",
    "FractionalCenter",
    "RadiusReport",
    "CriterionReport",
    "AveragingReport",
    "MaximalityReport",
    "SchurReport",
    "CodeAverageReport",
    "TradeoffReport",
    "Verdict",
    "VerdictKind",
    "AbundanceReport",
    "ProjectionResult",
    "PropertyResult",
]
