#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
精确数值的序列化：分数写成 "a/b"，另附 12 位小数的 *_decimal 字段（仅供阅读）
"""

from __future__ import annotations

from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional

import numpy as np

from models.codebook import ListSet
from models.reports import AbundanceReport, PropertyResult, RadiusReport
from models.simplex_point import SimplexPoint
from utils.config import get_config


def fraction_text(value) -> str:
    """Fraction → "a/b"（整数写成 "a"）"""
    return str(Fraction(value))


def decimal_value(value, digits: Optional[int] = None) -> float:
    digits = get_config().DECIMAL_DIGITS if digits is None else digits
    return round(float(value), digits)


def exact_field(name: str, value) -> Dict[str, Any]:
    """{"name": "a/b", "name_decimal": 0.xxx}；值为 None 时两个字段都为 None"""
    if value is None:
        return {name: None, f"{name}_decimal": None}
    return {name: fraction_text(value), f"{name}_decimal": decimal_value(value)}


def to_jsonable(value: Any) -> Any:
    """把分数、枚举、numpy 标量、单纯形点、列表集合等递归转换为 JSON 兼容对象"""
    if isinstance(value, Fraction):
        return fraction_text(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (ListSet, SimplexPoint)):
        return value.to_serializable()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return [to_jsonable(x) for x in value.tolist()]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(x) for x in value]
    if is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    return value


def radius_report_to_json(report: RadiusReport) -> Dict[str, Any]:
    """半径报告；超出预算的字段为 null"""
    data: Dict[str, Any] = {"L": report.L, "n": report.n, "ell": report.ell}
    data.update(exact_field("chebyshev", report.chebyshev))
    data["chebyshev_center"] = report.chebyshev_center.to_serializable() if report.chebyshev_center else None
    data.update(exact_field("average", report.average))
    data["average_center"] = report.average_center.to_serializable()
    data["weighted"] = {label: fraction_text(value) for label, value in report.weighted.items()}
    data["relaxed"] = None if report.relaxed is None else decimal_value(report.relaxed)
    data["relaxed_center"] = report.relaxed_center.to_serializable() if report.relaxed_center else None
    data["sandwich_holds"] = report.check_sandwich()
    data["notes"] = list(report.notes)
    return data


def abundance_to_json(report: AbundanceReport) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "ell": report.ell,
        "L": report.L,
        "epsilon": fraction_text(report.epsilon),
        "tuples_examined": report.tuples_examined,
        "close_tuples": report.close_tuples,
        "fraction_close": decimal_value(report.fraction_close),
        "exhaustive": report.exhaustive,
        "confidence_interval": list(report.confidence_interval) if report.confidence_interval else None,
        "max_deviation": fraction_text(report.max_deviation),
        "histogram": [[fraction_text(d), count] for d, count in report.histogram],
        "radius_consistency_violations": report.radius_consistency_violations,
        "biased": report.biased,
    }
    data.update(exact_field("code_radius", report.code_radius))
    data.update(exact_field("dichotomy_threshold", report.dichotomy_threshold))
    return data


def property_results_to_json(results) -> Dict[str, Any]:
    items = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
    return {"passed": all(r.passed for r in results), "properties": items}
