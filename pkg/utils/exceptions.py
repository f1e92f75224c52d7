#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
统一异常定义与异常处理工具
"""

import sys
import traceback
from functools import wraps
from typing import Any, Callable, Optional, TypeVar

from utils.logger import get_logger

F = TypeVar('F', bound=Callable[..., Any])


class ZeroRateError(Exception):
    """本工具包所有异常的基类"""


class ParameterError(ZeroRateError, ValueError):
    """参数不满足前置条件（如 ℓ 越界、p 不在区间内）"""


class DimensionMismatchError(ParameterError):
    """码字长度或字母表大小不一致"""


class ModeMismatchError(ParameterError):
    """有理数模式与浮点模式的 SimplexPoint 混用"""


class CodebookFormatError(ZeroRateError, ValueError):
    """码本文件解析失败"""


class ResidualGrowthError(ZeroRateError):
    """折中表中 m²·|r(m)| 随 m 增大"""


class BudgetExceededError(ZeroRateError):
    """枚举规模超过配置预算"""

    def __init__(self, what: str, required: int, budget: int, hint: Optional[str] = None):
        self.what = what
        self.required = required
        self.budget = budget
        self.hint = hint
        message = f"instance too large: {what} 需要 {required} 次枚举，超过预算 {budget}"
        if hint:
            message = f"{message}（{hint}）"
        super().__init__(message)


def check_budget(what: str, required: int, budget: int, hint: Optional[str] = None) -> None:
    """枚举规模检查"""
    if required > budget:
        raise BudgetExceededError(what, required, budget, hint)


def handle_exceptions(
    logger_name: Optional[str] = None,
    default_return: Any = None,
    reraise: bool = False
):
    """
    异常处理装饰器

    Args:
        logger_name: 日志记录器名称
        default_return: 异常时的默认返回值
        reraise: 是否重新抛出异常
    """
    def decorator(func: F) -> F:
        @wraps(func)
        def wrapper(*args, **kwargs):
            logger = get_logger(logger_name or func.__module__)
            try:
                return func(*args, **kwargs)
            except Exception as e:
                logger.error(f"{func.__name__} 执行失败: {e}")
                logger.debug(traceback.format_exc())
                if reraise:
                    raise
                return default_return
        return wrapper
    return decorator


def log_exception(logger_name: Optional[str] = None, message: Optional[str] = None):
    """
    记录异常的工具函数

    Args:
        logger_name: 日志记录器名称
        message: 自定义错误消息
    """
    logger = get_logger(logger_name or "errors")
    exc_type, exc_value, exc_traceback = sys.exc_info()
    if exc_type is None:
        return
    error_msg = message or f"异常: {exc_type.__name__}: {exc_value}"
    logger.error(error_msg)
    logger.debug("".join(traceback.format_exception(exc_type, exc_value, exc_traceback)))
