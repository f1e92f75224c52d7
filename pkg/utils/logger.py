#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
统一日志系统
"""

import logging
import sys
from typing import Optional, TextIO

ROOT_LOGGER_NAME = "zero_rate"

# 全局日志配置
_root_logger: Optional[logging.Logger] = None


def _get_root_logger() -> logging.Logger:
    """获取包级根日志记录器（只初始化一次）"""
    global _root_logger
    if _root_logger is None:
        _root_logger = logging.getLogger(ROOT_LOGGER_NAME)
        _root_logger.setLevel(logging.INFO)
        _root_logger.propagate = False

        # 避免重复添加handler
        if not _root_logger.handlers:
            # 控制台handler
            console_handler = logging.StreamHandler(sys.stdout)
            console_handler.setLevel(logging.DEBUG)

            # 格式化
            formatter = logging.Formatter(
                '[%(levelname)s] %(name)s: %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            )
            console_handler.setFormatter(formatter)

            _root_logger.addHandler(console_handler)

    return _root_logger


def get_logger(name: str = ROOT_LOGGER_NAME) -> logging.Logger:
    """
    获取日志记录器

    Args:
        name: 组件名称，如 "RadiusService"；会挂到包级根记录器之下

    Returns:
        共享根记录器handler的子记录器
    """
    root = _get_root_logger()
    if not name or name == ROOT_LOGGER_NAME:
        return root
    return root.getChild(name)


def setup_logging(level: int = logging.INFO, log_file: Optional[str] = None, stream: Optional[TextIO] = None):
    """
    配置日志系统

    Args:
        level: 根记录器级别
        log_file: 额外写入的日志文件
        stream: 控制台handler改写到的流（命令行把日志移到 stderr）
    """
    logger = _get_root_logger()
    logger.setLevel(level)

    if stream is not None:
        for handler in logger.handlers:
            if type(handler) is logging.StreamHandler:
                handler.setStream(stream)

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)
        formatter = logging.Formatter(
            '%(asctime)s [%(levelname)s] %(name)s: %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
