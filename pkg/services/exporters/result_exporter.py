#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
结果导出管理器 - 使用策略模式管理各种导出器
"""

from typing import Any, Callable, Dict, List, Optional

from services.exporters.base_exporter import Exporter
from services.exporters.codebook_exporter import CodebookExporter
from services.exporters.csv_exporter import CSVExporter
from services.exporters.json_exporter import JSONExporter
from utils.exceptions import ParameterError


class ResultExporter:
    """结果导出管理器"""

    def __init__(self):
        """初始化导出器注册表"""
        self.exporters: Dict[str, Exporter] = {
            'csv': CSVExporter(),
            'json': JSONExporter(),
            'codebook': CodebookExporter(),
        }

    def register_exporter(self, format_name: str, exporter: Exporter) -> None:
        """
        注册新的导出器

        Args:
            format_name: 格式名称
            exporter: 导出器实例
        """
        self.exporters[format_name] = exporter

    def render(self, format_name: str, payload: Any) -> str:
        """按格式名渲染为文本（供命令行直接打印）"""
        exporter = self.exporters.get(format_name)
        if not exporter:
            raise ParameterError(f"不支持的导出格式: {format_name}")
        return exporter.render(payload)

    def export(
        self,
        payload: Any,
        formats: List[str],
        target_dir: str,
        base_filename: str,
        update_text_callback: Optional[Callable[[str], None]] = None,
    ) -> List[str]:
        """
        导出结果到指定格式

        Args:
            payload: 待导出的结果
            formats: 要导出的格式列表（如 ['csv', 'json']）
            target_dir: 目标目录
            base_filename: 基础文件名（不含扩展名）
            update_text_callback: 更新文本回调

        Returns:
            成功导出的文件路径列表
        """
        saved_files = []

        for format_name in formats:
            exporter = self.exporters.get(format_name)
            if not exporter:
                if update_text_callback:
                    update_text_callback(f"不支持的导出格式: {format_name}\n")
                continue

            path = exporter.export(payload, target_dir, base_filename, update_text_callback)
            if path:
                saved_files.append(path)

        return saved_files
