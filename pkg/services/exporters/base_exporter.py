#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
导出器抽象基类
"""

import os
from abc import ABC, abstractmethod
from typing import Any, Callable, Optional


class Exporter(ABC):
    """导出器抽象基类：render 生成文本，export 写入文件"""

    @abstractmethod
    def render(self, payload: Any) -> str:
        """
        把结果渲染为文本

        Args:
            payload: 待导出的结果（dict、DataFrame 或 Codebook，取决于导出器）

        Returns:
            完整的文件内容
        """
        pass

    @abstractmethod
    def get_file_extension(self) -> str:
        """获取文件扩展名（不含点）"""
        pass

    def export(
        self,
        payload: Any,
        target_dir: str,
        base_filename: str,
        update_text_callback: Optional[Callable[[str], None]] = None,
    ) -> Optional[str]:
        """
        导出结果

        Args:
            payload: 待导出的结果
            target_dir: 目标目录
            base_filename: 基础文件名（不含扩展名）
            update_text_callback: 更新文本回调（用于错误提示）

        Returns:
            成功返回文件路径，失败返回None
        """
        try:
            os.makedirs(target_dir, exist_ok=True)
            path = os.path.join(target_dir, f"{base_filename}.{self.get_file_extension()}")
            with open(path, "w", newline="", encoding="utf-8") as f:
                f.write(self.render(payload))
            return path
        except Exception as exc:
            if update_text_callback:
                update_text_callback(f"保存 {self.get_file_extension().upper()} 文件失败: {str(exc)}\n")
            return None
