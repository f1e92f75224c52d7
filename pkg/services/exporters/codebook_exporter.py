#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
码本导出器：首行 "q n M"，之后每行一个码字
"""

from data.codebook_repository import format_codebook
from models.codebook import Codebook
from services.exporters.base_exporter import Exporter


class CodebookExporter(Exporter):
    """码本文本导出器"""

    def render(self, payload: Codebook) -> str:
        return format_codebook(payload)

    def get_file_extension(self) -> str:
        return "txt"
