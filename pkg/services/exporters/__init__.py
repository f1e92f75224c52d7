#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
结果导出器模块
"""

from services.exporters.base_exporter import Exporter
from services.exporters.csv_exporter import CSVExporter
from services.exporters.json_exporter import JSONExporter
from services.exporters.codebook_exporter import CodebookExporter
from services.exporters.result_exporter import ResultExporter

__all__ = [
    "Exporter",
    "CSVExporter",
    "JSONExporter",
    "CodebookExporter",
    "ResultExporter",
]
