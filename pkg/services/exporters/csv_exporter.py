#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
CSV导出器
"""

from fractions import Fraction

import pandas as pd

from services.exporters.base_exporter import Exporter
from services.exporters.serialization import fraction_text


class CSVExporter(Exporter):
    """CSV导出器：分数单元格写成 "a/b"，列顺序与 DataFrame 一致"""

    def render(self, payload: pd.DataFrame) -> str:
        frame = payload.apply(
            lambda column: column.map(lambda x: fraction_text(x) if isinstance(x, Fraction) else x)
        )
        return frame.to_csv(index=False, lineterminator="\n")

    def get_file_extension(self) -> str:
        return "csv"
