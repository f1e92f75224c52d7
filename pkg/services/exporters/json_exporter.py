#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
JSON导出器
"""

import json
from typing import Any

from services.exporters.base_exporter import Exporter
from services.exporters.serialization import to_jsonable


class JSONExporter(Exporter):
    """JSON导出器"""

    def render(self, payload: Any) -> str:
        return json.dumps(to_jsonable(payload), ensure_ascii=False, indent=2) + "\n"

    def get_file_extension(self) -> str:
        return "json"
