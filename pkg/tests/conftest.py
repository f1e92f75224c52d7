# -*- coding: utf-8 -*-

"""测试共享夹具"""

import json
import logging
import os
import sys

import numpy as np
import pytest

from models.codebook import Codebook
from utils.config import Config
from utils.logger import get_logger

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# q=3, m=1 的平衡列构造码：3 个码字，6 列为 (1,2,3) 的全部排列
SIMPLEX_ROWS = [
    (1, 1, 2, 2, 3, 3),
    (2, 3, 1, 3, 1, 2),
    (3, 2, 3, 1, 2, 1),
]


@pytest.fixture(autouse=True)
def _console_log_stream():
    """命令行会把控制台handler改写到当前 sys.stderr；pytest 每个用例结束后会关闭捕获流，
    所以每个用例开始前把handler指回当前的 sys.stderr"""
    for handler in get_logger().handlers:
        if type(handler) is logging.StreamHandler:
            handler.stream = sys.stderr
    yield


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def config():
    return Config()


@pytest.fixture
def small_budget_config():
    cfg = Config()
    cfg.CHEBYSHEV_BUDGET = 10
    cfg.TUPLE_BUDGET = 10
    cfg.CONSTRUCTION_N_BUDGET = 10
    cfg.F_ENUMERATION_BUDGET = 10
    return cfg


@pytest.fixture
def simplex_code():
    return Codebook.from_rows(3, SIMPLEX_ROWS)


@pytest.fixture
def codefile(tmp_path):
    """把码本写到临时文件，返回路径"""
    def write(q, rows, name="code.txt"):
        path = tmp_path / name
        lines = [f"{q} {len(rows[0])} {len(rows)}"] + [" ".join(str(x) for x in row) for row in rows]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def load_schema():
    def load(name):
        with open(os.path.join(ROOT, "schemas", name), encoding="utf-8") as f:
            return json.load(f)
    return load
