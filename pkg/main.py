#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""零速率列表恢复工具箱入口模块"""

import sys

REQUIRED_PACKAGES = [
    'numpy',
    'pandas',
]


def check_dependencies() -> bool:
    """检查依赖包是否齐全（只在缺失时输出，stdout 留给命令结果）"""
    missing_packages = []
    for package in REQUIRED_PACKAGES:
        try:
            __import__(package)
        except ImportError:
            missing_packages.append(package)

    if missing_packages:
        print("缺少以下依赖包:", file=sys.stderr)
        for package in missing_packages:
            print(f"  - {package}", file=sys.stderr)
        print("\n请运行以下命令安装依赖:", file=sys.stderr)
        print("pip install -r requirements.txt", file=sys.stderr)
        return False
    return True


def main() -> int:
    """程序入口"""
    if sys.version_info < (3, 9):
        print("✗ 需要 Python 3.9 或更高版本", file=sys.stderr)
        return 2
    if not check_dependencies():
        return 2

    from tools.zr_cli import main as cli_main

    try:
        return cli_main(sys.argv[1:])
    except KeyboardInterrupt:
        print("\n计算被用户中断", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
