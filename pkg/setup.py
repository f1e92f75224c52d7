#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
工具箱安装脚本
"""

import os
import subprocess
import sys


def install_requirements(with_tests: bool = True) -> bool:
    """安装依赖包"""
    print("正在安装依赖包...")
    packages = ["numpy", "pandas"]
    if with_tests:
        packages += ["pytest", "hypothesis", "scipy", "jsonschema"]
    try:
        subprocess.check_call([sys.executable, "-m", "pip", "install", *packages])
        print("✓ 依赖包安装完成")
        return True
    except subprocess.CalledProcessError as e:
        print(f"✗ 依赖包安装失败: {e}")
        return False


def create_directories():
    """创建输出目录"""
    from utils.config import get_config

    directory = get_config().OUTPUT_DIR
    if not os.path.exists(directory):
        os.makedirs(directory)
        print(f"✓ 创建目录: {directory}")


def main():
    """主安装函数"""
    print("=== 零速率列表恢复工具箱安装程序 ===")

    if sys.version_info < (3, 9):
        print("✗ 需要Python 3.9或更高版本")
        return

    print(f"✓ Python版本: {sys.version}")

    create_directories()

    if not install_requirements(with_tests="--no-tests" not in sys.argv):
        return

    print("\n=== 安装完成 ===")
    print("查看命令: python main.py --help")
    print("运行测试: pytest")
    print("运行性质套件: python main.py propsuite --seed 7")


if __name__ == "__main__":
    if len(sys.argv) > 1 and not sys.argv[1].startswith("-"):
        # 由构建后端（pip / setuptools）调用时，元数据见 pyproject.toml
        from setuptools import setup
        setup()
    else:
        main()
