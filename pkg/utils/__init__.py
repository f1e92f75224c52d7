#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
工具模块：配置、日志、异常与并行执行。
"""
