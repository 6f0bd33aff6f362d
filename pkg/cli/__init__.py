# -*- coding: utf-8 -*-
"""
命令行模块
==========
子命令分派表与入口函数。
"""

from .commands import Command, OPERATIONS
from .main import build_parser, exit_code_for, run, main

__all__ = ["Command", "OPERATIONS", "build_parser", "exit_code_for", "run", "main"]
