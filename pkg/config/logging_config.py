# -*- coding: utf-8 -*-
"""
日志配置
========
为命令行入口安装彩色日志处理器；库模块只使用 logging.getLogger(__name__)。
"""

import logging
import sys

import colorlog


def setup_logging(level: str = "INFO") -> None:
    """
    配置根日志器：colorlog 彩色输出到 stderr

    Args:
        level: 日志级别名称，如 "INFO"、"DEBUG"
    """
    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(
        '%(log_color)s%(levelname)s:%(name)s:%(message)s'
    ))
    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(getattr(logging, level.upper(), logging.INFO))
