# -*- coding: utf-8 -*-
"""
配置模块
=========
统一管理项目配置，从环境变量和 .env 文件加载。
"""

from .settings import settings
from .logging_config import setup_logging

__all__ = ["settings", "setup_logging"]
