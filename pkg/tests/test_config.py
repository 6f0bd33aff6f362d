# -*- coding: utf-8 -*-
"""
配置测试
========
默认值与环境变量覆盖。

使用方法:
    pytest tests/test_config.py
"""
import logging
import sys
from pathlib import Path

# 添加项目根目录到 sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config import setup_logging
from config.settings import Settings


def test_defaults(monkeypatch):
    for name in ("NCGERM_MEM_CAP", "NCGERM_RETRY_CAP", "NCGERM_THREADS"):
        monkeypatch.delenv(name, raising=False)
    s = Settings(_env_file=None)
    assert s.ncgerm_mem_cap == 10_000_000
    assert s.ncgerm_default_dmax == 12
    assert s.ncgerm_threads == 1
    assert s.ncgerm_log_level == "INFO"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("NCGERM_RETRY_CAP", "5")
    monkeypatch.setenv("ncgerm_sample_bound", "3")
    s = Settings(_env_file=None)
    assert s.ncgerm_retry_cap == 5
    assert s.ncgerm_sample_bound == 3


def test_setup_logging_level():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    try:
        setup_logging("debug")
        assert root.level == logging.DEBUG
        assert len(root.handlers) == 1
    finally:
        root.handlers = handlers
        root.setLevel(level)
