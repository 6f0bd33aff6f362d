# -*- coding: utf-8 -*-
"""
LAC 模块
========
截断 lost-abbey 条件与 Y-容许性检查。
"""

from .conditions import (
    Violation,
    LacReport,
    chain_defect,
    module_defects,
    check_lac_truncated,
    check_admissible,
    admissibility_defects,
)

__all__ = [
    "Violation", "LacReport", "chain_defect", "module_defects",
    "check_lac_truncated", "check_admissible", "admissibility_defects",
]
