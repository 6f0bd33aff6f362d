# -*- coding: utf-8 -*-
"""
ncgerm 主程序
=============
自由 nc 函数的精确计算工具：Hermite 插值、LAC 检查、传播、亚纯表达式检验。

使用方式：
    python ncgerm_main.py min-degree --problem data/example_L1.json
    python ncgerm_main.py growth-table --alpha 2 --beta 2 --lmax 6
    python ncgerm_main.py identity-test --expr data/hua.txt --sizes 1,2,3 --seed 7
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from cli import run


if __name__ == "__main__":
    sys.exit(run())
