# -*- coding: utf-8 -*-
"""
芽模块
======
多重线性映射、矩阵点上的求值、nc 微分算子 Δ^ℓ_Y 与截断芽运算。
"""

from .multimap import MultiMap, check_tensor_size
from .germ import (
    Jet,
    constant_jet,
    unit_jet,
    zero_jet,
    jet_mul,
    jet_inverse,
    ampliate,
    nilpotency_index,
    is_jointly_nilpotent,
    taylor_evaluate,
)
from .evaluation import (
    evaluate,
    block_point,
    differential,
    differential_map,
    jet_eval,
    shift_point,
    shift_block,
)

__all__ = [
    "MultiMap", "check_tensor_size",
    "Jet", "constant_jet", "unit_jet", "zero_jet", "jet_mul", "jet_inverse",
    "ampliate", "nilpotency_index", "is_jointly_nilpotent", "taylor_evaluate",
    "evaluate", "block_point", "differential", "differential_map", "jet_eval",
    "shift_point", "shift_block",
]
