# -*- coding: utf-8 -*-
"""
结构分析模块
============
矩阵点的生成代数、中心化子、半单/不可约/分离判定，以及 C(Y)-双模算子 π、σ、φ。
"""

from .algebra import (
    AlgebraBasis,
    generated_algebra,
    centralizer,
    is_semisimple,
    is_irreducible,
    possibly_irreducible_over_extension,
    are_separated,
    direct_sum_points,
    block_diagonal_subspace,
)
from .bimodule import BimoduleOps, bimodule_ops, verify_bimodule_ops

__all__ = [
    "AlgebraBasis", "generated_algebra", "centralizer", "is_semisimple",
    "is_irreducible", "possibly_irreducible_over_extension", "are_separated",
    "direct_sum_points", "block_diagonal_subspace",
    "BimoduleOps", "bimodule_ops", "verify_bimodule_ops",
]
