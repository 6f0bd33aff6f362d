# -*- coding: utf-8 -*-
"""
亚纯表达式模块
==============
表达式解析、矩阵点与芽上的求值、生成矩阵、随机恒等式检验与内秩估计。
"""

from .expr import (
    Const,
    Atom,
    Sum,
    Product,
    Inverse,
    MeroExpr,
    walk,
    node_at,
    atoms,
    is_inversion_free,
    has_series,
    series_order,
    letter_count,
)
from .evaluator import (
    EvalOutcome,
    evaluate_expr,
    expr_jet,
    expand_to_poly,
    expand_to_series,
    series_inverse,
)
from .parser import Token, tokenize, parse
from .generic import generic_matrices, generic_evaluate, generic_evaluate_expr, is_generic_zero, describe_generic
from .identity import (
    SizeVerdict,
    ZERO_VERDICT,
    NONZERO_VERDICT,
    UNDEFINED_VERDICT,
    random_point,
    identity_test,
)
from .rank import RankEstimate, block_evaluate, inner_rank_estimate, parse_matrix

__all__ = [
    "Const", "Atom", "Sum", "Product", "Inverse", "MeroExpr", "walk", "node_at", "atoms",
    "is_inversion_free", "has_series", "series_order", "letter_count",
    "EvalOutcome", "evaluate_expr", "expr_jet", "expand_to_poly", "expand_to_series",
    "series_inverse",
    "Token", "tokenize", "parse",
    "generic_matrices", "generic_evaluate", "generic_evaluate_expr", "is_generic_zero",
    "describe_generic",
    "SizeVerdict", "ZERO_VERDICT", "NONZERO_VERDICT", "UNDEFINED_VERDICT", "random_point",
    "identity_test",
    "RankEstimate", "block_evaluate", "inner_rank_estimate", "parse_matrix",
]
