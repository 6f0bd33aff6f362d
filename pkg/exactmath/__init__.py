# -*- coding: utf-8 -*-
"""
精确数学模块
============
有理数标量、精确线性代数、矩阵点以及全项目共用的异常。
"""

from .errors import (
    NcGermError,
    DimensionMismatch,
    SingularMatrixError,
    NotInvertibleError,
    PreconditionFailed,
    BasepointMismatch,
    NotSemisimpleError,
    NotSeparatedError,
    NotInAlgebraError,
    InfeasibleError,
    InternalCheckFailure,
    ResourceGuardError,
    FormatError,
    ExprSyntaxError,
)
from .scalars import Scalar, ZERO, ONE, to_scalar, parse_scalar, format_scalar
from .linalg import (
    Mat,
    SolveResult,
    zeros,
    identity,
    matrix_unit,
    mat,
    vector,
    is_zero,
    equal,
    kron,
    direct_sum,
    rref,
    rank,
    nullspace,
    solve_linear,
    matrix_inverse,
    independent_columns,
    span_rank,
    same_span,
    in_span,
    span_intersection,
)
from .points import MatTuple, left_action, right_action, commutator_map

__all__ = [
    "NcGermError", "DimensionMismatch", "SingularMatrixError", "NotInvertibleError",
    "PreconditionFailed", "BasepointMismatch", "NotSemisimpleError", "NotSeparatedError",
    "NotInAlgebraError", "InfeasibleError", "InternalCheckFailure", "ResourceGuardError",
    "FormatError", "ExprSyntaxError",
    "Scalar", "ZERO", "ONE", "to_scalar", "parse_scalar", "format_scalar",
    "Mat", "SolveResult", "zeros", "identity", "matrix_unit", "mat", "vector",
    "is_zero", "equal", "kron", "direct_sum", "rref", "rank", "nullspace",
    "solve_linear", "matrix_inverse", "independent_columns", "span_rank",
    "same_span", "in_span", "span_intersection",
    "MatTuple", "left_action", "right_action", "commutator_map",
]
