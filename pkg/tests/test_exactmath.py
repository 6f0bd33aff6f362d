# -*- coding: utf-8 -*-
"""
精确线性代数测试
================
标量解析与格式化、秩、求解、求逆、张成空间运算、矩阵点。

使用方法:
    pytest tests/test_exactmath.py
"""
import sys
from pathlib import Path

# 添加项目根目录到 sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from sympy import QQ

from exactmath import (
    DimensionMismatch,
    FormatError,
    MatTuple,
    SingularMatrixError,
    commutator_map,
    equal,
    format_scalar,
    identity,
    in_span,
    is_zero,
    kron,
    left_action,
    mat,
    matrix_inverse,
    nullspace,
    parse_scalar,
    rank,
    right_action,
    same_span,
    solve_linear,
    span_intersection,
    to_scalar,
    vector,
)


# ========== 标量 ==========

def test_scalar_round_trip_normalizes():
    """"6/4" 约分为 "3/2"，整数写成 "p/1" """
    assert format_scalar(parse_scalar("6/4")) == "3/2"
    assert format_scalar(to_scalar(3)) == "3/1"
    assert format_scalar(parse_scalar("-2/-4")) == "1/2"


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", ""])
def test_bad_scalar_is_format_error(text):
    with pytest.raises(FormatError):
        parse_scalar(text)


def test_bool_is_not_a_scalar():
    with pytest.raises(FormatError):
        to_scalar(True)


# ========== 消元 ==========

def test_rank_exact():
    """有理数上的秩，不受浮点误差影响"""
    m = mat([[1, 2, 3], [2, 4, 6], ["1/3", 0, 1]])
    assert rank(m) == 2
    assert rank(mat([[0, 0], [0, 0]])) == 0


def test_nullspace_normalized():
    """核向量的首个非零分量为 1"""
    m = mat([[1, 2, 3], [2, 4, 6]])
    kernel = nullspace(m)
    assert len(kernel) == 2
    for v in kernel:
        assert is_zero(m.dot(v))
        assert next(x for x in v if x != 0) == 1


def test_solve_linear_consistent():
    a = mat([[1, 1], [1, -1]])
    b = mat([[3], [1]])
    result = solve_linear(a, b)
    assert result.consistent
    assert equal(result.solution, mat([[2], [1]]))
    assert result.kernel_vectors == []


def test_solve_linear_inconsistent():
    """不相容的方程组没有解，但仍然返回系数矩阵的核"""
    a = mat([[1, 1], [2, 2]])
    b = mat([[1], [3]])
    result = solve_linear(a, b)
    assert not result.consistent
    assert result.solution is None
    assert len(result.kernel_vectors) == 1


def test_solve_linear_row_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_linear(mat([[1, 0]]), mat([[1], [2]]))


def test_matrix_inverse():
    m = mat([[2, 1], [1, 1]])
    inv = matrix_inverse(m)
    assert equal(m.dot(inv), identity(2))
    assert inv[0, 0] == QQ(1)


def test_matrix_inverse_singular():
    with pytest.raises(SingularMatrixError):
        matrix_inverse(mat([[1, 2], [2, 4]]))


def test_matrix_inverse_non_square():
    with pytest.raises(DimensionMismatch):
        matrix_inverse(mat([[1, 2, 3], [4, 5, 6]]))


# ========== 张成空间 ==========

def test_span_operations():
    e1, e2, e3 = vector([1, 0, 0]), vector([0, 1, 0]), vector([0, 0, 1])
    assert in_span([e1, e2], vector([3, "1/2", 0]))
    assert not in_span([e1, e2], e3)
    assert same_span([e1, e2], [e1 + e2, e1 - e2])
    meet = span_intersection([e1, e2], [e2, e3])
    assert len(meet) == 1
    assert same_span(meet, [e2])


# ========== 矩阵点 ==========

def test_mattuple_vec_convention():
    """基向量下标 i = j·s² + p·s + q"""
    x = MatTuple.of([[1, 2], [3, 4]], [[5, 6], [7, 8]])
    assert [int(v) for v in x.vec()] == [1, 2, 3, 4, 5, 6, 7, 8]
    assert MatTuple.from_vec(x.vec(), 2, 2) == x
    basis = MatTuple.basis(2, 2)
    assert basis[6][1][1, 0] == 1


def test_mattuple_shape_checked():
    with pytest.raises(DimensionMismatch):
        MatTuple((mat([[1, 0], [0, 1]]), mat([[1]])))


def test_amplify_is_block_diagonal():
    x = MatTuple.of([[0, 1], [0, 0]])
    amp = x.amplify(2)
    assert amp.size == 4
    assert equal(amp[0], kron(identity(2), x[0]))


def test_action_matrices(commutator_point):
    """left_action/right_action/commutator_map 与逐分量乘法一致"""
    y = commutator_point
    c = mat([[1, 2], [3, 4]])
    assert equal(left_action(c, 2).dot(y.vec()), y.left(c).vec())
    assert equal(right_action(c, 2).dot(y.vec()), y.right(c).vec())
    ad = commutator_map(y)
    assert equal(ad.dot(c.reshape(-1)), y.commutator(c).vec())
