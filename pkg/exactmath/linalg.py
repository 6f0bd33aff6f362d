# -*- coding: utf-8 -*-
"""
精确线性代数
============
在有理数域上做秩、核、线性方程组、求逆，以及 Kronecker 积、直和等构造。

矩阵在本项目中统一表示为 numpy 的 dtype=object 二维数组，元素为 QQ 有理数；
消元交给 sympy 的 DomainMatrix（QQ 域上的 RREF）。

知识点：
--------
1. RREF 唯一，因此核基与特解不依赖主元选取顺序，结果可复现
2. 核向量取自由列构造，并把第一个非零分量规范化为 1
3. 方程组 a·x = b 的特解取自由变量为 0 的那一个
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .errors import DimensionMismatch, SingularMatrixError
from .scalars import ONE, ZERO, to_scalar

# 配置日志
logger = logging.getLogger(__name__)

# 矩阵类型：dtype=object 的二维 numpy 数组
Mat = np.ndarray


# ========== 构造 ==========

def zeros(shape) -> np.ndarray:
    """全零对象数组（任意形状）"""
    out = np.empty(shape, dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int) -> Mat:
    """n 阶单位矩阵"""
    out = zeros((n, n))
    for i in range(n):
        out[i, i] = ONE
    return out


def matrix_unit(n: int, p: int, q: int) -> Mat:
    """矩阵单位 E_pq（下标从 0 开始）"""
    out = zeros((n, n))
    out[p, q] = ONE
    return out


def mat(rows: Sequence[Sequence]) -> Mat:
    """
    由嵌套列表构造矩阵，元素可以是 int、"p/q" 字符串或有理数

    Raises:
        DimensionMismatch: 各行长度不一致
    """
    rows = [list(r) for r in rows]
    n_cols = len(rows[0]) if rows else 0
    out = np.empty((len(rows), n_cols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != n_cols:
            raise DimensionMismatch(f"第 {i} 行长度为 {len(row)}，应为 {n_cols}")
        for j, x in enumerate(row):
            out[i, j] = to_scalar(x)
    return out


def vector(entries: Iterable) -> np.ndarray:
    """一维有理数向量"""
    items = [to_scalar(x) for x in entries]
    out = np.empty(len(items), dtype=object)
    for i, x in enumerate(items):
        out[i] = x
    return out


def is_zero(a: np.ndarray) -> bool:
    """数组所有元素是否为 0"""
    return all(x == 0 for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    """形状相同且逐元素相等"""
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker 积 a ⊗ b"""
    (r1, c1), (r2, c2) = a.shape, b.shape
    outer = np.multiply.outer(a, b)
    return outer.transpose(0, 2, 1, 3).reshape(r1 * r2, c1 * c2)


def direct_sum(*mats: Mat) -> Mat:
    """块对角直和 m₁ ⊕ m₂ ⊕ …"""
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    out = zeros((rows, cols))
    r = c = 0
    for m in mats:
        out[r:r + m.shape[0], c:c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return out


# ========== 与 DomainMatrix 互转 ==========

def to_domain(m: Mat) -> DomainMatrix:
    """numpy 对象矩阵 → QQ 上的 DomainMatrix"""
    rows, cols = m.shape
    data = [[QQ.convert(x) for x in row] for row in m.tolist()]
    return DomainMatrix(data, (rows, cols), QQ)


def from_domain(dm: DomainMatrix) -> Mat:
    """DomainMatrix → numpy 对象矩阵"""
    out = np.empty(dm.shape, dtype=object)
    for i, row in enumerate(dm.to_list()):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


# ========== 消元 ==========

def rref(m: Mat) -> Tuple[Mat, Tuple[int, ...]]:
    """
    简化行阶梯形

    Returns:
        (RREF 矩阵, 主元列下标)
    """
    if 0 in m.shape:
        return zeros(m.shape), ()
    reduced, pivots = to_domain(m).rref()
    return from_domain(reduced), tuple(pivots)


def rank(m: Mat) -> int:
    """精确秩"""
    if 0 in m.shape:
        return 0
    return to_domain(m).rank()


def _kernel_from_rref(reduced: Mat, pivots: Sequence[int], n_cols: int) -> List[np.ndarray]:
    """由 RREF 构造核基：每个自由列一个向量，首个非零分量规范为 1"""
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = zeros(n_cols)
        v[free] = ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, free]
        lead = next(x for x in v if x != 0)
        basis.append(np.array([x / lead for x in v], dtype=object))
    return basis


def nullspace(m: Mat) -> List[np.ndarray]:
    """核 {x : m·x = 0} 的基（一维向量列表）"""
    reduced, pivots = rref(m)
    return _kernel_from_rref(reduced, pivots, m.shape[1])


@dataclass
class SolveResult:
    """
    线性方程组 a·x = b 的求解结果

    Attributes:
        solution: 一个特解（自由变量取 0）；方程组不相容时为 None
        kernel: a 的零空间基，每个元素是 cols×1 矩阵
    """
    solution: Optional[Mat]
    kernel: List[Mat] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.solution is not None

    @property
    def kernel_vectors(self) -> List[np.ndarray]:
        return [k[:, 0] for k in self.kernel]


def solve_linear(a: Mat, b: Mat) -> SolveResult:
    """
    求解 a·x = b，返回特解与零空间基

    Args:
        a: r×c 系数矩阵
        b: r×k 右端项（一维向量按 r×1 处理）

    Raises:
        DimensionMismatch: a 与 b 行数不同
    """
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"系数矩阵 {a.shape[0]} 行，右端项 {b.shape[0]} 行")
    n_cols, n_rhs = a.shape[1], b.shape[1]

    augmented = np.concatenate([a, b], axis=1)
    reduced, pivots = rref(augmented)
    left_pivots = [p for p in pivots if p < n_cols]
    kernel = [
        v.reshape(-1, 1)
        for v in _kernel_from_rref(reduced[:, :n_cols], left_pivots, n_cols)
    ]
    if len(left_pivots) < len(pivots):
        logger.debug(f"线性方程组不相容: {a.shape[0]}×{n_cols}")
        return SolveResult(solution=None, kernel=kernel)

    x = zeros((n_cols, n_rhs))
    for i, p in enumerate(pivots):
        x[p, :] = reduced[i, n_cols:]
    return SolveResult(solution=x, kernel=kernel)


def matrix_inverse(m: Mat) -> Mat:
    """
    精确逆矩阵

    Raises:
        DimensionMismatch: 非方阵
        SingularMatrixError: 矩阵奇异
    """
    rows, cols = m.shape
    if rows != cols:
        raise DimensionMismatch(f"只有方阵可以求逆，得到 {rows}×{cols}")
    if rows == 0:
        return zeros((0, 0))
    try:
        return from_domain(to_domain(m).inv())
    except DMNonInvertibleMatrixError:
        raise SingularMatrixError(f"{rows}×{rows} 矩阵奇异") from None


# ========== 子空间 ==========

def independent_columns(vectors: Sequence[np.ndarray]) -> List[int]:
    """按顺序选出线性无关的向量下标（贪心，先出现者优先）"""
    if not vectors:
        return []
    _, pivots = rref(np.stack(vectors, axis=1))
    return list(pivots)


def span_rank(vectors: Sequence[np.ndarray]) -> int:
    """向量组张成空间的维数"""
    if not vectors:
        return 0
    return rank(np.stack(vectors, axis=1))


def same_span(first: Sequence[np.ndarray], second: Sequence[np.ndarray]) -> bool:
    """两组向量张成相同子空间"""
    r1, r2 = span_rank(first), span_rank(second)
    return r1 == r2 == span_rank(list(first) + list(second))


def in_span(vectors: Sequence[np.ndarray], v: np.ndarray) -> bool:
    """v 是否属于 span(vectors)"""
    return span_rank(list(vectors) + [v]) == span_rank(vectors)


def span_intersection(first: Sequence[np.ndarray], second: Sequence[np.ndarray]) -> List[np.ndarray]:
    """span(first) ∩ span(second) 的一组基"""
    if not first or not second:
        return []
    a = np.stack(first, axis=1)
    b = np.stack(second, axis=1)
    k = a.shape[1]
    candidates = [a.dot(x[:k]) for x in nullspace(np.concatenate([a, -b], axis=1))]
    candidates = [v for v in candidates if not is_zero(v)]
    return [candidates[i] for i in independent_columns(candidates)]
