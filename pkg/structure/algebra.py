# -*- coding: utf-8 -*-
"""
矩阵点的结构分析
================
由点 Y 生成的单位子代数 S(Y)、中心化子 C(Y)，以及半单、不可约、分离判定。

知识点：
--------
1. S(Y) 用张成扩张求得：从 I 出发反复右乘 Y_j，直到子空间不再变大（至多 s² 轮）
2. C(Y) 是线性方程组 [S, Y_j] = 0 的解空间
3. 特征 0 下，代数 A 半单 ⇔ 迹型 t(a, b) = tr(L_{ab}) 非退化（Dickson 判别法）
4. 半单点的不可约性用 Burnside 判别：dim S(Y) = s²
5. 半单点组分离 ⇔ dim C(⊕Yⁱ) = Σ dim C(Yⁱ)
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly, QQ, Symbol

from exactmath import (
    DimensionMismatch,
    InternalCheckFailure,
    Mat,
    MatTuple,
    NotSemisimpleError,
    ONE,
    ZERO,
    commutator_map,
    identity,
    independent_columns,
    nullspace,
    rank,
    solve_linear,
    zeros,
)
from exactmath.linalg import to_domain

# 配置日志
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AlgebraBasis:
    """
    M_s 的子代数，带乘法表

    Attributes:
        s: 矩阵阶数
        basis: 线性无关的 s×s 矩阵
        table: 形状 (k, k, k)，b_i·b_j = Σ_k table[i, j, k]·b_k
    """
    s: int
    basis: Tuple[Mat, ...]
    table: np.ndarray

    @classmethod
    def from_spanning(cls, s: int, mats: Sequence[Mat]) -> "AlgebraBasis":
        """
        从张成组中挑出基并计算乘法表

        Raises:
            InternalCheckFailure: 张成空间对乘法不封闭
        """
        vectors = [m.reshape(-1) for m in mats]
        basis = tuple(mats[i] for i in independent_columns(vectors))
        k = len(basis)
        table = zeros((k, k, k))
        frame = np.stack([b.reshape(-1) for b in basis], axis=1) if basis else zeros((s * s, 0))
        for i in range(k):
            for j in range(k):
                result = solve_linear(frame, basis[i].dot(basis[j]).reshape(-1))
                if not result.consistent:
                    raise InternalCheckFailure(f"子空间对乘法不封闭: b_{i}·b_{j} 不在张成空间中")
                table[i, j, :] = result.solution[:, 0]
        return cls(s, basis, table)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _frame(self) -> Mat:
        return np.stack([b.reshape(-1) for b in self.basis], axis=1)

    def coordinates(self, a: Mat) -> Optional[np.ndarray]:
        """a 在基下的坐标；a 不在子代数中时返回 None"""
        if a.shape != (self.s, self.s):
            raise DimensionMismatch(f"矩阵形状 {a.shape} 应为 {(self.s, self.s)}")
        result = solve_linear(self._frame(), a.reshape(-1))
        return result.solution[:, 0] if result.consistent else None

    def contains(self, a: Mat) -> bool:
        return self.coordinates(a) is not None

    def element(self, coords: Sequence) -> Mat:
        """Σ coords[i]·b_i"""
        out = zeros((self.s, self.s))
        for c, b in zip(coords, self.basis):
            if c != 0:
                out = out + b * c
        return out

    def as_point(self) -> MatTuple:
        """把基当作一个 dim 元的矩阵点"""
        return MatTuple(self.basis)

    def regular_traces(self) -> np.ndarray:
        """τ_m = tr(L_{b_m}) = Σ_k table[m, k, k]"""
        return np.array(
            [sum((self.table[m, k, k] for k in range(self.dim)), ZERO) for m in range(self.dim)],
            dtype=object,
        )

    def trace_form(self) -> Mat:
        """Gram 矩阵 t(b_i, b_j) = tr(L_{b_i b_j}) = Σ_m table[i, j, m]·τ_m"""
        return np.tensordot(self.table, self.regular_traces(), axes=([2], [0]))

    def is_semisimple(self) -> bool:
        return self.dim == 0 or rank(self.trace_form()) == self.dim


# ========== S(Y) 与 C(Y) ==========

def generated_algebra(y: MatTuple) -> AlgebraBasis:
    """
    Y 生成的单位子代数 S(Y)

    Args:
        y: 矩阵点

    Returns:
        AlgebraBasis，第一个基元为 I
    """
    s = y.size
    basis = [identity(s)]
    frontier = [identity(s)]
    rounds = 0
    while frontier:
        rounds += 1
        candidates = [m.dot(c) for m in frontier for c in y]
        pool = basis + candidates
        keep = independent_columns([m.reshape(-1) for m in pool])
        frontier = [pool[i] for i in keep if i >= len(basis)]
        basis = basis + frontier
    logger.debug(f"S(Y) 张成扩张 {rounds} 轮后稳定，维数 {len(basis)}")
    return AlgebraBasis.from_spanning(s, basis)


def centralizer(y: MatTuple) -> AlgebraBasis:
    """C(Y) = {S : [S, Y_j] = 0, ∀j}"""
    s = y.size
    kernel = nullspace(commutator_map(y))
    return AlgebraBasis.from_spanning(s, [v.reshape(s, s) for v in kernel])


# ========== 判定 ==========

def is_semisimple(y: MatTuple) -> bool:
    """S(Y) 的迹型是否非退化"""
    return generated_algebra(y).is_semisimple()


def _char_poly_is_primary(m: Mat) -> bool:
    """特征多项式是否为 ℚ 上单个不可约多项式的幂"""
    coeffs = to_domain(m).charpoly()
    _, factors = Poly(coeffs, Symbol("t"), domain=QQ).factor_list()
    return len(factors) == 1


def possibly_irreducible_over_extension(y: MatTuple) -> bool:
    """
    dim S(Y) < s² 但 Y 可能在 ℚ 上不可约（S(Y) 在 ℚ 上不分裂）

    判据：Y 半单，且 C(Y) 各基元以及基元之和的特征多项式都是单个不可约多项式的幂。
    这是必要条件的检查，结果只作提示用。
    """
    s = y.size
    alg = generated_algebra(y)
    if alg.dim == s * s or not alg.is_semisimple():
        return False
    cent = centralizer(y)
    if cent.dim == 1:
        return False
    probes = list(cent.basis) + [cent.element([1] * cent.dim)]
    return all(_char_poly_is_primary(m) for m in probes)


def is_irreducible(y: MatTuple) -> bool:
    """
    Burnside 判别：dim S(Y) = s²

    在 ℚ 上 S(Y) 不分裂时返回 False，并记录 "possibly irreducible over an extension" 警告。
    """
    s = y.size
    if generated_algebra(y).dim == s * s:
        return True
    if possibly_irreducible_over_extension(y):
        logger.warning(f"dim S(Y) < {s * s}，但 Y 在 ℚ 上可能不可约：possibly irreducible over an extension")
    return False


def are_separated(ys: Sequence[MatTuple]) -> bool:
    """
    半单点组是否两两分离

    Raises:
        NotSemisimpleError: 某个点不是半单点
        DimensionMismatch: 各点字母数不同
    """
    ys = list(ys)
    if not ys:
        return True
    g = ys[0].g
    for i, y in enumerate(ys):
        if y.g != g:
            raise DimensionMismatch(f"第 {i} 个点有 {y.g} 个分量，应为 {g}")
        if not is_semisimple(y):
            logger.error(f"第 {i} 个点不是半单点")
            raise NotSemisimpleError(f"第 {i} 个点不是半单点，无法判定分离性")
    if len(ys) == 1:
        return True
    joint = centralizer(direct_sum_points(ys)).dim
    separate = sum(centralizer(y).dim for y in ys)
    logger.debug(f"分离判定: dim C(⊕Y) = {joint}, Σ dim C(Yⁱ) = {separate}")
    return joint == separate


def direct_sum_points(ys: Sequence[MatTuple]) -> MatTuple:
    """Y¹ ⊕ … ⊕ Y^h"""
    total = ys[0]
    for y in ys[1:]:
        total = total.direct_sum(y)
    return total


def block_diagonal_subspace(sizes: Sequence[int], g: int) -> List[np.ndarray]:
    """(M_{s₁} ⊕ … ⊕ M_{s_h})^g 在 vec 坐标下的标准基"""
    s = sum(sizes)
    offsets = np.cumsum([0] + list(sizes))
    vectors = []
    for j in range(g):
        for block, size in enumerate(sizes):
            start = offsets[block]
            for p in range(start, start + size):
                for q in range(start, start + size):
                    v = zeros(g * s * s)
                    v[j * s * s + p * s + q] = ONE
                    vectors.append(v)
    return vectors
