# -*- coding: utf-8 -*-
"""
C(Y)-双模算子
=============
在半单点 Y 处构造：
- π：M_s^g → [M_s, Y] 的 C(Y)-双模投影
- σ = id − π
- φ：[M_s, Y] → M_s 的双模右逆，满足 [φ(W), Y] = W

构造方法是可分幂等元平均。取 C(Y) 的基 {b_i}，关于正则迹型的对偶基 {bⁱ}，
Casimir 元 c = Σ b_i bⁱ（中心、可逆），任取一个线性投影 p：

    π(Z) = Σ_{i,j} b_i · p(c⁻¹bⁱ · Z · b_j) · c⁻¹bʲ

φ 用同样的方式由 S ↦ [S, Y] 的任一线性右逆 ψ 平均得到。

知识点：
--------
1. Σ b_i ⊗ bⁱ 满足 Σ x b_i ⊗ bⁱ = Σ b_i ⊗ bⁱ x，平均后的算子自动与 C(Y) 的左右乘交换
2. [M_s, Y] 是 C(Y)-双模，且 Σ b_i c⁻¹ bⁱ = I，所以 π 在 [M_s, Y] 上是恒等
3. 给定 preserve 子空间（C(Y)-双模）时，p 选成把它映入自身，平均后 π 仍保持它
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from exactmath import (
    InternalCheckFailure,
    Mat,
    MatTuple,
    NotSemisimpleError,
    PreconditionFailed,
    ONE,
    SingularMatrixError,
    commutator_map,
    equal,
    identity,
    in_span,
    independent_columns,
    left_action,
    matrix_inverse,
    rank,
    right_action,
    solve_linear,
    span_intersection,
    zeros,
)

from .algebra import AlgebraBasis, centralizer, generated_algebra

# 配置日志
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BimoduleOps:
    """
    半单点 Y 处的双模算子

    Attributes:
        y: 基点
        pi: g·s² 阶矩阵，双模投影 π
        sigma: id − π
        phi: s²×g·s² 矩阵，双模右逆 φ（在 [M_s, Y] 上有意义）
        phi_pi: 形状 (g·s², s, s)，phi_pi[a] = φ(π(e_a))
        cent: C(Y)
        image_rank: dim [M_s, Y]
        preserved: 构造时要求 π 保持的子空间（无则为 None）
        basis_order: 构造 C(Y) 基与 ad 列时使用的排列（无则为 None）
    """
    y: MatTuple
    pi: Mat
    sigma: Mat
    phi: Mat
    phi_pi: np.ndarray
    cent: AlgebraBasis
    image_rank: int
    preserved: Optional[List[np.ndarray]] = None
    basis_order: Optional[List[int]] = None

    @property
    def n(self) -> int:
        return self.y.g * self.y.size ** 2

    def apply_pi(self, z: MatTuple) -> MatTuple:
        return MatTuple.from_vec(self.pi.dot(z.vec()), self.y.g, self.y.size)

    def apply_sigma(self, z: MatTuple) -> MatTuple:
        return MatTuple.from_vec(self.sigma.dot(z.vec()), self.y.g, self.y.size)

    def apply_phi(self, w: MatTuple) -> Mat:
        s = self.y.size
        return self.phi.dot(w.vec()).reshape(s, s)

    def kernel_basis(self) -> List[np.ndarray]:
        """ker π = image σ 的一组基"""
        columns = [self.sigma[:, a] for a in range(self.n)]
        return [columns[i] for i in independent_columns(columns)]

    def describe(self) -> dict:
        """记录所用 π 的构造参数，便于复现"""
        return {
            "construction": "separability-idempotent average",
            "image_rank": self.image_rank,
            "centralizer_dim": self.cent.dim,
            "preserves_subspace": self.preserved is not None,
            "basis_order": self.basis_order,
        }


def _dual_basis(cent: AlgebraBasis) -> List[Mat]:
    """正则迹型下的对偶基 bⁱ，t(b_i, bʲ) = δ_ij"""
    gram = cent.trace_form()
    try:
        dual_coords = matrix_inverse(gram)
    except SingularMatrixError as e:
        logger.error(f"C(Y) 的迹型退化: {e}")
        raise InternalCheckFailure("C(Y) 的迹型退化，无法构造 Casimir 元") from e
    return [cent.element(dual_coords[i, :]) for i in range(cent.dim)]


def _projection_basis(w_vectors: List[np.ndarray], n: int,
                      preserve: Optional[Sequence[np.ndarray]]) -> np.ndarray:
    """
    ℚⁿ 的一组基：先 W 的基（preserve 时 W∩P 在前），再 P 的补，最后贪心补标准向量

    Returns:
        n×n 矩阵，前 dim W 列张成 W
    """
    if preserve:
        inside = span_intersection(w_vectors, list(preserve))
        pool = inside + w_vectors
        w_basis = [pool[i] for i in independent_columns(pool)]
        head = w_basis + list(preserve)
        head = [head[i] for i in independent_columns(head)]
    else:
        w_basis = list(w_vectors)
        head = list(w_basis)
    for i in range(n):
        e = zeros(n)
        e[i] = ONE
        head.append(e)
    chosen = [head[i] for i in independent_columns(head)]
    return np.stack(chosen, axis=1)


def bimodule_ops(y: MatTuple, preserve: Optional[Sequence[np.ndarray]] = None,
                 basis_order: Optional[Sequence[int]] = None) -> BimoduleOps:
    """
    构造并校验 π、σ、φ

    Args:
        y: 半单点
        preserve: 可选的 C(Y)-双模子空间（vec 坐标下的向量），π 须把它映入自身
        basis_order: 可选的 {0, …, s²−1} 排列，用于重排 ad 的列与 C(Y) 的基；
            π 与排列无关，φ 可能不同

    Raises:
        NotSemisimpleError: Y 不是半单点
        InternalCheckFailure: 构造后的校验失败
        PreconditionFailed: basis_order 不是排列
    """
    s, g = y.size, y.g
    n = g * s * s
    if not generated_algebra(y).is_semisimple():
        logger.error("bimodule_ops 需要半单点")
        raise NotSemisimpleError("Y 不是半单点，C(Y)-双模投影不存在")

    ad = commutator_map(y)
    order = list(basis_order) if basis_order is not None else list(range(s * s))
    if sorted(order) != list(range(s * s)):
        raise PreconditionFailed(f"basis_order 必须是 0..{s * s - 1} 的排列")
    ad_cols = [ad[:, k] for k in order]
    pivots = independent_columns(ad_cols)
    w_vectors = [ad_cols[k] for k in pivots]
    r = len(w_vectors)

    frame = _projection_basis(w_vectors, n, preserve)
    frame_inv = matrix_inverse(frame)
    coords_w = frame_inv[:r, :]
    p_matrix = frame[:, :r].dot(coords_w) if r else zeros((n, n))

    # ψ：W 的基向量 ↦ 原像，补空间 ↦ 0
    if r:
        ad_permuted = np.stack(ad_cols, axis=1)
        preimages = []
        for k in range(r):
            x = solve_linear(ad_permuted, frame[:, k]).solution[:, 0]
            v = zeros(s * s)
            v[order] = x
            preimages.append(v)
        psi = np.stack(preimages, axis=1).dot(coords_w)
    else:
        psi = zeros((s * s, n))

    cent = centralizer(y)
    if basis_order is not None:
        cent_order = [i for i in order if i < cent.dim]
        cent = AlgebraBasis.from_spanning(s, [cent.basis[i] for i in cent_order])
    dual = _dual_basis(cent)
    casimir = zeros((s, s))
    for b, bd in zip(cent.basis, dual):
        casimir = casimir + b.dot(bd)
    casimir_inv = matrix_inverse(casimir)
    scaled_dual = [casimir_inv.dot(bd) for bd in dual]

    inner_pi = zeros((n, n))
    inner_phi = zeros((s * s, n))
    for b, bd in zip(cent.basis, scaled_dual):
        inner_pi = inner_pi + left_action(b, g).dot(p_matrix).dot(left_action(bd, g))
        inner_phi = inner_phi + left_action(b, 1).dot(psi).dot(left_action(bd, g))
    pi = zeros((n, n))
    phi = zeros((s * s, n))
    for b, bd in zip(cent.basis, scaled_dual):
        pi = pi + right_action(bd, g).dot(inner_pi).dot(right_action(b, g))
        phi = phi + right_action(bd, 1).dot(inner_phi).dot(right_action(b, g))

    sigma = identity(n) - pi
    phi_pi = phi.dot(pi).T.reshape(n, s, s)
    ops = BimoduleOps(
        y=y, pi=pi, sigma=sigma, phi=phi, phi_pi=phi_pi, cent=cent, image_rank=r,
        preserved=list(preserve) if preserve else None,
        basis_order=list(basis_order) if basis_order is not None else None,
    )
    verify_bimodule_ops(ops, w_vectors, ad)
    logger.debug(f"双模算子构造完成: dim [M_s,Y] = {r}, dim C(Y) = {cent.dim}")
    return ops


def verify_bimodule_ops(ops: BimoduleOps, w_vectors: List[np.ndarray], ad: Mat) -> None:
    """
    校验 π² = π、image π = [M_s, Y]、C(Y) 等变性、φ 是双模右逆

    Raises:
        InternalCheckFailure: 任一条件不成立
    """
    g = ops.y.g
    pi, phi = ops.pi, ops.phi

    def fail(message: str) -> None:
        logger.error(f"双模算子校验失败: {message}")
        raise InternalCheckFailure(message)

    if not equal(pi.dot(pi), pi):
        fail("π² ≠ π")
    if rank(pi) != ops.image_rank:
        fail("rank π ≠ dim [M_s, Y]")
    for w in w_vectors:
        if not equal(pi.dot(w), w):
            fail("π 在 [M_s, Y] 上不是恒等")
        if not equal(ad.dot(phi.dot(w)), w):
            fail("[φ(W), Y] ≠ W")
    for c in ops.cent.basis:
        lc, rc = left_action(c, g), right_action(c, g)
        if not (equal(pi.dot(lc), lc.dot(pi)) and equal(pi.dot(rc), rc.dot(pi))):
            fail("π 与 C(Y) 的左右乘不交换")
        if not (equal(phi.dot(lc), left_action(c, 1).dot(phi))
                and equal(phi.dot(rc), right_action(c, 1).dot(phi))):
            fail("φ 不是 C(Y)-双模映射")
    if ops.preserved:
        for v in ops.preserved:
            if not in_span(ops.preserved, pi.dot(v)):
                fail("π 没有保持指定子空间")
