# -*- coding: utf-8 -*-
"""
最小传播
========
把满足 L 阶截断 LAC 的芽 (f₀, …, f_L) 延拓到 M 阶，要求新增的 f_ℓ（ℓ > L）
在 (ker π)^ℓ 上为零。这样的延拓唯一存在。

记 g_{ℓ,m}(Z¹,…,Z^ℓ) = f_ℓ(σZ¹, …, σZ^m, Z^{m+1}, …, Z^ℓ)，Φ = φ∘π。
因为 Z − σZ = πZ = [Φ(Z), Y]，对第 m 个槽位用链式条件得到

    g_{ℓ,m} = g_{ℓ,m+1} + A − B
    A = g_{ℓ−1,m−1}(…, σZ^m·Φ(Z^{m+1}), …)      （m = 0 时为 Φ(Z¹)·g_{ℓ−1,0}(Z², …)）
    B = g_{ℓ−1,m}(…, Φ(Z^{m+1})·Z^{m+2}, …)      （m = ℓ−1 时为 g_{ℓ−1,ℓ−1}(…)·Φ(Z^ℓ)）

从 g_{ℓ,ℓ} = 0 出发 m 递减到 0，f_ℓ = g_{ℓ,0}。
ℓ ≤ L 的 g_{ℓ,m} 直接由种子芽右合成 σ 得到，所以 ℓ = L+1 时 g_{L,L} ≠ 0 这一边界项自然保留。

知识点：
--------
1. 双线性插入 σ(Z)Φ(Z′) 与 Φ(Z)Z′ 预先算成 (n, n, n) 张量，递推全部是张量缩并
2. 递推只依赖 σ 与 Φ，与坐标基的选取无关（basis_permutation 用来验证这一点）
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from exactmath import (
    BasepointMismatch,
    DimensionMismatch,
    MatTuple,
    NotSemisimpleError,
    ONE,
    PreconditionFailed,
    identity,
    matrix_unit,
    solve_linear,
    zeros,
)
from jet import Jet, MultiMap, check_tensor_size
from lac import chain_defect, check_lac_truncated
from structure import BimoduleOps, is_semisimple

# 配置日志
logger = logging.getLogger(__name__)


@dataclass
class PropagationConfig:
    """
    最小传播的输入

    Attributes:
        y: 半单基点
        ops: Y 处的双模算子（决定 π，从而决定结果）
        seed: 满足 L 阶截断 LAC 的种子芽
        extend_to: 目标阶数 M ≥ L
    """
    y: MatTuple
    ops: BimoduleOps
    seed: Jet
    extend_to: int

    def validate(self) -> None:
        """
        Raises:
            PreconditionFailed: 种子不满足 LAC、M < L、Y 不是半单点或算子与基点不匹配
        """
        if self.seed.basepoint != self.y or self.ops.y != self.y:
            raise BasepointMismatch("种子芽、双模算子与基点不一致")
        if self.extend_to < self.seed.order:
            raise PreconditionFailed(f"目标阶 {self.extend_to} 小于种子阶 {self.seed.order}")
        if not is_semisimple(self.y):
            raise NotSemisimpleError("最小传播需要半单基点")
        report = check_lac_truncated(self.y, self.seed, first_only=True)
        if not report.holds:
            logger.error(f"种子芽不满足 LAC: {report.violations[0].describe()}")
            raise PreconditionFailed(f"种子芽不满足 {self.seed.order} 阶截断 LAC: "
                                     f"{report.violations[0].describe()}")


def bilinear_tensors(ops: BimoduleOps) -> Tuple[np.ndarray, np.ndarray]:
    """
    双线性插入张量

    Returns:
        (BA, BB)，形状均为 (n, n, n)：
        BA[a, b] = vec(σ(e_a)·Φ(e_b))，BB[b, c] = vec(Φ(e_b)·e_c)
    """
    s, g = ops.y.size, ops.y.g
    n = ops.n
    sigma_images = ops.sigma.T.reshape(n, g, s, s)
    units = identity(n).reshape(n, g, s, s)
    phi = ops.phi_pi
    ba = np.matmul(sigma_images[:, None], phi[None, :, None])
    bb = np.matmul(phi[:, None, None], units[None])
    return ba.reshape(n, n, n), bb.reshape(n, n, n)


def _permute(tensor: np.ndarray, perm: Sequence[int], axes: Sequence[int]) -> np.ndarray:
    for axis in axes:
        tensor = np.take(tensor, perm, axis=axis)
    return tensor


def _sigma_chain(f: MultiMap, sigma: np.ndarray) -> List[MultiMap]:
    """[g_{ℓ,0}, …, g_{ℓ,ℓ}]：依次在前 m 个槽位右合成 σ"""
    chain = [f]
    for m in range(f.arity):
        chain.append(chain[-1].precompose(m, sigma))
    return chain


def _recursion(seed: Sequence[MultiMap], sigma: np.ndarray, phi_pi: np.ndarray,
               ba: np.ndarray, bb: np.ndarray, extend_to: int) -> List[MultiMap]:
    s, g = seed[0].s, seed[0].g
    maps = list(seed)
    previous = _sigma_chain(maps[-1], sigma)
    for ell in range(len(seed), extend_to + 1):
        check_tensor_size(g, s, ell)
        current: Dict[int, MultiMap] = {ell: MultiMap.zero(s, g, ell)}
        for m in range(ell - 1, -1, -1):
            if m >= 1:
                a = previous[m - 1].insert_bilinear(m - 1, ba)
            else:
                a = previous[0].left_multiply_by_map(phi_pi)
            if m <= ell - 2:
                b = previous[m].insert_bilinear(m, bb)
            else:
                b = previous[ell - 1].right_multiply_by_map(phi_pi)
            current[m] = current[m + 1] + a - b
        previous = [current[m] for m in range(ell + 1)]
        maps.append(current[0])
        logger.info(f"最小传播: 第 {ell} 阶完成")
    return maps


def propagate_minimal(cfg: PropagationConfig,
                      basis_permutation: Optional[Sequence[int]] = None) -> Jet:
    """
    最小传播

    Args:
        cfg: 传播配置
        basis_permutation: 可选的 M_s^g 坐标排列；在排列后的坐标中计算再换回

    Returns:
        M 阶芽，前 L+1 项与种子相同

    Raises:
        PreconditionFailed: 配置不满足前提
    """
    cfg.validate()
    ops = cfg.ops
    sigma, phi_pi = ops.sigma, ops.phi_pi
    ba, bb = bilinear_tensors(ops)
    seed = list(cfg.seed.maps)
    logger.info(f"最小传播: L={cfg.seed.order} → M={cfg.extend_to}, π 构造 {ops.describe()}")

    if basis_permutation is None:
        maps = _recursion(seed, sigma, phi_pi, ba, bb, cfg.extend_to)
        return Jet(cfg.y, tuple(maps))

    perm = list(basis_permutation)
    n = ops.n
    if sorted(perm) != list(range(n)):
        raise DimensionMismatch(f"basis_permutation 必须是 0..{n - 1} 的排列")
    inverse = list(np.argsort(perm))
    permuted_seed = [
        MultiMap(f.s, f.g, f.arity, _permute(f.tensor, perm, range(f.arity))) for f in seed
    ]
    maps = _recursion(
        permuted_seed,
        _permute(sigma, perm, (0, 1)),
        _permute(phi_pi, perm, (0,)),
        _permute(ba, perm, (0, 1, 2)),
        _permute(bb, perm, (0, 1, 2)),
        cfg.extend_to,
    )
    restored = [MultiMap(f.s, f.g, f.arity, _permute(f.tensor, inverse, range(f.arity))) for f in maps]
    return Jet(cfg.y, tuple(restored))


def minimality_defect(f: MultiMap, ops: BimoduleOps) -> MultiMap:
    """f∘σ^{⊗ℓ}；最小传播的高阶项应为零映射"""
    return _sigma_chain(f, ops.sigma)[-1]


# ========== 独立求解（唯一性见证） ==========

def _constraints(f: MultiMap, y: MatTuple, ops: BimoduleOps) -> np.ndarray:
    """f_ℓ 在链式条件左边与最小性条件中的取值（对 f 线性）"""
    s = y.size
    parts = []
    for slot in range(f.arity):
        for p in range(s):
            for q in range(s):
                parts.append(f.insert(slot, y.commutator(matrix_unit(s, p, q)).vec()).tensor.reshape(-1))
    parts.append(minimality_defect(f, ops).tensor.reshape(-1))
    return np.concatenate(parts)


def solve_propagation_level(y: MatTuple, ops: BimoduleOps, lower: MultiMap,
                            level: int) -> Tuple[Optional[MultiMap], int]:
    """
    把 f_level 当作未知张量，联立链式条件与最小性条件直接求解

    Args:
        lower: 已知的 f_{level−1}
        level: 待求阶数 ℓ ≥ 1

    Returns:
        (一个解或 None, 解空间核的维数)；唯一解对应核维数 0
    """
    s, g = y.size, y.g
    if lower.arity != level - 1:
        raise DimensionMismatch(f"低阶映射元数 {lower.arity} 应为 {level - 1}")
    check_tensor_size(g, s, level)
    n = g * s * s

    # 右端项：链式条件右边 A − B，最小性条件右边 0
    zero_top = MultiMap.zero(s, g, level)
    maps = [None] * (level - 1) + [lower, zero_top]
    rhs_parts = []
    for slot in range(level):
        for p in range(s):
            for q in range(s):
                defect = chain_defect(maps, y, level, slot, matrix_unit(s, p, q))
                rhs_parts.append((-defect).tensor.reshape(-1))
    rhs_parts.append(zeros(n ** level * s * s))
    rhs = np.concatenate(rhs_parts)

    unknowns = n ** level * s * s
    columns = []
    for k in range(unknowns):
        unit = zeros(unknowns)
        unit[k] = ONE
        columns.append(_constraints(MultiMap(s, g, level, unit.reshape((n,) * level + (s, s))), y, ops))
    result = solve_linear(np.stack(columns, axis=1), rhs)
    logger.debug(f"第 {level} 阶独立求解: {unknowns} 个未知数, 核维数 {len(result.kernel)}")
    if not result.consistent:
        return None, len(result.kernel)
    tensor = result.solution[:, 0].reshape((n,) * level + (s, s))
    return MultiMap(s, g, level, tensor), len(result.kernel)
