# -*- coding: utf-8 -*-
"""
非单射例子
==========
Y = Y′ ⊕ Y″（Y′、Y″ 分离的半单点）处构造芽 f：f₁ ≠ 0，
但 f 的每一阶在块对角方向 (M_{s′} ⊕ M_{s″})^g 上都为零。

做法：
1. 在 1 元映射空间中求解 f₁，要求消去 [M_s, Y] 与块对角子空间 P，并满足 C(Y)-模条件
2. 取 π 保持 P，对种子 (0, f₁) 做最小传播

维数计数保证第 1 步的解空间非零：dim([M_s,Y] + P) ≤ s² + g(s′² + s″²) < g·s²（g ≥ 2 时）。
"""

import logging
from typing import List

import numpy as np

from exactmath import (
    InfeasibleError,
    MatTuple,
    NotSeparatedError,
    ONE,
    commutator_map,
    nullspace,
    zeros,
)
from jet import Jet, MultiMap
from lac import module_defects
from structure import (
    are_separated,
    bimodule_ops,
    block_diagonal_subspace,
    centralizer,
    direct_sum_points,
)

from .minimal import PropagationConfig, propagate_minimal

# 配置日志
logger = logging.getLogger(__name__)


def block_diagonal_indices(sizes: List[int], g: int) -> List[int]:
    """块对角方向对应的 vec 坐标下标"""
    s = sum(sizes)
    offsets = np.cumsum([0] + list(sizes))
    return [
        j * s * s + p * s + q
        for j in range(g)
        for block, size in enumerate(sizes)
        for p in range(offsets[block], offsets[block] + size)
        for q in range(offsets[block], offsets[block] + size)
    ]


def _first_order_constraints(f: MultiMap, y: MatTuple, killed: List[np.ndarray], cent_basis) -> np.ndarray:
    parts = [f.insert(0, v).tensor.reshape(-1) for v in killed]
    for c in cent_basis:
        parts.extend(defect.tensor.reshape(-1) for _, _, defect in module_defects(f, c))
    return np.concatenate(parts)


def admissible_first_orders(y: MatTuple, killed: List[np.ndarray]) -> List[MultiMap]:
    """
    满足 C(Y)-模条件且在 killed 张成的子空间上为零的 1 元映射空间的一组基

    killed 应包含 [M_s, Y] 的张成向量，这样得到的 f₁ 与 f₀ = 0 一起满足 1 阶截断 LAC。
    """
    s, g = y.size, y.g
    n = g * s * s
    unknowns = n * s * s
    cent_basis = centralizer(y).basis
    columns = []
    for k in range(unknowns):
        unit = zeros(unknowns)
        unit[k] = ONE
        columns.append(_first_order_constraints(MultiMap(s, g, 1, unit.reshape(n, s, s)), y, killed, cent_basis))
    kernel = nullspace(np.stack(columns, axis=1))
    logger.debug(f"1 元映射约束: {unknowns} 个未知数, 解空间维数 {len(kernel)}")
    return [MultiMap(s, g, 1, v.reshape(n, s, s)) for v in kernel]


def separating_example(yp: MatTuple, ypp: MatTuple, extend_to: int = 3) -> Jet:
    """
    构造在块对角方向上全部为零、但一阶项非零的芽

    Args:
        yp: Y′
        ypp: Y″
        extend_to: 传播到的阶数 M ≥ 1

    Returns:
        Y′ ⊕ Y″ 处的 M 阶芽

    Raises:
        NotSeparatedError: Y′、Y″ 不是分离的半单点
        InfeasibleError: 一阶约束的解空间为零
    """
    if not are_separated([yp, ypp]):
        logger.error("separating_example 需要分离的点")
        raise NotSeparatedError("Y′ 与 Y″ 不是分离的半单点")
    y = direct_sum_points([yp, ypp])
    s, g = y.size, y.g
    sizes = [yp.size, ypp.size]
    block = block_diagonal_subspace(sizes, g)
    ad = commutator_map(y)
    killed = [ad[:, k] for k in range(s * s)] + block

    candidates = admissible_first_orders(y, killed)
    if not candidates:
        logger.error("一阶约束只有零解")
        raise InfeasibleError("消去 [M_s,Y] 与块对角方向的容许一阶映射只有零映射")
    f1 = candidates[0]

    ops = bimodule_ops(y, preserve=block)
    seed = Jet(y, (MultiMap.zero(s, g, 0), f1))
    jet = propagate_minimal(PropagationConfig(y, ops, seed, max(extend_to, 1)))
    logger.info(f"非单射例子: s={s}, 一阶候选 {len(candidates)} 维, 传播到 {jet.order} 阶")
    return jet


def vanishes_on_block_diagonal(jet: Jet, sizes: List[int]) -> bool:
    """芽的每一阶限制到块对角方向是否为零"""
    index = block_diagonal_indices(sizes, jet.g)
    for f in jet.maps:
        restricted = f.tensor[np.ix_(*([index] * f.arity))] if f.arity else f.tensor
        if any(x != 0 for x in restricted.reshape(-1)):
            return False
    return True
