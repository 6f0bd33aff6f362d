# -*- coding: utf-8 -*-
"""
代数嵌入
========
半单点 Y 处，把 S(Y) 中的元素 a 看作 0 阶芽 (a)，做最小传播得到芽 f^a。
固定 π 时 a ↦ f^a 是单位代数同态，是"在 Y 处求值"的左逆。

典型用法：Y = (E₁₂, E₂₁) 时 S(Y) = M₂，取 a = E₁₂（a² = 0），
得到 f ≠ 0 而 f·f = 0 的幂零芽。
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from exactmath import (
    InternalCheckFailure,
    Mat,
    MatTuple,
    NotInAlgebraError,
    NotSemisimpleError,
    is_zero,
    solve_linear,
)
from jet import Jet, constant_jet, jet_mul, zero_jet
from structure import BimoduleOps, bimodule_ops, generated_algebra

from .minimal import PropagationConfig, propagate_minimal

# 配置日志
logger = logging.getLogger(__name__)


def one_term_propagation(y: MatTuple, a: Mat, order: int, ops: BimoduleOps) -> Jet:
    """常数芽 (a) 的最小传播"""
    return propagate_minimal(PropagationConfig(y, ops, constant_jet(y, a, 0), order))


def _combination(target: Mat, elements: Sequence[Mat]) -> Optional[np.ndarray]:
    """target = Σ c_k·elements[k] 的一组系数；不在张成空间中时返回 None"""
    frame = np.stack([e.reshape(-1) for e in elements], axis=1)
    result = solve_linear(frame, target.reshape(-1))
    return result.solution[:, 0] if result.consistent else None


def verify_multiplicative(y: MatTuple, elements: Sequence[Mat], jets: Sequence[Jet]) -> int:
    """
    对乘积落在张成空间中的每一对 (a_i, a_j)，检查 f^{a_i}·f^{a_j} = Σ c_k f^{a_k}

    Returns:
        检查过的对数

    Raises:
        InternalCheckFailure: 某一对不满足乘性
    """
    checked = 0
    order = jets[0].order
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            product = a.dot(b)
            if is_zero(product):
                expected = zero_jet(y, order)
            else:
                coeffs = _combination(product, elements)
                if coeffs is None:
                    continue
                expected = zero_jet(y, order)
                for c, jet in zip(coeffs, jets):
                    if c != 0:
                        expected = expected + jet.scale(c)
            if jet_mul(jets[i], jets[j]) != expected:
                logger.error(f"嵌入不满足乘性: 第 {i}, {j} 对")
                raise InternalCheckFailure(f"f^(a{i})·f^(a{j}) 与 f^(a{i}·a{j}) 不相等")
            checked += 1
    return checked


def embed_algebra(y: MatTuple, elements: Sequence[Mat], order: int,
                  ops: Optional[BimoduleOps] = None) -> List[Jet]:
    """
    S(Y) 元素的单项传播

    Args:
        y: 半单点
        elements: S(Y) 中的矩阵
        order: 目标阶数 M
        ops: 可选的双模算子，默认由 bimodule_ops(y) 构造

    Returns:
        与 elements 一一对应的 M 阶芽

    Raises:
        NotSemisimpleError: Y 不是半单点
        NotInAlgebraError: 某个元素不在 S(Y) 中
        InternalCheckFailure: 乘性校验失败
    """
    algebra = generated_algebra(y)
    if not algebra.is_semisimple():
        logger.error("embed_algebra 需要半单点")
        raise NotSemisimpleError("Y 不是半单点")
    for k, a in enumerate(elements):
        if not algebra.contains(a):
            logger.error(f"第 {k} 个元素不在 S(Y) 中")
            raise NotInAlgebraError(f"第 {k} 个元素不在 Y 生成的代数 S(Y) 中")

    ops = ops or bimodule_ops(y)
    jets = [one_term_propagation(y, a, order, ops) for a in elements]
    if jets:
        checked = verify_multiplicative(y, elements, jets)
        logger.info(f"代数嵌入完成: {len(jets)} 个元素, 乘性检查 {checked} 对")
    return jets
