# -*- coding: utf-8 -*-
"""
消没理想
========
I_ℓ(Y) = {f ∈ 𝕜⟨x⟩ : Δ^k_Y f = 0, k ≤ ℓ}，即 f 在 (ℓ+1) 块双对角点上取值为 0。

本模块只处理次数 ≤ d 的切片：切片是词芽线性映射的核。
另外提供理想幂 I₀(Y)^k 的次数切片，用于比较 I_ℓ(Y) 与 I₀(Y)^{ℓ+1}。
"""

import logging
from itertools import product
from typing import List

import numpy as np

from exactmath import MatTuple, independent_columns, nullspace, zeros
from freealg import NcPoly, count_words, mul, words_up_to

from .system import WordJetTable, poly_from_coefficients

# 配置日志
logger = logging.getLogger(__name__)


def vanishing_ideal_basis(y: MatTuple, ell: int, d: int) -> List[NcPoly]:
    """
    I_ℓ(Y) 的次数 ≤ d 切片的一组基

    Args:
        y: 点
        ell: 阶数 ℓ
        d: 次数上限

    Returns:
        多项式列表，每个基元的最高次词是 deglex 下的一个自由列
    """
    words = words_up_to(y.g, d)
    table = WordJetTable([y], ell)
    table.ensure_degree(d)
    kernel = nullspace(table.matrix(words))
    logger.debug(f"I_{ell}(Y) 次数 ≤ {d} 切片维数 {len(kernel)}（共 {len(words)} 个词）")
    return [poly_from_coefficients(y.g, words, v) for v in kernel]


def quotient_dimension(y: MatTuple, ell: int, d: int) -> int:
    """dim 𝕜⟨x⟩_{≤d} / (I_ℓ(Y) 的切片)"""
    return count_words(y.g, d) - len(vanishing_ideal_basis(y, ell, d))


def _coordinates(p: NcPoly, index: dict, size: int) -> np.ndarray:
    v = zeros(size)
    for w, c in p.items():
        v[index[w]] = c
    return v


def ideal_power_slice(y: MatTuple, power: int, d: int, slack: int = 2) -> List[NcPoly]:
    """
    I₀(Y)^power 的次数 ≤ d 切片（近似到 slack）

    取 I₀(Y) 在次数 ≤ d+slack 内的基，作所有总次数 ≤ d+slack 的 power 重乘积，
    再与次数 ≤ d 的多项式空间求交。乘积总能落在真实切片内，slack 越大越接近真实切片。

    Returns:
        次数 ≤ d 的多项式基
    """
    top = d + slack
    words = words_up_to(y.g, top)
    index = {w: i for i, w in enumerate(words)}
    generators = vanishing_ideal_basis(y, 0, top)

    layer = generators
    for _ in range(power - 1):
        products = [
            mul(a, b) for a, b in product(layer, generators)
            if a.degree + b.degree <= top
        ]
        vectors = [_coordinates(p, index, len(words)) for p in products]
        layer = [products[i] for i in independent_columns(vectors)]

    if not layer:
        return []
    frame = np.stack([_coordinates(p, index, len(words)) for p in layer], axis=1)
    high_rows = [i for i, w in enumerate(words) if len(w) > d]
    low_words = [w for w in words if len(w) <= d]
    if high_rows:
        combos = nullspace(frame[high_rows, :])
        candidates = [frame.dot(x)[:len(low_words)] for x in combos]
    else:
        candidates = [frame[:, k] for k in range(frame.shape[1])]
    keep = independent_columns(candidates)
    logger.debug(f"I₀(Y)^{power} 次数 ≤ {d} 切片维数 {len(keep)}（slack={slack}）")
    return [poly_from_coefficients(y.g, low_words, candidates[i]) for i in keep]
