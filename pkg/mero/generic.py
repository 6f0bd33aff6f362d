# -*- coding: utf-8 -*-
"""
生成矩阵求值
============
n×n 生成矩阵 Ξ_k = (ξ^k_{ij})，ξ 为两两交换的未定元。
p(Ξ₁, …, Ξ_g) = 0 当且仅当 p 在所有 n 阶点上为零，是 n 阶恒等式的精确判定。

未定元放在 sympy 的稀疏多项式环 QQ[ξ] 中，环元素支持 +、*，
因此可以直接放进 numpy 对象数组做矩阵乘法。
"""

import logging
import sys
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.rings import PolyRing, ring

sys.path.insert(0, str(Path(__file__).parent.parent))
from config import settings
from exactmath import ResourceGuardError
from freealg import PolyLike, Word

from .evaluator import expand_to_poly
from .expr import MeroExpr

# 配置日志
logger = logging.getLogger(__name__)


@lru_cache(maxsize=16)
def generic_matrices(g: int, n: int) -> Tuple[PolyRing, Tuple[np.ndarray, ...]]:
    """
    多项式环 QQ[ξ^k_{ij}] 与 g 个 n×n 生成矩阵

    变量名 xi{k}_{i}_{j}，下标从 1 开始。
    """
    names = [f"xi{k}_{i}_{j}" for k in range(1, g + 1) for i in range(1, n + 1) for j in range(1, n + 1)]
    created = ring(",".join(names), QQ)
    poly_ring, gens = created[0], created[1:]
    mats = []
    for k in range(g):
        m = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                m[i, j] = gens[k * n * n + i * n + j]
        mats.append(m)
    return poly_ring, tuple(mats)


def _monomials(m: np.ndarray) -> int:
    return sum(len(entry) for entry in m.flat)


def generic_evaluate(p: PolyLike, n: int) -> np.ndarray:
    """
    p(Ξ)：n×n 的 QQ[ξ] 元素矩阵

    Raises:
        ResourceGuardError: 中间结果单项式总数超过 settings.ncgerm_monomial_cap
    """
    poly_ring, mats = generic_matrices(p.g, n)
    cap = settings.ncgerm_monomial_cap
    unit = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            unit[i, j] = poly_ring.one if i == j else poly_ring.zero
    cache: Dict[Word, np.ndarray] = {(): unit}

    def word_value(word: Word) -> np.ndarray:
        if word not in cache:
            value = np.matmul(word_value(word[:-1]), mats[word[-1] - 1])
            size = _monomials(value)
            if size > cap:
                raise ResourceGuardError(
                    f"生成矩阵求值的单项式数 {size} 超过上限 {cap}（n={n}, 词长 {len(word)}）"
                )
            cache[word] = value
        return cache[word]

    result = unit * poly_ring.zero
    for word, coeff in p.items():
        result = result + word_value(word) * poly_ring.ground_new(coeff)
    logger.debug(f"生成矩阵求值: n={n}, {len(p)} 项, 结果 {_monomials(result)} 个单项式")
    return result


def is_generic_zero(p: PolyLike, n: int) -> bool:
    """p 是否是 n 阶多项式恒等式"""
    return all(not entry for entry in generic_evaluate(p, n).flat)


def generic_evaluate_expr(m: MeroExpr, n: int) -> np.ndarray:
    """不含求逆的表达式在生成矩阵处的值"""
    return generic_evaluate(expand_to_poly(m), n)


def describe_generic(value: np.ndarray) -> List[List[str]]:
    """矩阵各元素的字符串形式"""
    return [[str(entry) for entry in row] for row in value]
