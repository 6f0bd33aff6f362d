# -*- coding: utf-8 -*-
"""
多项式求值与高阶微分
====================
在矩阵点上求值 nc 多项式/级数，并按块双对角点读出 nc 微分算子 Δ^ℓ_Y。

Δ^ℓ_Y p(Z¹,…,Z^ℓ) 是 p 在 (ℓ+1)s 阶点

    ⎡ Y  Z¹         ⎤
    ⎢    Y  Z²      ⎥
    ⎢       ⋱  ⋱    ⎥
    ⎢          Y Z^ℓ⎥
    ⎣             Y ⎦

上取值的右上角 s×s 块。jet_eval 对每个基元组做一次这样的求值，
所有基元组打包成一批，用带前缀缓存的批量矩阵乘计算。

知识点：
--------
1. 词按 deglex 排序后，前缀总在前面出现，前缀缓存命中率高
2. 不同基元组的求值互不相关，可分块交给线程池
"""

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from pathlib import Path
from typing import Dict, List, Sequence

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))
from config import settings
from exactmath import DimensionMismatch, Mat, MatTuple, ONE, identity, zeros
from freealg import PolyLike, Word

from .germ import Jet
from .multimap import MultiMap, check_tensor_size

# 配置日志
logger = logging.getLogger(__name__)


def _check_letters(p: PolyLike, g: int) -> None:
    if p.g != g:
        raise DimensionMismatch(f"多项式有 {p.g} 个字母，点有 {g} 个分量")


def _evaluate_stacked(p: PolyLike, letters: np.ndarray) -> np.ndarray:
    """
    批量求值

    Args:
        letters: 形状 (g, N, m, m)，第 j 个字母在 N 个点上的取值

    Returns:
        形状 (N, m, m)
    """
    _, batch, m, _ = letters.shape
    unit = np.empty((batch, m, m), dtype=object)
    unit[:] = identity(m)
    cache: Dict[Word, np.ndarray] = {(): unit}

    def word_value(word: Word) -> np.ndarray:
        if word not in cache:
            cache[word] = np.matmul(word_value(word[:-1]), letters[word[-1] - 1])
        return cache[word]

    result = zeros((batch, m, m))
    for word, coeff in p.items():
        result = result + word_value(word) * coeff
    return result


def evaluate(p: PolyLike, x: MatTuple) -> Mat:
    """
    p(X)：把 x_j 替换为 X_j，空词替换为单位阵

    Raises:
        DimensionMismatch: 字母数与分量数不一致
    """
    _check_letters(p, x.g)
    letters = x.stacked()[:, None]
    return _evaluate_stacked(p, letters)[0]


def block_point(y: MatTuple, directions: Sequence[MatTuple]) -> MatTuple:
    """Y 在对角、Z^k 在上副对角的 (ℓ+1)s 阶块双对角点"""
    s, ell = y.size, len(directions)
    m = (ell + 1) * s
    comps = []
    for j in range(y.g):
        c = zeros((m, m))
        for k in range(ell + 1):
            c[k * s:(k + 1) * s, k * s:(k + 1) * s] = y[j]
        for k, z in enumerate(directions):
            c[k * s:(k + 1) * s, (k + 1) * s:(k + 2) * s] = z[j]
        comps.append(c)
    return MatTuple(tuple(comps))


def differential(p: PolyLike, y: MatTuple, directions: Sequence[MatTuple]) -> Mat:
    """Δ^ℓ_Y p(Z¹,…,Z^ℓ)：块双对角点上取值的右上角块"""
    s, ell = y.size, len(directions)
    value = evaluate(p, block_point(y, directions))
    return value[:s, ell * s:(ell + 1) * s]


def _differential_batch(p: PolyLike, y: MatTuple, index: np.ndarray) -> np.ndarray:
    """
    对一批基元组求 Δ^ℓ

    Args:
        index: 形状 (N, ℓ) 的基下标

    Returns:
        形状 (N, s, s)
    """
    s, g = y.size, y.g
    batch, ell = index.shape
    m = (ell + 1) * s
    diagonal = zeros((g, m, m))
    for j in range(g):
        for k in range(ell + 1):
            diagonal[j, k * s:(k + 1) * s, k * s:(k + 1) * s] = y[j]
    letters = np.empty((g, batch, m, m), dtype=object)
    letters[:] = diagonal[:, None]
    rows = np.arange(batch)
    for k in range(ell):
        j, rest = np.divmod(index[:, k], s * s)
        p_, q_ = np.divmod(rest, s)
        letters[j, rows, k * s + p_, (k + 1) * s + q_] = ONE
    values = _evaluate_stacked(p, letters)
    return values[:, :s, ell * s:(ell + 1) * s]


def _chunks(index: np.ndarray, parts: int) -> List[np.ndarray]:
    size = max(1, -(-len(index) // parts))
    return [index[i:i + size] for i in range(0, len(index), size)]


def differential_map(p: PolyLike, y: MatTuple, ell: int) -> MultiMap:
    """Δ^ℓ_Y p 作为 MultiMap"""
    _check_letters(p, y.g)
    s, g = y.size, y.g
    check_tensor_size(g, s, ell)
    n = g * s * s
    index = np.array(list(product(range(n), repeat=ell)), dtype=np.int64)
    if ell == 0:
        index = np.zeros((1, 0), dtype=np.int64)

    threads = max(1, settings.ncgerm_threads)
    if threads == 1 or len(index) < 2:
        values = _differential_batch(p, y, index)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda chunk: _differential_batch(p, y, chunk),
                                  _chunks(index, threads)))
        values = np.concatenate(parts, axis=0)
    return MultiMap(s, g, ell, values.reshape((n,) * ell + (s, s)))


def jet_eval(p: PolyLike, y: MatTuple, order: int) -> Jet:
    """
    p 在 Y 处的 order 阶截断芽 (Δ⁰_Y p, …, Δ^L_Y p)

    Args:
        p: nc 多项式或截断级数
        y: 基点
        order: 截断阶 L

    Returns:
        Jet
    """
    logger.debug(f"计算 jet: g={y.g}, s={y.size}, L={order}, 项数={len(p)}")
    return Jet(y, tuple(differential_map(p, y, ell) for ell in range(order + 1)))


def shift_point(x: MatTuple, alpha: Sequence) -> MatTuple:
    """两块点 [[X_j, 0], [α_j·I, 0]]"""
    n = x.size
    comps = []
    for j, a in enumerate(alpha):
        c = zeros((2 * n, 2 * n))
        c[:n, :n] = x[j]
        c[n:, :n] = identity(n) * a
        comps.append(c)
    return MatTuple(tuple(comps))


def shift_block(p: PolyLike, x: MatTuple, alpha: Sequence) -> Mat:
    """p 在 [[X,0],[α,0]] 上取值的 (2,1) 块，等于 Σ_j α_j L_j(p)(X)"""
    n = x.size
    return evaluate(p, shift_point(x, alpha))[n:, :n]
