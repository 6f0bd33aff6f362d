# -*- coding: utf-8 -*-
"""
词芽表与线性系统装配
====================
插值与消没理想都归结为同一个线性映射：

    系数向量 (α_w)_{|w| ≤ d}  ↦  Σ α_w · jet(w, Yⁱ, L)（所有点、所有阶拼接成一个长向量）

WordJetTable 缓存每个词在每个点处的芽。词按 deglex 逐层生成，
jet(w·x_j) = jet(w) ⋆ jet(x_j)（Leibniz 卷积），每个词只乘一次。

知识点：
--------
1. 同一层的词互不依赖，可交给线程池并行计算
2. 芽向量把 f₀, …, f_L 的系数张量按顺序展平拼接
"""

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Sequence

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))
from config import settings
from exactmath import DimensionMismatch, MatTuple, zeros
from freealg import NcPoly, Word, words_of_degree
from jet import Jet, jet_eval, jet_mul, unit_jet

# 配置日志
logger = logging.getLogger(__name__)


def jet_vector(jet: Jet, order: int) -> np.ndarray:
    """(f₀, …, f_order) 的系数展平拼接"""
    return np.concatenate([jet.maps[ell].tensor.reshape(-1) for ell in range(order + 1)])


class WordJetTable:
    """
    若干点处各个词的截断芽

    Attributes:
        points: 点 Y¹, …, Y^h（字母数相同）
        order: 截断阶 L
        g: 字母数
    """

    def __init__(self, points: Sequence[MatTuple], order: int):
        if not points:
            raise DimensionMismatch("至少需要一个点")
        self.points = list(points)
        self.order = order
        self.g = self.points[0].g
        for y in self.points:
            if y.g != self.g:
                raise DimensionMismatch(f"各点字母数不同: {y.g} 与 {self.g}")
        self._letters = [
            [jet_eval(NcPoly.letter(self.g, j), y, order) for j in range(1, self.g + 1)]
            for y in self.points
        ]
        self._jets: Dict[Word, List[Jet]] = {(): [unit_jet(y, order) for y in self.points]}
        self._vectors: Dict[Word, np.ndarray] = {}
        self._depth = 0

    def _extend(self, word: Word) -> List[Jet]:
        prefix = self._jets[word[:-1]]
        j = word[-1] - 1
        return [jet_mul(prefix[i], self._letters[i][j]) for i in range(len(self.points))]

    def ensure_degree(self, d: int) -> None:
        """保证长度 ≤ d 的词都已计算"""
        threads = max(1, settings.ncgerm_threads)
        while self._depth < d:
            layer = list(words_of_degree(self.g, self._depth + 1))
            if threads == 1:
                results = [self._extend(w) for w in layer]
            else:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(self._extend, layer))
            self._jets.update(zip(layer, results))
            self._depth += 1
            logger.debug(f"词芽表扩展到 {self._depth} 次，共 {len(self._jets)} 个词")

    def jets(self, word: Word) -> List[Jet]:
        self.ensure_degree(len(word))
        return self._jets[tuple(word)]

    def vector(self, word: Word) -> np.ndarray:
        """词在所有点处的芽向量"""
        word = tuple(word)
        if word not in self._vectors:
            self._vectors[word] = np.concatenate([jet_vector(jet, self.order) for jet in self.jets(word)])
        return self._vectors[word]

    def matrix(self, words: Sequence[Word]) -> np.ndarray:
        """列为各词芽向量的矩阵"""
        if not words:
            return zeros((self.row_count(), 0))
        return np.stack([self.vector(w) for w in words], axis=1)

    def row_count(self) -> int:
        return sum(
            sum((y.g * y.size ** 2) ** ell * y.size ** 2 for ell in range(self.order + 1))
            for y in self.points
        )

    def target_vector(self, targets: Sequence[Jet]) -> np.ndarray:
        """目标芽拼接成的右端项"""
        return np.concatenate([jet_vector(t, self.order) for t in targets])


def poly_from_coefficients(g: int, words: Sequence[Word], coeffs: Sequence) -> NcPoly:
    """由词列表和系数向量构造多项式"""
    return NcPoly(g, {w: c for w, c in zip(words, coeffs) if c != 0})
