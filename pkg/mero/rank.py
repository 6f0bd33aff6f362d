# -*- coding: utf-8 -*-
"""
内秩估计
========
d×e 多项式矩阵 A 的内秩 ρ(A) 等于 rank A(X)/n 在 n 阶点上的上确界。
在 n ≤ nmax 的随机整数点上取最大值，得到 ρ(A) 的一个下界；
比值达到 min(d, e) 时说明 A 是满的。

样本点只由 (seed, n, trial) 决定，所以增大 nmax 或 trials 只会加入样本，估计值单调不减。
"""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np
from sympy import QQ

sys.path.insert(0, str(Path(__file__).parent.parent))
from config import settings
from exactmath import DimensionMismatch, MatTuple, Scalar, ZERO, format_scalar, rank, zeros
from freealg import PolyLike
from jet import evaluate

from .evaluator import expand_to_poly
from .expr import letter_count
from .identity import check_seed, random_point
from .parser import parse

# 配置日志
logger = logging.getLogger(__name__)


@dataclass
class RankEstimate:
    """
    Attributes:
        ratio: 最大的 rank A(X)/n
        size: 达到最大值的 n
        rank: 对应的 rank A(X)
        witness: 见证点 X
        rows, cols: A 的形状 d×e
        samples: 总样本数
    """
    ratio: Scalar
    size: int
    rank: int
    witness: Optional[MatTuple]
    rows: int
    cols: int
    samples: int

    @property
    def full(self) -> bool:
        return self.ratio == min(self.rows, self.cols)

    def describe(self) -> str:
        return (f"ratio={format_scalar(self.ratio)} (n={self.size}, rank={self.rank}, "
                f"{self.rows}×{self.cols}, {self.samples} 个样本)")


def block_evaluate(entries: Sequence[Sequence[PolyLike]], x: MatTuple):
    """A(X)：各元素在 X 处的值拼成 dn×en 块矩阵"""
    n = x.size
    d, e = len(entries), len(entries[0])
    out = zeros((d * n, e * n))
    for i, row in enumerate(entries):
        for j, p in enumerate(row):
            out[i * n:(i + 1) * n, j * n:(j + 1) * n] = evaluate(p, x)
    return out


def _check_shape(entries: Sequence[Sequence[PolyLike]]) -> int:
    if not entries or not entries[0]:
        raise DimensionMismatch("多项式矩阵不能为空")
    width = len(entries[0])
    gs = set()
    for row in entries:
        if len(row) != width:
            raise DimensionMismatch("多项式矩阵各行长度不一致")
        gs.update(p.g for p in row)
    if len(gs) != 1:
        raise DimensionMismatch(f"多项式矩阵元素的字母数不一致: {sorted(gs)}")
    return gs.pop()


def inner_rank_estimate(entries: Sequence[Sequence[PolyLike]], nmax: int, trials: int,
                        seed: int, bound: Optional[int] = None) -> RankEstimate:
    """
    随机求值估计内秩

    Args:
        entries: d×e 的 nc 多项式矩阵
        nmax: 最大矩阵阶数
        trials: 每个阶数的样本数
        seed: 随机种子
        bound: 随机整数范围 B，默认 settings.ncgerm_sample_bound

    Returns:
        RankEstimate；ratio 是内秩的下界

    Raises:
        DimensionMismatch: 矩阵为空、不规则或字母数不一致
        PreconditionFailed: seed < 0
    """
    g = _check_shape(entries)
    check_seed(seed)
    bound = settings.ncgerm_sample_bound if bound is None else bound
    d, e = len(entries), len(entries[0])
    ceiling = min(d, e)
    best = RankEstimate(ZERO, 0, 0, None, d, e, 0)

    for n in range(1, nmax + 1):
        for trial in range(trials):
            rng = np.random.default_rng([seed, n, trial])
            x = random_point(rng, g, n, bound)
            r = rank(block_evaluate(entries, x))
            best.samples += 1
            ratio = QQ(r, n)
            if ratio > best.ratio:
                best.ratio, best.size, best.rank, best.witness = ratio, n, r, x
                logger.debug(f"内秩估计提高到 {format_scalar(ratio)}（n={n}, trial={trial}）")
            if best.ratio == ceiling:
                logger.info(f"内秩估计达到 min(d,e) = {ceiling}，A 是满的")
                return best
    logger.info(f"内秩估计: {best.describe()}")
    return best


def parse_matrix(rows: Sequence[Sequence[str]], g: Optional[int] = None) -> List[List[PolyLike]]:
    """
    把字符串矩阵解析为多项式矩阵（元素不能含求逆）

    g 为 None 时取所有元素中出现的最大字母下标。
    """
    if g is None:
        g = max(letter_count(parse(text)) for row in rows for text in row) or 1
    return [[expand_to_poly(parse(text, g=g), g) for text in row] for row in rows]
