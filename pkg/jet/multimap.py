# -*- coding: utf-8 -*-
"""
多重线性映射 MultiMap
=====================
ℓ 元线性映射 f: (M_s^g)^ℓ → M_s，以稠密系数张量存储：

    tensor 形状 = (n,)*ℓ + (s, s)，n = g·s²
    tensor[i₁, …, i_ℓ] = f(e_{i₁}, …, e_{i_ℓ})

输入基向量 e_i 的下标约定见 exactmath.points（i = j·s² + p·s + q）。

知识点：
--------
1. 多重线性由系数张量结构保证，所有运算都是张量缩并
2. 在某个槽位代入向量 = tensordot 消去该轴
3. 在某个槽位预先作用线性映射 M = tensordot 后把新轴移回原位置
4. 卷积 (a⋆b)(Z¹…Z^{i+k}) = a(Z¹…Z^i)·b(Z^{i+1}…) 用批量矩阵乘实现
"""

import logging
import sys
from itertools import product
from pathlib import Path
from typing import Callable, Iterator, Tuple

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))
from config import settings
from exactmath import DimensionMismatch, Mat, MatTuple, ResourceGuardError, zeros

# 配置日志
logger = logging.getLogger(__name__)


def check_tensor_size(g: int, s: int, arity: int) -> int:
    """
    资源保护：(g·s²)^ℓ·s² 超过 settings.ncgerm_mem_cap 时拒绝

    Returns:
        张量元素个数
    """
    entries = (g * s * s) ** arity * s * s
    if entries > settings.ncgerm_mem_cap:
        raise ResourceGuardError(
            f"张量规模 (g·s²)^ℓ·s² = {entries} 超过上限 {settings.ncgerm_mem_cap}"
            f"（g={g}, s={s}, ℓ={arity}；可用 NCGERM_MEM_CAP 调整）"
        )
    return entries


class MultiMap:
    """
    ℓ 元线性映射 (M_s^g)^ℓ → M_s

    Attributes:
        s: 点的阶数
        g: 字母数
        arity: 元数 ℓ（0 元映射即一个 s×s 矩阵）
        tensor: 系数张量
    """

    __slots__ = ("s", "g", "arity", "tensor")

    def __init__(self, s: int, g: int, arity: int, tensor: np.ndarray = None):
        check_tensor_size(g, s, arity)
        n = g * s * s
        shape = (n,) * arity + (s, s)
        if tensor is None:
            tensor = zeros(shape)
        elif tensor.shape != shape:
            raise DimensionMismatch(f"张量形状 {tensor.shape} 应为 {shape}")
        self.s = s
        self.g = g
        self.arity = arity
        self.tensor = tensor

    # ========== 构造 ==========

    @classmethod
    def zero(cls, s: int, g: int, arity: int) -> "MultiMap":
        return cls(s, g, arity)

    @classmethod
    def constant(cls, a: Mat, g: int) -> "MultiMap":
        """0 元映射（一个矩阵）"""
        return cls(a.shape[0], g, 0, a.copy())

    @classmethod
    def from_function(cls, s: int, g: int, arity: int,
                      func: Callable[..., Mat]) -> "MultiMap":
        """在全部基元组上求值 func 得到系数张量"""
        basis = MatTuple.basis(g, s)
        out = cls(s, g, arity)
        for index in product(range(len(basis)), repeat=arity):
            out.tensor[index] = func(*(basis[i] for i in index))
        return out

    @property
    def n(self) -> int:
        """输入空间 M_s^g 的维数"""
        return self.g * self.s * self.s

    def _like(self, arity: int, tensor: np.ndarray) -> "MultiMap":
        return MultiMap(self.s, self.g, arity, tensor)

    def flat(self) -> np.ndarray:
        """形状 (n^ℓ, s, s) 的视图"""
        return self.tensor.reshape(-1, self.s, self.s)

    # ========== 线性结构 ==========

    def _check_same(self, other: "MultiMap") -> None:
        if (self.s, self.g, self.arity) != (other.s, other.g, other.arity):
            raise DimensionMismatch(
                f"映射参数不一致: (s,g,ℓ)={(self.s, self.g, self.arity)} 与 "
                f"{(other.s, other.g, other.arity)}"
            )

    def __add__(self, other: "MultiMap") -> "MultiMap":
        self._check_same(other)
        return self._like(self.arity, self.tensor + other.tensor)

    def __sub__(self, other: "MultiMap") -> "MultiMap":
        self._check_same(other)
        return self._like(self.arity, self.tensor - other.tensor)

    def __neg__(self) -> "MultiMap":
        return self._like(self.arity, -self.tensor)

    def scale(self, c) -> "MultiMap":
        return self._like(self.arity, self.tensor * c)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.tensor.flat)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiMap):
            return NotImplemented
        return (
            (self.s, self.g, self.arity) == (other.s, other.g, other.arity)
            and all(x == y for x, y in zip(self.tensor.flat, other.tensor.flat))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"MultiMap(s={self.s}, g={self.g}, arity={self.arity})"

    def nonzero_entries(self) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, int], object]]:
        """遍历非零系数：(输入基下标元组, 输出位置 (p, q), 系数)"""
        for index, value in np.ndenumerate(self.tensor):
            if value != 0:
                yield index[:self.arity], index[self.arity:], value

    def max_deviation(self) -> Tuple[object, Tuple[int, ...]]:
        """绝对值最大的系数及其位置；零映射返回 (0, ())"""
        best, where = 0, ()
        for index, value in np.ndenumerate(self.tensor):
            if abs(value) > best:
                best, where = abs(value), index
        return best, where

    # ========== 求值与缩并 ==========

    def evaluate(self, *args: MatTuple) -> Mat:
        """f(Z¹, …, Z^ℓ)"""
        if len(args) != self.arity:
            raise DimensionMismatch(f"需要 {self.arity} 个参数，得到 {len(args)}")
        result = self.tensor
        for z in args:
            result = np.tensordot(z.vec(), result, axes=([0], [0]))
        return result

    def insert(self, slot: int, v: np.ndarray) -> "MultiMap":
        """在第 slot 个槽位（从 0 开始）代入固定向量 vec(W)，元数减一"""
        tensor = np.tensordot(self.tensor, v, axes=([slot], [0]))
        return self._like(self.arity - 1, tensor)

    def precompose(self, slot: int, m: Mat) -> "MultiMap":
        """g(…, Z, …) = f(…, M(Z), …)，m 为 vec 坐标下的 n×n 矩阵"""
        tensor = np.tensordot(self.tensor, m, axes=([slot], [0]))
        return self._like(self.arity, np.moveaxis(tensor, -1, slot))

    def insert_bilinear(self, slot: int, b: np.ndarray) -> "MultiMap":
        """
        g(…, A, B, …) = f(…, β(A, B), …)，元数加一

        Args:
            slot: 被替换的槽位
            b: 形状 (n, n, n)，b[a, c, k] 为 β(e_a, e_c) 的第 k 个坐标
        """
        tensor = np.tensordot(self.tensor, b, axes=([slot], [2]))
        tensor = np.moveaxis(tensor, [-2, -1], [slot, slot + 1])
        return self._like(self.arity + 1, tensor)

    def left_multiply(self, a: Mat) -> "MultiMap":
        """a·f(…)"""
        return self._like(self.arity, np.matmul(a, self.tensor))

    def right_multiply(self, a: Mat) -> "MultiMap":
        """f(…)·a"""
        return self._like(self.arity, np.matmul(self.tensor, a))

    def left_multiply_by_map(self, phi: np.ndarray) -> "MultiMap":
        """
        g(Z⁰, Z¹, …) = Φ(Z⁰)·f(Z¹, …)，元数加一

        Args:
            phi: 形状 (n, s, s)，phi[a] = Φ(e_a)
        """
        product_ = np.matmul(phi[:, None], self.flat()[None])
        return self._like(self.arity + 1, product_.reshape((self.n,) * (self.arity + 1) + (self.s, self.s)))

    def right_multiply_by_map(self, phi: np.ndarray) -> "MultiMap":
        """g(Z¹, …, Z^ℓ, Z′) = f(Z¹, …, Z^ℓ)·Φ(Z′)，元数加一"""
        product_ = np.matmul(self.flat()[:, None], phi[None])
        return self._like(self.arity + 1, product_.reshape((self.n,) * (self.arity + 1) + (self.s, self.s)))

    def convolve(self, other: "MultiMap") -> "MultiMap":
        """(f⋆h)(Z¹…Z^{i+k}) = f(Z¹…Z^i)·h(Z^{i+1}…Z^{i+k})"""
        if (self.s, self.g) != (other.s, other.g):
            raise DimensionMismatch("卷积的两个映射 s 或 g 不一致")
        arity = self.arity + other.arity
        check_tensor_size(self.g, self.s, arity)
        product_ = np.matmul(self.flat()[:, None], other.flat()[None])
        return self._like(arity, product_.reshape((self.n,) * arity + (self.s, self.s)))
