# -*- coding: utf-8 -*-
"""
截断芽 Jet
==========
Jet = 基点 Y 加上多重线性映射序列 (f₀, …, f_L)，f_ℓ 的元数为 ℓ。
芽构成代数：加法逐项进行，乘法是 Leibniz 卷积

    (a·b)_ℓ = Σ_{i=0}^{ℓ} a_i ⋆ b_{ℓ−i}

知识点：
--------
1. 芽固定在基点上，不同基点的芽不能相加或相乘
2. f₀ 可逆时芽可逆：b₀ = a₀⁻¹，b_ℓ = −a₀⁻¹ Σ_{i≥1} a_i ⋆ b_{ℓ−i}
3. 扩张 (ampliation) 把 s 阶点上的映射按块延拓到 ns 阶点
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Optional, Tuple

from exactmath import (
    BasepointMismatch,
    DimensionMismatch,
    Mat,
    MatTuple,
    NotInvertibleError,
    SingularMatrixError,
    identity,
    independent_columns,
    is_zero,
    matrix_inverse,
    zeros,
)

from .multimap import MultiMap, check_tensor_size

# 配置日志
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Jet:
    """
    基点 Y 处的 L 阶截断芽

    Attributes:
        basepoint: 基点 Y
        maps: (f₀, …, f_L)
    """
    basepoint: MatTuple
    maps: Tuple[MultiMap, ...]

    def __post_init__(self):
        maps = tuple(self.maps)
        if not maps:
            raise DimensionMismatch("芽至少包含 f₀")
        s, g = self.basepoint.size, self.basepoint.g
        for ell, f in enumerate(maps):
            if (f.s, f.g, f.arity) != (s, g, ell):
                raise DimensionMismatch(
                    f"第 {ell} 个映射的 (s,g,ℓ)={(f.s, f.g, f.arity)} 与基点 {(s, g, ell)} 不符"
                )
        object.__setattr__(self, "maps", maps)

    @property
    def order(self) -> int:
        return len(self.maps) - 1

    @property
    def s(self) -> int:
        return self.basepoint.size

    @property
    def g(self) -> int:
        return self.basepoint.g

    def value(self) -> Mat:
        """f₀ = f(Y)"""
        return self.maps[0].tensor

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise DimensionMismatch(f"芽只有 {self.order} 阶，不能截断到 {order} 阶")
        return Jet(self.basepoint, self.maps[:order + 1])

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.maps)

    def _check_same(self, other: "Jet") -> None:
        if self.basepoint != other.basepoint:
            raise BasepointMismatch("两个芽的基点不同")
        if self.order != other.order:
            raise DimensionMismatch(f"芽的阶数不同: {self.order} 与 {other.order}")

    def __add__(self, other: "Jet") -> "Jet":
        self._check_same(other)
        return Jet(self.basepoint, tuple(a + b for a, b in zip(self.maps, other.maps)))

    def __sub__(self, other: "Jet") -> "Jet":
        self._check_same(other)
        return Jet(self.basepoint, tuple(a - b for a, b in zip(self.maps, other.maps)))

    def __neg__(self) -> "Jet":
        return Jet(self.basepoint, tuple(-f for f in self.maps))

    def scale(self, c) -> "Jet":
        return Jet(self.basepoint, tuple(f.scale(c) for f in self.maps))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Jet):
            return NotImplemented
        return (
            self.basepoint == other.basepoint
            and self.order == other.order
            and all(a == b for a, b in zip(self.maps, other.maps))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Jet(g={self.g}, s={self.s}, L={self.order})"


def constant_jet(y: MatTuple, a: Mat, order: int) -> Jet:
    """f₀ = a，高阶项为 0"""
    s, g = y.size, y.g
    maps = [MultiMap.constant(a, g)] + [MultiMap.zero(s, g, ell) for ell in range(1, order + 1)]
    return Jet(y, tuple(maps))


def unit_jet(y: MatTuple, order: int) -> Jet:
    return constant_jet(y, identity(y.size), order)


def zero_jet(y: MatTuple, order: int) -> Jet:
    return constant_jet(y, zeros((y.size, y.size)), order)


def jet_mul(a: Jet, b: Jet) -> Jet:
    """
    Leibniz 卷积乘积

    Raises:
        BasepointMismatch: 基点不同
        DimensionMismatch: 阶数不同
    """
    a._check_same(b)
    nonzero_a = [not f.is_zero() for f in a.maps]
    nonzero_b = [not f.is_zero() for f in b.maps]
    maps = []
    for ell in range(a.order + 1):
        total = MultiMap.zero(a.s, a.g, ell)
        for i in range(ell + 1):
            if nonzero_a[i] and nonzero_b[ell - i]:
                total = total + a.maps[i].convolve(b.maps[ell - i])
        maps.append(total)
    return Jet(a.basepoint, tuple(maps))


def jet_inverse(a: Jet) -> Jet:
    """
    乘法逆芽

    Raises:
        NotInvertibleError: f₀ 奇异
    """
    try:
        a0_inv = matrix_inverse(a.value())
    except SingularMatrixError as e:
        logger.error(f"芽的零阶项不可逆: {e}")
        raise NotInvertibleError(f"f₀ 奇异，芽不可逆: {e}") from e

    inverse = [MultiMap.constant(a0_inv, a.g)]
    for ell in range(1, a.order + 1):
        total = MultiMap.zero(a.s, a.g, ell)
        for i in range(1, ell + 1):
            if not a.maps[i].is_zero():
                total = total + a.maps[i].convolve(inverse[ell - i])
        inverse.append(total.left_multiply(-a0_inv))
    return Jet(a.basepoint, tuple(inverse))


def ampliate(f: MultiMap, n: int) -> MultiMap:
    """
    块延拓 T ↦ T_n：ns 阶点 Z^k = (Z^k_{ab}) 看作 n×n 块矩阵，

        T_n(Z¹,…,Z^ℓ)_{ac} = Σ_{b₁…b_{ℓ−1}} T(Z¹_{a b₁}, Z²_{b₁ b₂}, …, Z^ℓ_{b_{ℓ−1} c})

    0 元映射 a 延拓为 I_n ⊗ a。
    """
    s, g, ell = f.s, f.g, f.arity
    big_s = n * s
    check_tensor_size(g, big_s, ell)
    big = zeros((g, n, s, n, s) * ell + (n, s, n, s))
    source = f.tensor.reshape((g, s, s) * ell + (s, s))
    full = slice(None)
    for chain in product(range(n), repeat=ell + 1):
        key = []
        for k in range(ell):
            key.extend([full, chain[k], full, chain[k + 1], full])
        key.extend([chain[0], full, chain[ell], full])
        big[tuple(key)] = source
    big_n = g * big_s * big_s
    return MultiMap(big_s, g, ell, big.reshape((big_n,) * ell + (big_s, big_s)))


def nilpotency_index(z: MatTuple) -> Optional[int]:
    """
    最小的 k 使所有长度为 k 的 Z_j 乘积为 0；不幂零时返回 None

    逐层维护长度为 k 的乘积张成的子空间，至多 n 层（n 为矩阵阶数）。
    """
    n = z.size
    layer = [c for c in z if not is_zero(c)]
    for k in range(1, n + 2):
        if not layer:
            return k
        keep = independent_columns([c.reshape(-1) for c in layer])
        layer = [layer[i] for i in keep]
        layer = [m.dot(c) for m in layer for c in z]
        layer = [m for m in layer if not is_zero(m)]
    return None


def is_jointly_nilpotent(z: MatTuple) -> bool:
    """Z_j 生成的非单位代数是否幂零（所有长度 n 的乘积为 0）"""
    return nilpotency_index(z) is not None


def taylor_evaluate(jet: Jet, x: MatTuple) -> Mat:
    """
    Taylor-Taylor 部分和 Σ_{ℓ≤L} (f_ℓ)_n(D, …, D)，D = X − ⊕ⁿY

    对次数不超过 L 的多项式芽，结果等于多项式在 X 处的值；
    Y 为标量点且 D 的幂零指数 k ≤ L+1 时，ℓ ≥ k 的项为 0。

    Raises:
        DimensionMismatch: X 的阶数不是 s 的倍数
    """
    s = jet.s
    if x.size % s or x.g != jet.g:
        raise DimensionMismatch(f"点的阶数 {x.size} 不是基点阶数 {s} 的倍数")
    n = x.size // s
    d = x - jet.basepoint.amplify(n)
    total = zeros((x.size, x.size))
    for f in jet.maps:
        if f.is_zero():
            continue
        total = total + ampliate(f, n).evaluate(*([d] * f.arity))
    return total
