# -*- coding: utf-8 -*-
"""
矩阵点 MatTuple
===============
nc 空间中的点：g 个同阶 s×s 有理矩阵组成的元组。

M_s^g 的坐标约定（全项目统一）：
    基向量下标 i = j·s² + p·s + q  ↔  第 j 个分量为 E_pq、其余分量为 0
vec(Z) 按此顺序把元组展平为长度 g·s² 的向量。
"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch
from .linalg import Mat, direct_sum, identity, kron, mat, zeros


@dataclass(frozen=True, eq=False)
class MatTuple:
    """
    g 元 s×s 矩阵组 (X₁, …, X_g)

    Attributes:
        components: 各分量矩阵（numpy 对象数组）
    """
    components: Tuple[Mat, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise DimensionMismatch("矩阵点至少需要一个分量")
        s = comps[0].shape[0]
        for c in comps:
            if c.shape != (s, s):
                raise DimensionMismatch(f"分量形状 {c.shape} 与 {(s, s)} 不一致")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components: Sequence[Sequence]) -> "MatTuple":
        """由嵌套列表构造，如 MatTuple.of([[0, 1], [0, 0]], [[0, 0], [1, 0]])"""
        return cls(tuple(mat(c) for c in components))

    @classmethod
    def zero(cls, g: int, s: int) -> "MatTuple":
        return cls(tuple(zeros((s, s)) for _ in range(g)))

    @classmethod
    def from_vec(cls, v: np.ndarray, g: int, s: int) -> "MatTuple":
        """vec 的逆运算"""
        if v.shape != (g * s * s,):
            raise DimensionMismatch(f"向量长度 {v.shape} 与 g={g}, s={s} 不符")
        blocks = v.reshape(g, s, s)
        return cls(tuple(blocks[j].copy() for j in range(g)))

    @classmethod
    def basis(cls, g: int, s: int) -> List["MatTuple"]:
        """M_s^g 的标准基，顺序与 vec 坐标一致"""
        n = g * s * s
        out = []
        for i in range(n):
            e = zeros(n)
            e[i] = 1
            out.append(cls.from_vec(e, g, s))
        return out

    # ========== 基本属性 ==========

    @property
    def size(self) -> int:
        return self.components[0].shape[0]

    @property
    def g(self) -> int:
        return len(self.components)

    @property
    def dim(self) -> int:
        """M_s^g 的维数 g·s²"""
        return self.g * self.size * self.size

    def __len__(self) -> int:
        return self.g

    def __iter__(self) -> Iterator[Mat]:
        return iter(self.components)

    def __getitem__(self, j: int) -> Mat:
        return self.components[j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatTuple) or other.g != self.g or other.size != self.size:
            return False
        return all(
            all(x == y for x, y in zip(a.flat, b.flat))
            for a, b in zip(self.components, other.components)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"MatTuple(g={self.g}, s={self.size})"

    # ========== 运算 ==========

    def stacked(self) -> np.ndarray:
        """形状 (g, s, s) 的数组"""
        return np.stack(self.components)

    def vec(self) -> np.ndarray:
        return self.stacked().reshape(-1)

    def __add__(self, other: "MatTuple") -> "MatTuple":
        return MatTuple(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "MatTuple") -> "MatTuple":
        return MatTuple(tuple(a - b for a, b in zip(self, other)))

    def scale(self, c) -> "MatTuple":
        return MatTuple(tuple(a * c for a in self))

    def left(self, s_mat: Mat) -> "MatTuple":
        """S·X（逐分量左乘）"""
        return MatTuple(tuple(s_mat.dot(a) for a in self))

    def right(self, s_mat: Mat) -> "MatTuple":
        """X·S（逐分量右乘）"""
        return MatTuple(tuple(a.dot(s_mat) for a in self))

    def commutator(self, s_mat: Mat) -> "MatTuple":
        """[S, X] = (S X_j − X_j S)_j"""
        return MatTuple(tuple(s_mat.dot(a) - a.dot(s_mat) for a in self))

    def conjugate(self, s_mat: Mat, s_inv: Mat) -> "MatTuple":
        """相似变换 S X S⁻¹"""
        return MatTuple(tuple(s_mat.dot(a).dot(s_inv) for a in self))

    def direct_sum(self, other: "MatTuple") -> "MatTuple":
        """X ⊕ X′"""
        if other.g != self.g:
            raise DimensionMismatch(f"字母数不同: {self.g} 与 {other.g}")
        return MatTuple(tuple(direct_sum(a, b) for a, b in zip(self, other)))

    def amplify(self, n: int) -> "MatTuple":
        """⊕ⁿ X = I_n ⊗ X"""
        return MatTuple(tuple(kron(identity(n), a) for a in self))


# ========== M_s^g 上的线性算子矩阵 ==========

def left_action(c: Mat, g: int) -> Mat:
    """Z ↦ c·Z 在 vec 坐标下的 g·s² 阶矩阵"""
    s = c.shape[0]
    block = kron(c, identity(s))
    return direct_sum(*([block] * g))


def right_action(c: Mat, g: int) -> Mat:
    """Z ↦ Z·c 在 vec 坐标下的 g·s² 阶矩阵"""
    s = c.shape[0]
    block = kron(identity(s), c.T)
    return direct_sum(*([block] * g))


def commutator_map(y: MatTuple) -> Mat:
    """ad_Y: M_s → M_s^g, S ↦ [S, Y]，列下标为 E_pq 的 p·s + q"""
    s = y.size
    cols = []
    for p in range(s):
        for q in range(s):
            e = zeros((s, s))
            e[p, q] = 1
            cols.append(y.commutator(e).vec())
    return np.stack(cols, axis=1)
