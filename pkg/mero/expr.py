# -*- coding: utf-8 -*-
"""
亚纯表达式语法树
================
节点类型：
- Const：有理数常数
- Atom：命名的 nc 多项式或截断 nc 幂级数（字母 x_j 也是 Atom）
- Sum：带符号的项之和
- Product：有序乘积
- Inverse：求逆

节点路径用子节点下标元组表示，根节点路径为 ()。
求值失败时 EvalOutcome 用路径指出是哪个 Inverse 节点奇异。
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple, Union

from exactmath import DimensionMismatch, Scalar, format_scalar
from freealg import NcSeries, PolyLike

Path = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Const:
    value: Scalar

    def children(self) -> Tuple["MeroExpr", ...]:
        return ()

    def __str__(self) -> str:
        return format_scalar(self.value) if self.value.denominator != 1 else str(self.value.numerator)


@dataclass(frozen=True, eq=False)
class Atom:
    """
    Attributes:
        name: 名称（字母为 x1, x2, …；let 绑定为用户给的名字）
        poly: 对应的 NcPoly 或 NcSeries
    """
    name: str
    poly: PolyLike

    def children(self) -> Tuple["MeroExpr", ...]:
        return ()

    @property
    def is_series(self) -> bool:
        return isinstance(self.poly, NcSeries)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=False)
class Sum:
    """
    Attributes:
        terms: (符号 ±1, 子表达式) 列表
    """
    terms: Tuple[Tuple[int, "MeroExpr"], ...]

    def children(self) -> Tuple["MeroExpr", ...]:
        return tuple(t for _, t in self.terms)

    def __str__(self) -> str:
        parts = []
        for k, (sign, term) in enumerate(self.terms):
            text = str(term)
            if k == 0:
                parts.append(text if sign > 0 else f"-{text}")
            else:
                parts.append(f"{'+' if sign > 0 else '-'} {text}")
        return "(" + " ".join(parts) + ")"


@dataclass(frozen=True, eq=False)
class Product:
    factors: Tuple["MeroExpr", ...]

    def children(self) -> Tuple["MeroExpr", ...]:
        return self.factors

    def __str__(self) -> str:
        return "*".join(str(f) for f in self.factors)


@dataclass(frozen=True, eq=False)
class Inverse:
    arg: "MeroExpr"

    def children(self) -> Tuple["MeroExpr", ...]:
        return (self.arg,)

    def __str__(self) -> str:
        return f"({self.arg})^-1"


MeroExpr = Union[Const, Atom, Sum, Product, Inverse]


def walk(m: MeroExpr, path: Path = ()) -> Iterator[Tuple[Path, MeroExpr]]:
    """先序遍历，给出 (路径, 节点)"""
    yield path, m
    for k, child in enumerate(m.children()):
        yield from walk(child, path + (k,))


def node_at(m: MeroExpr, path: Path) -> MeroExpr:
    for k in path:
        m = m.children()[k]
    return m


def atoms(m: MeroExpr) -> List[Atom]:
    return [node for _, node in walk(m) if isinstance(node, Atom)]


def is_inversion_free(m: MeroExpr) -> bool:
    return not any(isinstance(node, Inverse) for _, node in walk(m))


def has_series(m: MeroExpr) -> bool:
    return any(a.is_series for a in atoms(m))


def series_order(m: MeroExpr):
    """所有级数原子的最小截断阶；没有级数原子时返回 None"""
    orders = [a.poly.order for a in atoms(m) if a.is_series]
    return min(orders) if orders else None


def letter_count(m: MeroExpr) -> int:
    """
    原子共同的字母数；只有常数时返回 0

    Raises:
        DimensionMismatch: 原子的字母数不一致
    """
    gs = {a.poly.g for a in atoms(m)}
    if len(gs) > 1:
        raise DimensionMismatch(f"表达式中原子的字母数不一致: {sorted(gs)}")
    return gs.pop() if gs else 0
