# -*- coding: utf-8 -*-
"""
nc 多项式与截断 nc 幂级数
========================
NcPoly：g 个字母上的有限支撑 词→有理数 映射。
NcSeries：额外带截断阶 D，只保存长度 ≤ D 的词，乘积超出 D 的部分被丢弃。

知识点：
--------
1. 乘法是词的拼接，系数按分配律合并
2. 项按 deglex 排序存储，相等比较精确且确定
3. 右迁移 L_j 去掉首字母 x_j，不以 x_j 开头的词被删除
"""

from collections import defaultdict
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from exactmath import DimensionMismatch, FormatError, ZERO, to_scalar, format_scalar

from .words import Word, deglex_key, word_to_str


class NcPoly:
    """
    自由代数 𝕜⟨x₁,…,x_g⟩ 的元素

    Attributes:
        g: 字母个数
    """

    __slots__ = ("g", "_terms")

    def __init__(self, g: int, terms: Optional[Mapping[Word, object]] = None):
        if g < 1:
            raise DimensionMismatch(f"字母数必须为正，得到 {g}")
        self.g = g
        cleaned: Dict[Word, object] = {}
        for word, coeff in (terms or {}).items():
            word = tuple(int(j) for j in word)
            for j in word:
                if not 1 <= j <= g:
                    raise DimensionMismatch(f"词 {word} 含有超出 1..{g} 的字母")
            self._check_word(word)
            c = to_scalar(coeff)
            if c != 0:
                cleaned[word] = c
        self._terms = dict(sorted(cleaned.items(), key=lambda kv: deglex_key(kv[0])))

    def _check_word(self, word: Word) -> None:
        pass

    # ========== 构造 ==========

    @classmethod
    def constant(cls, g: int, c=1) -> "NcPoly":
        return cls(g, {(): c})

    @classmethod
    def letter(cls, g: int, j: int) -> "NcPoly":
        return cls(g, {(j,): 1})

    @classmethod
    def zero(cls, g: int) -> "NcPoly":
        return cls(g)

    def _like(self, terms: Mapping[Word, object]) -> "NcPoly":
        """构造同类型、同参数的新元素"""
        return NcPoly(self.g, terms)

    # ========== 访问 ==========

    @property
    def terms(self) -> Dict[Word, object]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, object]]:
        return iter(self._terms.items())

    def coeff(self, word: Word):
        return self._terms.get(tuple(word), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """最高次数；零多项式为 -1"""
        return max((len(w) for w in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    # ========== 运算 ==========

    def _check_compatible(self, other: "NcPoly") -> None:
        if other.g != self.g:
            raise DimensionMismatch(f"字母数不同: {self.g} 与 {other.g}")

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.constant(self.g, other)
        if isinstance(other, NcSeries) and not isinstance(self, NcSeries):
            return other + self
        self._check_compatible(other)
        out = defaultdict(lambda: ZERO, self._terms)
        for w, c in other.items():
            out[w] += c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({w: -c for w, c in self.items()})

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly.constant(self.g, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NcPoly":
        c = to_scalar(c)
        return self._like({w: c * v for w, v in self.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        result = self._like({(): 1})
        for _ in range(k):
            result = mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPoly):
            try:
                other = NcPoly.constant(self.g, other)
            except FormatError:
                return NotImplemented
        return self.g == other.g and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.g, tuple(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            if not w:
                parts.append(format_scalar(c))
            elif c == 1:
                parts.append(word_to_str(w))
            else:
                parts.append(f"({format_scalar(c)})*{word_to_str(w)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NcPoly(g={self.g}, {self})"


class NcSeries(NcPoly):
    """
    截断 nc 幂级数：模去长度 > order 的词

    Attributes:
        order: 截断阶 D
    """

    __slots__ = ("order",)

    def __init__(self, g: int, order: int, terms: Optional[Mapping[Word, object]] = None):
        if order < 0:
            raise DimensionMismatch(f"截断阶必须非负，得到 {order}")
        self.order = order
        super().__init__(g, terms)

    def _check_word(self, word: Word) -> None:
        if len(word) > self.order:
            raise DimensionMismatch(f"词 {word} 长度超过截断阶 {self.order}")

    @classmethod
    def truncate(cls, p: NcPoly, order: int) -> "NcSeries":
        """把多项式截断为 order 阶级数"""
        return cls(p.g, order, {w: c for w, c in p.items() if len(w) <= order})

    def _like(self, terms: Mapping[Word, object]) -> "NcSeries":
        return NcSeries(self.g, self.order, {w: c for w, c in terms.items() if len(w) <= self.order})

    def _check_compatible(self, other: NcPoly) -> None:
        super()._check_compatible(other)
        if isinstance(other, NcSeries) and other.order != self.order:
            raise DimensionMismatch(f"截断阶不同: {self.order} 与 {other.order}")

    def to_poly(self) -> NcPoly:
        return NcPoly(self.g, self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, NcSeries) and other.order != self.order:
            return False
        return super().__eq__(other)

    __hash__ = NcPoly.__hash__

    def __repr__(self) -> str:
        return f"NcSeries(g={self.g}, D={self.order}, {self})"


PolyLike = Union[NcPoly, NcSeries]


def mul(p: PolyLike, q: PolyLike) -> PolyLike:
    """
    乘积 p·q（词拼接）

    级数参与时结果为级数，丢弃长度超过截断阶的词。

    Raises:
        DimensionMismatch: 字母数或截断阶不一致
    """
    series = [x for x in (p, q) if isinstance(x, NcSeries)]
    if p.g != q.g:
        raise DimensionMismatch(f"字母数不同: {p.g} 与 {q.g}")
    if len(series) == 2 and series[0].order != series[1].order:
        raise DimensionMismatch(f"截断阶不同: {series[0].order} 与 {series[1].order}")
    limit = series[0].order if series else None

    out = defaultdict(lambda: ZERO)
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            if limit is not None and len(w1) + len(w2) > limit:
                continue
            out[w1 + w2] += c1 * c2
    if limit is None:
        return NcPoly(p.g, out)
    return NcSeries(p.g, limit, out)


def homogeneous_component(p: PolyLike, d: int) -> NcPoly:
    """长度恰为 d 的项之和"""
    return NcPoly(p.g, {w: c for w, c in p.items() if len(w) == d})


def transduct(j: int, p: PolyLike) -> PolyLike:
    """
    右迁移 L_j：Σ α_w w ↦ Σ α_{x_j w} w

    级数的截断阶随之降一阶（x_j w 已知到 D 阶意味着 w 已知到 D−1 阶）。

    Raises:
        DimensionMismatch: j 不在 1..g 内
    """
    if not 1 <= j <= p.g:
        raise DimensionMismatch(f"字母下标 {j} 不在 1..{p.g} 内")
    terms = {w[1:]: c for w, c in p.items() if w and w[0] == j}
    if isinstance(p, NcSeries):
        return NcSeries(p.g, max(p.order - 1, 0), terms)
    return NcPoly(p.g, terms)
