# -*- coding: utf-8 -*-
"""
表达式求值
==========
同一棵语法树有四种解释：
- evaluate_expr：在矩阵点上自底向上求值，求逆奇异时返回 Undefined 并给出节点路径
- expr_jet：在基点 Y 处用芽运算求 L 阶截断芽（求逆用 jet_inverse）
- expand_to_poly：不含求逆的表达式展开为 nc 多项式
- expand_to_series：零阶项可逆的求逆按几何级数展开，得到截断幂级数
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional

from exactmath import (
    MatTuple,
    ONE,
    NotInvertibleError,
    PreconditionFailed,
    SingularMatrixError,
    identity,
    is_zero,
    matrix_inverse,
)
from freealg import NcPoly, NcSeries, PolyLike
from jet import Jet, constant_jet, evaluate, jet_eval, jet_inverse, jet_mul

from .expr import Atom, Const, Inverse, MeroExpr, Path, Product, Sum, letter_count, series_order

# 配置日志
logger = logging.getLogger(__name__)


@dataclass
class EvalOutcome:
    """
    求值结果：value（矩阵或芽）与 undefined_path 恰有一个非空

    Attributes:
        value: 求值结果
        undefined_path: 奇异的 Inverse 节点路径
    """
    value: Any = None
    undefined_path: Optional[Path] = None

    @property
    def defined(self) -> bool:
        return self.undefined_path is None

    def is_zero(self) -> bool:
        """已定义且为零"""
        if not self.defined:
            return False
        if isinstance(self.value, Jet):
            return self.value.is_zero()
        return is_zero(self.value)


class _Undefined(Exception):
    def __init__(self, path: Path):
        super().__init__(f"Inverse 节点 {path} 奇异")
        self.path = path


def _fold(m: MeroExpr, path: Path, ops: dict):
    """按节点类型分派的通用自底向上求值"""
    if isinstance(m, Const):
        return ops["const"](m.value)
    if isinstance(m, Atom):
        return ops["atom"](m.poly)
    if isinstance(m, Sum):
        total = None
        for k, (sign, term) in enumerate(m.terms):
            v = _fold(term, path + (k,), ops)
            v = v if sign > 0 else -v
            total = v if total is None else total + v
        return total
    if isinstance(m, Product):
        result = None
        for k, factor in enumerate(m.factors):
            v = _fold(factor, path + (k,), ops)
            result = v if result is None else ops["mul"](result, v)
        return result
    if isinstance(m, Inverse):
        return ops["inv"](_fold(m.arg, path + (0,), ops), path)
    raise TypeError(f"未知的表达式节点 {type(m).__name__}")


def evaluate_expr(m: MeroExpr, x: MatTuple) -> EvalOutcome:
    """
    在矩阵点 X 上求值

    Returns:
        EvalOutcome；某个求逆节点奇异时 undefined_path 为该节点的路径
    """
    n = x.size

    def inv(v, path):
        try:
            return matrix_inverse(v)
        except SingularMatrixError:
            raise _Undefined(path) from None

    ops = {
        "const": lambda c: identity(n) * c,
        "atom": lambda p: evaluate(p, x),
        "mul": lambda a, b: a.dot(b),
        "inv": inv,
    }
    try:
        return EvalOutcome(value=_fold(m, (), ops))
    except _Undefined as e:
        logger.debug(f"表达式在 {n} 阶点上无定义: {e}")
        return EvalOutcome(undefined_path=e.path)


def expr_jet(m: MeroExpr, y: MatTuple, order: int) -> EvalOutcome:
    """
    表达式在 Y 处的 L 阶截断芽

    Returns:
        EvalOutcome，value 为 Jet；某个求逆节点在 Y 处奇异时无定义
    """
    def inv(v: Jet, path):
        try:
            return jet_inverse(v)
        except NotInvertibleError:
            raise _Undefined(path) from None

    ops = {
        "const": lambda c: constant_jet(y, identity(y.size) * c, order),
        "atom": lambda p: jet_eval(p, y, order),
        "mul": jet_mul,
        "inv": inv,
    }
    try:
        return EvalOutcome(value=_fold(m, (), ops))
    except _Undefined as e:
        logger.warning(f"表达式在基点处无定义: {e}")
        return EvalOutcome(undefined_path=e.path)


def expand_to_poly(m: MeroExpr, g: Optional[int] = None) -> PolyLike:
    """
    不含求逆的表达式展开为多项式（含级数原子时结果为级数）

    Raises:
        PreconditionFailed: 表达式含求逆
    """
    g = g or letter_count(m) or 1

    def inv(v, path):
        raise PreconditionFailed(f"表达式在 {path} 处含求逆，不能展开为多项式")

    ops = {
        "const": lambda c: NcPoly.constant(g, c),
        "atom": lambda p: p,
        "mul": lambda a, b: a * b,
        "inv": inv,
    }
    return _fold(m, (), ops)


def series_inverse(a: NcSeries) -> NcSeries:
    """
    截断幂级数的逆：a = c(1 − u)，a⁻¹ = c⁻¹ Σ_k u^k

    Raises:
        NotInvertibleError: 常数项为 0
    """
    c = a.coeff(())
    if c == 0:
        raise NotInvertibleError("级数常数项为 0，不可逆")
    one = NcSeries(a.g, a.order, {(): 1})
    c_inv = ONE / c
    u = one - a.scale(c_inv)
    total, power = one, one
    for _ in range(a.order):
        power = power * u
        total = total + power
    return total.scale(c_inv)


def expand_to_series(m: MeroExpr, order: int, g: Optional[int] = None) -> NcSeries:
    """
    展开为 order 阶截断幂级数

    原子中已有更低截断阶的级数时，结果阶数降为其中最小者。

    Raises:
        NotInvertibleError: 某个被求逆的子式常数项为 0
    """
    g = g or letter_count(m) or 1
    inner = series_order(m)
    if inner is not None and inner < order:
        logger.warning(f"级数原子只知道到 {inner} 阶，展开阶数从 {order} 降为 {inner}")
        order = inner

    ops = {
        "const": lambda c: NcSeries(g, order, {(): c}),
        "atom": lambda p: NcSeries.truncate(p, order),
        "mul": lambda a, b: a * b,
        "inv": lambda v, path: series_inverse(v),
    }
    return _fold(m, (), ops)
