# -*- coding: utf-8 -*-
"""
截断 lost-abbey 条件
====================
序列 (f₀, …, f_L) 在点 Y 处满足 L 阶截断 LAC，当且仅当：

链式条件（每个 1 ≤ ℓ ≤ L、每个槽位 k、每个 S ∈ M_s）：

    f_ℓ(Z¹,…,Z^k, [S,Y], Z^{k+1},…) = f_{ℓ−1}(Z¹,…,Z^k S, Z^{k+1},…) − f_{ℓ−1}(Z¹,…,Z^k, S Z^{k+1},…)

其中 k = 0 时第一项换成 S·f_{ℓ−1}(…)，k = ℓ−1 时第二项换成 f_{ℓ−1}(…)·S。

模条件（只在最高阶 L，C 取遍 C(Y) 的基）：

    C·f_L(Z¹,…) = f_L(CZ¹,…)
    f_L(…,Z^k C, Z^{k+1},…) = f_L(…,Z^k, C Z^{k+1},…)
    f_L(…,Z^L C) = f_L(…,Z^L)·C

L = 0 时模条件退化为 [f₀, C] = 0。

知识点：
--------
1. 所有条件对数据都是线性的，在基输入上逐项精确比较即可，不需要抽样
2. 失败记录标注具体是哪一条恒等式（first/middle/last/module-left/module-middle/module-right/commute）
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from exactmath import (
    BasepointMismatch,
    DimensionMismatch,
    Mat,
    MatTuple,
    format_scalar,
    left_action,
    matrix_unit,
    right_action,
)
from jet import Jet, MultiMap
from structure import BimoduleOps, centralizer

# 配置日志
logger = logging.getLogger(__name__)


@dataclass
class Violation:
    """
    一条被违反的恒等式

    Attributes:
        tag: first / middle / last / module-left / module-middle / module-right / commute
        level: 阶数 ℓ
        slot: 槽位（0 开始）
        witness: 见证矩阵 S 或 C
        deviation: 偏差张量中绝对值最大的系数
        location: 该系数在偏差张量中的下标
    """
    tag: str
    level: int
    slot: int
    witness: Mat
    deviation: object
    location: Tuple[int, ...]

    def describe(self) -> str:
        return (f"{self.tag}(ℓ={self.level}, k={self.slot}) 偏差 {format_scalar(self.deviation)} "
                f"位于 {self.location}")


@dataclass
class LacReport:
    """
    LAC 检查报告

    Attributes:
        holds: 是否全部成立（等价于 violations 为空）
        violations: 违反记录
        checked: 检查过的恒等式条数
    """
    violations: List[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def holds(self) -> bool:
        return not self.violations


def _record(report: LacReport, defect: MultiMap, tag: str, level: int, slot: int,
            witness: Mat, first_only: bool) -> bool:
    report.checked += 1
    if defect.is_zero():
        return False
    deviation, location = defect.max_deviation()
    report.violations.append(Violation(tag, level, slot, witness, deviation, location))
    logger.debug(f"LAC 违反: {report.violations[-1].describe()}")
    return first_only


def _chain_tag(slot: int, level: int) -> str:
    if slot == level - 1:
        return "last"
    return "first" if slot == 0 else "middle"


def chain_defect(maps: Sequence[MultiMap], y: MatTuple, level: int, slot: int, s_mat: Mat) -> MultiMap:
    """链式条件两边之差：lhs − (A − B)"""
    g = y.g
    f_top, f_low = maps[level], maps[level - 1]
    lhs = f_top.insert(slot, y.commutator(s_mat).vec())
    if slot >= 1:
        a = f_low.precompose(slot - 1, right_action(s_mat, g))
    else:
        a = f_low.left_multiply(s_mat)
    if slot <= level - 2:
        b = f_low.precompose(slot, left_action(s_mat, g))
    else:
        b = f_low.right_multiply(s_mat)
    return lhs - (a - b)


def module_defects(f: MultiMap, c: Mat) -> List[Tuple[str, int, MultiMap]]:
    """最高阶 f 关于 C(Y) 元 c 的模条件偏差 (tag, 间隙, 偏差)"""
    g, ell = f.g, f.arity
    if ell == 0:
        value = f.tensor
        return [("commute", 0, MultiMap.constant(value.dot(c) - c.dot(value), g))]
    out = [("module-left", 0, f.left_multiply(c) - f.precompose(0, left_action(c, g)))]
    for k in range(1, ell):
        out.append(("module-middle", k,
                    f.precompose(k - 1, right_action(c, g)) - f.precompose(k, left_action(c, g))))
    out.append(("module-right", ell,
                f.precompose(ell - 1, right_action(c, g)) - f.right_multiply(c)))
    return out


def check_lac_truncated(y: MatTuple, jet: Jet, order: Optional[int] = None,
                        first_only: bool = False) -> LacReport:
    """
    检查 L 阶截断 LAC

    Args:
        y: 基点
        jet: 至少 L 阶的芽
        order: L，默认取芽的阶
        first_only: 发现第一条违反即停止

    Returns:
        LacReport
    """
    order = jet.order if order is None else order
    if jet.order < order:
        raise DimensionMismatch(f"芽只有 {jet.order} 阶，无法检查 {order} 阶 LAC")
    if jet.basepoint != y:
        raise BasepointMismatch("芽的基点与待检查的点不同")
    maps = jet.maps
    s = y.size
    report = LacReport()

    for level in range(1, order + 1):
        for slot in range(level):
            for p in range(s):
                for q in range(s):
                    s_mat = matrix_unit(s, p, q)
                    defect = chain_defect(maps, y, level, slot, s_mat)
                    if _record(report, defect, _chain_tag(slot, level), level, slot, s_mat, first_only):
                        return report

    for c in centralizer(y).basis:
        for tag, gap, defect in module_defects(maps[order], c):
            if _record(report, defect, tag, order, gap, c, first_only):
                return report

    logger.debug(f"LAC_{order} 检查 {report.checked} 条，违反 {len(report.violations)} 条")
    return report


def check_admissible(y: MatTuple, f: MultiMap) -> bool:
    """补零序列 (0, …, 0, f) 是否满足 ℓ 阶截断 LAC"""
    maps = [MultiMap.zero(f.s, f.g, ell) for ell in range(f.arity)] + [f]
    return check_lac_truncated(y, Jet(y, tuple(maps)), f.arity, first_only=True).holds


def admissibility_defects(y: MatTuple, f: MultiMap, ops: BimoduleOps) -> List[str]:
    """
    直接按双模同态的定义检查 Y-容许性，不经过链式条件

    1. f 在每个槽位上消去 [M_s, Y]：f∘(π 作用于第 k 个槽位) = 0
    2. 诱导映射是 C(Y)-双模同态：对 ops.cent 的每个基元 c，模条件成立

    Returns:
        失败项描述列表，空列表表示容许
    """
    if ops.y != y:
        raise BasepointMismatch("双模算子的基点与待检查的点不同")
    problems = []
    for k in range(f.arity):
        if not f.precompose(k, ops.pi).is_zero():
            problems.append(f"slot {k}: f 在 [M_s,Y] 上不为零")
    for i, c in enumerate(ops.cent.basis):
        for tag, gap, defect in module_defects(f, c):
            if not defect.is_zero():
                problems.append(f"{tag}(gap {gap}): C(Y) 第 {i} 个基元不等变")
    return problems
