# -*- coding: utf-8 -*-
"""
自由 Hermite 插值
=================
给定两两分离的半单点 Y¹, …, Y^h 以及满足 L 阶截断 LAC 的目标芽，
求 nc 多项式 p 使 Δ^ℓ_{Yⁱ} p = f^{(i)}_ℓ（ℓ ≤ L）。

次数从 0 开始逐次升高，第一个使线性系统相容的次数获胜；
同一次数内取消元求解器的特解（自由变量取 0），结果确定。

知识点：
--------
1. 存在性保证给出的次数上界是 ⌊2N log₂N⌋ + 4N − 4，N = max(L,1)(L+1)·g·Σ sᵢ³
2. 这个上界在小规模下也极大，实际搜索由 Dmax 截断
3. 不可行时区分"触到 Dmax"与"前提不成立"
"""

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

sys.path.insert(0, str(Path(__file__).parent.parent))
from config import settings
from exactmath import (
    BasepointMismatch,
    DimensionMismatch,
    InfeasibleError,
    MatTuple,
    NotSeparatedError,
    PreconditionFailed,
    solve_linear,
)
from freealg import NcPoly, words_up_to
from jet import Jet, jet_eval
from lac import check_lac_truncated
from structure import are_separated

from .system import WordJetTable, poly_from_coefficients

# 配置日志
logger = logging.getLogger(__name__)


@dataclass
class InterpolationProblem:
    """
    插值问题

    Attributes:
        points: 两两分离的半单点
        targets: 每个点一个目标芽，阶数至少为 order
        order: 共同的截断阶 L
        dmax: 次数搜索上限，None 时取 settings.ncgerm_default_dmax
    """
    points: List[MatTuple]
    targets: List[Jet]
    order: int
    dmax: Optional[int] = None

    @property
    def g(self) -> int:
        return self.points[0].g

    @property
    def cap(self) -> int:
        return settings.ncgerm_default_dmax if self.dmax is None else self.dmax

    def truncated_targets(self) -> List[Jet]:
        return [t.truncate(self.order) for t in self.targets]


def degree_bound(points: Sequence[MatTuple], order: int) -> int:
    """
    存在性次数上界 ⌊2N log₂N⌋ + 4N − 4，N = max(L,1)(L+1)·g·Σ sᵢ³

    ⌊2N log₂N⌋ 用整数算：bit_length(N^{2N}) − 1。
    """
    g = points[0].g
    n = max(order, 1) * (order + 1) * g * sum(y.size ** 3 for y in points)
    return (n ** (2 * n)).bit_length() - 1 + 4 * n - 4


def validate_problem(prob: InterpolationProblem) -> None:
    """
    检查插值问题的前提

    Raises:
        PreconditionFailed: 目标不满足 LAC
        NotSemisimpleError / NotSeparatedError: 点不是分离的半单点
        DimensionMismatch: 点与目标个数或阶数不一致
    """
    if not prob.points:
        raise DimensionMismatch("插值问题至少需要一个点")
    if len(prob.points) != len(prob.targets):
        raise DimensionMismatch(f"{len(prob.points)} 个点但有 {len(prob.targets)} 个目标")
    for i, (y, target) in enumerate(zip(prob.points, prob.targets)):
        if target.basepoint != y:
            raise BasepointMismatch(f"第 {i} 个目标芽的基点与第 {i} 个点不同")
        if target.order < prob.order:
            raise DimensionMismatch(f"第 {i} 个目标芽只有 {target.order} 阶，需要 {prob.order} 阶")
        report = check_lac_truncated(y, target, prob.order, first_only=True)
        if not report.holds:
            logger.error(f"第 {i} 个目标不满足 LAC_{prob.order}: {report.violations[0].describe()}")
            raise PreconditionFailed(
                f"第 {i} 个目标芽不满足 {prob.order} 阶截断 LAC: {report.violations[0].describe()}"
            )
    if not are_separated(prob.points):
        logger.error("插值点不是两两分离的")
        raise NotSeparatedError("插值点不是两两分离的半单点")


def _search(prob: InterpolationProblem) -> Tuple[int, NcPoly]:
    validate_problem(prob)
    bound = degree_bound(prob.points, prob.order)
    cap = min(prob.cap, bound)
    table = WordJetTable(prob.points, prob.order)
    rhs = table.target_vector(prob.truncated_targets())

    for d in range(cap + 1):
        words = words_up_to(prob.g, d)
        table.ensure_degree(d)
        result = solve_linear(table.matrix(words), rhs)
        logger.info(f"次数 {d}: {len(words)} 个未知数, {len(rhs)} 个方程, "
                    f"{'相容' if result.consistent else '不相容'}")
        if result.consistent:
            return d, poly_from_coefficients(prob.g, words, result.solution[:, 0])

    if cap < bound:
        raise InfeasibleError(f"次数 ≤ {cap} 内无解（已达 Dmax 上限，可调大 Dmax）", cap_hit=True)
    raise InfeasibleError(f"次数 ≤ {bound} 内无解，前提条件可能不成立", cap_hit=False)


def interpolate(prob: InterpolationProblem) -> NcPoly:
    """
    求满足插值条件的多项式（最小次数，确定性特解）

    Raises:
        PreconditionFailed: LAC 或分离性不成立
        InfeasibleError: 上限内无解
    """
    return _search(prob)[1]


def min_degree(prob: InterpolationProblem) -> int:
    """使线性系统相容的最小次数"""
    return _search(prob)[0]


def verify_interpolant(p: NcPoly, prob: InterpolationProblem) -> bool:
    """p 在每个点处的 L 阶芽是否等于目标"""
    return all(
        jet_eval(p, y, prob.order) == t
        for y, t in zip(prob.points, prob.truncated_targets())
    )
