# -*- coding: utf-8 -*-
"""
亚纯恒等式检验
==============
逐个矩阵阶数 n 判定表达式 m 是否"有定义处恒为零"：

- 在 trials 个整数随机点（元素在 [−B, B] 内均匀取值）上求值
- 某次求值无定义时重新抽样，至多 retry_cap 次
- 判定：存在有定义的非零值 → Nonzero（附见证点）；有定义的值全为零 → Zero；
  全部无定义 → AllUndefined

Nonzero 是确定的结论，Zero 是概率性结论。含级数原子时结论只对"模去 > D 次项"成立，
verdict 带 truncated 标记。symbolic=True 时，对 n ≤ 2、次数 ≤ 6 的无求逆表达式
改用生成矩阵精确判定。

知识点：
--------
1. 每个 (n, trial) 用 default_rng([seed, n, trial]) 独立播种，结果与线程数无关
2. trials 之间相互独立，交给线程池并行
"""

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))
from config import settings
from exactmath import Mat, MatTuple, PreconditionFailed, to_scalar
from freealg import PolyLike

from .evaluator import EvalOutcome, evaluate_expr, expand_to_poly
from .expr import MeroExpr, has_series, is_inversion_free, letter_count, series_order
from .generic import generic_evaluate

# 配置日志
logger = logging.getLogger(__name__)

ZERO_VERDICT = "Zero"
NONZERO_VERDICT = "Nonzero"
UNDEFINED_VERDICT = "AllUndefined"

SYMBOLIC_MAX_SIZE = 2
SYMBOLIC_MAX_DEGREE = 6


@dataclass
class SizeVerdict:
    """
    单个矩阵阶数上的判定

    Attributes:
        size: 矩阵阶数 n
        verdict: Zero / Nonzero / AllUndefined
        defined: 有定义的样本数
        undefined: 无定义的抽样次数（含重试）
        witness: Nonzero 时的见证点
        witness_value: 见证点上的取值
        truncated: 表达式含级数原子，结论模去高于 truncation_order 次的项
        truncation_order: 级数原子的截断阶
        symbolic: 是否由生成矩阵精确判定
    """
    size: int
    verdict: str
    defined: int = 0
    undefined: int = 0
    witness: Optional[MatTuple] = None
    witness_value: Optional[Mat] = None
    truncated: bool = False
    truncation_order: Optional[int] = None
    symbolic: bool = False


def random_point(rng: np.random.Generator, g: int, n: int, bound: int) -> MatTuple:
    """元素在 [−bound, bound] 内均匀取整数的 n 阶点"""
    raw = rng.integers(-bound, bound + 1, size=(g, n, n))
    comps = []
    for j in range(g):
        m = np.empty((n, n), dtype=object)
        for i in range(n):
            for k in range(n):
                m[i, k] = to_scalar(int(raw[j, i, k]))
        comps.append(m)
    return MatTuple(tuple(comps))


def check_seed(seed: int) -> None:
    """default_rng 只接受非负种子"""
    if seed < 0:
        raise PreconditionFailed(f"seed 必须为非负整数，得到 {seed}")


def _trial(m: MeroExpr, g: int, n: int, bound: int, seed: int, trial: int,
           retry_cap: int) -> Tuple[EvalOutcome, MatTuple, int]:
    """返回 (结果, 最后一个样本点, 无定义次数)"""
    rng = np.random.default_rng([seed, n, trial])
    misses = 0
    for _ in range(retry_cap + 1):
        x = random_point(rng, g, n, bound)
        outcome = evaluate_expr(m, x)
        if outcome.defined:
            return outcome, x, misses
        misses += 1
    return outcome, x, misses


def _symbolic_applicable(m: MeroExpr, n: int) -> Optional[PolyLike]:
    if n > SYMBOLIC_MAX_SIZE or not is_inversion_free(m) or has_series(m):
        return None
    p = expand_to_poly(m)
    return p if p.degree <= SYMBOLIC_MAX_DEGREE else None


def _symbolic_verdict(p: PolyLike, n: int) -> SizeVerdict:
    value = generic_evaluate(p, n)
    zero = all(not entry for entry in value.flat)
    return SizeVerdict(n, ZERO_VERDICT if zero else NONZERO_VERDICT, symbolic=True)


def identity_test(m: MeroExpr, sizes: Sequence[int], trials: int, seed: int,
                  bound: Optional[int] = None, symbolic: bool = False,
                  threads: Optional[int] = None) -> List[SizeVerdict]:
    """
    逐阶随机求值检验 m 是否为恒等式

    Args:
        m: 表达式
        sizes: 待检验的矩阵阶数
        trials: 每个阶数的样本数（≥ 1）
        seed: 随机种子
        bound: 随机整数的范围 B，默认 settings.ncgerm_sample_bound
        symbolic: 对小规模无求逆表达式使用生成矩阵精确判定
        threads: 线程数，默认 settings.ncgerm_threads

    Returns:
        每个阶数一条 SizeVerdict

    Raises:
        PreconditionFailed: trials < 1 或 seed < 0
    """
    if trials < 1:
        raise PreconditionFailed(f"trials 必须至少为 1，得到 {trials}")
    check_seed(seed)
    bound = settings.ncgerm_sample_bound if bound is None else bound
    threads = max(1, settings.ncgerm_threads if threads is None else threads)
    retry_cap = settings.ncgerm_retry_cap
    g = letter_count(m) or 1
    truncated = has_series(m)
    order = series_order(m)

    verdicts = []
    for n in sizes:
        poly = _symbolic_applicable(m, n) if symbolic else None
        if poly is not None:
            verdict = _symbolic_verdict(poly, n)
        else:
            args = [(m, g, n, bound, seed, t, retry_cap) for t in range(trials)]
            if threads == 1:
                results = [_trial(*a) for a in args]
            else:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(lambda a: _trial(*a), args))
            verdict = _collect(n, results)
        verdict.truncated = truncated
        verdict.truncation_order = order
        if truncated:
            logger.warning(f"n={n}: 表达式含级数原子，结论只对模去 > {order} 次项成立")
        logger.info(f"恒等式检验 n={n}: {verdict.verdict}（有定义 {verdict.defined}，"
                    f"无定义 {verdict.undefined}{'，符号判定' if verdict.symbolic else ''}）")
        verdicts.append(verdict)
    return verdicts


def _collect(n: int, results: List[Tuple[EvalOutcome, MatTuple, int]]) -> SizeVerdict:
    verdict = SizeVerdict(n, UNDEFINED_VERDICT)
    for outcome, x, misses in results:
        verdict.undefined += misses
        if not outcome.defined:
            continue
        verdict.defined += 1
        if verdict.witness is None and not outcome.is_zero():
            verdict.witness = x
            verdict.witness_value = outcome.value
    if verdict.witness is not None:
        verdict.verdict = NONZERO_VERDICT
    elif verdict.defined:
        verdict.verdict = ZERO_VERDICT
    return verdict
