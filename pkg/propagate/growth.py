# -*- coding: utf-8 -*-
"""
增长界递推
==========
最小传播的系数规模由二元数列 c_{ℓ,m}（0 ≤ m ≤ ℓ）控制：

    c_{0,0} = 1,  c_{ℓ,ℓ} = 0 (ℓ > 0),  c_{ℓ,−1} = c_{ℓ,0},  c_{0,−1} = 1
    c_{ℓ,m} = β·max{ c_{ℓ,m+1}, α(c_{ℓ−1,m−1} + c_{ℓ−1,m}) }

β ≥ 2 时有闭式（D(p) = (p − p(0))/t 为多项式的后移）：

    c_{ℓ,m} = 2α^ℓβ^ℓ · D^{m−1}((t+1)^{ℓ−2})|_{t=β}     (m > 0)
    c_{ℓ,0} = 2α^ℓβ^{ℓ+1}(β+1)^{ℓ−2}

闭式的证明依赖两条二项式恒等式，binomial_identities_hold 逐项验证。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from sympy import Poly, QQ, Symbol, binomial

from exactmath import ONE, PreconditionFailed, Scalar, ZERO, format_scalar, to_scalar

# 配置日志
logger = logging.getLogger(__name__)

T = Symbol("t")


@dataclass
class GrowthSeq:
    """
    c_{ℓ,m} 数表

    Attributes:
        alpha: α > 0
        beta: β > 0
        lmax: 最大阶数
        table: (ℓ, m) ↦ c_{ℓ,m}，m 从 −1 到 ℓ
    """
    alpha: Scalar
    beta: Scalar
    lmax: int
    table: Dict[Tuple[int, int], Scalar] = field(default_factory=dict)

    def value(self, ell: int, m: int) -> Scalar:
        return self.table[(ell, m)]

    def rows(self) -> List[Tuple[int, int, str]]:
        """CSV 行 (ℓ, m, 值)，不含 m = −1 的辅助列"""
        return [
            (ell, m, format_scalar(self.table[(ell, m)]))
            for ell in range(self.lmax + 1)
            for m in range(ell + 1)
        ]


def growth_bound(alpha, beta, lmax: int) -> GrowthSeq:
    """
    按递推式填表

    Args:
        alpha: α > 0（整数、"p/q" 字符串或有理数）
        beta: β > 0
        lmax: 最大阶数

    Raises:
        PreconditionFailed: α 或 β 不是正数
    """
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    if alpha <= 0 or beta <= 0:
        raise PreconditionFailed(f"α, β 必须为正: α={format_scalar(alpha)}, β={format_scalar(beta)}")

    seq = GrowthSeq(alpha, beta, lmax)
    c = seq.table
    c[(0, 0)] = ONE
    c[(0, -1)] = ONE
    for ell in range(1, lmax + 1):
        c[(ell, ell)] = ZERO
        for m in range(ell - 1, -1, -1):
            c[(ell, m)] = beta * max(c[(ell, m + 1)], alpha * (c[(ell - 1, m - 1)] + c[(ell - 1, m)]))
        c[(ell, -1)] = c[(ell, 0)]
    logger.debug(f"增长表 α={format_scalar(alpha)}, β={format_scalar(beta)} 填到 ℓ={lmax}")
    return seq


# ========== 闭式 ==========

def shifted_power(base: int, exponent: int) -> Poly:
    """(t + base)^exponent；指数为负时按零多项式处理"""
    if exponent < 0:
        return Poly(0, T, domain=QQ)
    return Poly((T + base) ** exponent, T, domain=QQ)


def backward_shift(p: Poly, times: int = 1) -> Poly:
    """D^times(p)，D(p) = (p − p(0))/t"""
    coeffs = p.all_coeffs()
    for _ in range(times):
        coeffs = coeffs[:-1]
    if not coeffs:
        return Poly(0, T, domain=QQ)
    return Poly(coeffs, T, domain=QQ)


def _horner(p: Poly, x: Scalar) -> Scalar:
    acc = ZERO
    for coeff in p.all_coeffs():
        acc = acc * x + QQ.from_sympy(coeff)
    return acc


def closed_form(alpha, beta, ell: int, m: int) -> Scalar:
    """c_{ℓ,m} 的闭式值（ℓ ≥ 2, 0 ≤ m ≤ ℓ）"""
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    if ell < 2 or not 0 <= m <= ell:
        raise PreconditionFailed(f"闭式只对 ℓ ≥ 2, 0 ≤ m ≤ ℓ 给出: ℓ={ell}, m={m}")
    two = to_scalar(2)
    if m == 0:
        return two * alpha ** ell * beta ** (ell + 1) * (beta + ONE) ** (ell - 2)
    shifted = backward_shift(shifted_power(1, ell - 2), m - 1)
    return two * alpha ** ell * beta ** ell * _horner(shifted, beta)


def binomial_identities_hold(lmax: int) -> bool:
    """
    对 ℓ, m ≤ lmax 精确验证

        D^{m−1}((t+1)^{ℓ−1}) + D^m((t+1)^{ℓ−1}) = D^m((t+1)^ℓ)     (ℓ, m ≥ 1)
        D^m((t+1)^ℓ) − t·D^{m+1}((t+1)^ℓ) = C(ℓ, m)
    """
    t_poly = Poly(T, T, domain=QQ)
    for ell in range(lmax + 1):
        power = shifted_power(1, ell)
        lower = shifted_power(1, ell - 1)
        for m in range(lmax + 1):
            if ell >= 1 and m >= 1:
                if backward_shift(lower, m - 1) + backward_shift(lower, m) != backward_shift(power, m):
                    logger.error(f"第一条二项式恒等式在 ℓ={ell}, m={m} 处不成立")
                    return False
            rest = backward_shift(power, m) - t_poly * backward_shift(power, m + 1)
            if rest != Poly(binomial(ell, m), T, domain=QQ):
                logger.error(f"第二条二项式恒等式在 ℓ={ell}, m={m} 处不成立")
                return False
    return True


def closed_form_matches(seq: GrowthSeq) -> bool:
    """β ≥ 2 时数表与闭式逐项相等（ℓ ≥ 2）"""
    return all(
        seq.value(ell, m) == closed_form(seq.alpha, seq.beta, ell, m)
        for ell in range(2, seq.lmax + 1)
        for m in range(ell + 1)
    )
