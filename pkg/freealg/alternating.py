# -*- coding: utf-8 -*-
"""
交错多项式 h_s
==============
h_s = Σ_{π∈S_{s+1}} sign(π) x₁^{π(1)−1} x₂ x₁^{π(2)−1} x₂ ⋯ x₂ x₁^{π(s+1)−1}

两字母上的齐次多项式，次数 s(s+1)/2 + s，共 (s+1)! 项。
它在 M_s 的所有点上为零，但在 M_{s+1} 的一般点上不为零。
"""

from itertools import permutations

from sympy.combinatorics import Permutation

from exactmath import DimensionMismatch

from .polynomial import NcPoly


def alternating_poly(s: int) -> NcPoly:
    """
    构造 h_s

    Args:
        s: 正整数

    Returns:
        两字母 nc 多项式
    """
    if s < 1:
        raise DimensionMismatch(f"s 必须为正整数，得到 {s}")
    terms = {}
    for perm in permutations(range(s + 1)):
        word = []
        for k, exponent in enumerate(perm):
            if k:
                word.append(2)
            word.extend([1] * exponent)
        terms[tuple(word)] = Permutation(list(perm)).signature()
    return NcPoly(2, terms)
