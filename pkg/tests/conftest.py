# -*- coding: utf-8 -*-
"""
共享夹具
========
随机多项式与矩阵点的工厂，全部由固定种子的 numpy.random.default_rng 驱动。
"""
import sys
from pathlib import Path

# 添加项目根目录到 sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from exactmath import MatTuple, mat, to_scalar
from freealg import NcPoly, words_up_to

DATA_DIR = Path(__file__).parent.parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def random_poly(rng):
    """random_poly(g, d)：次数 ≤ d、系数在 [−3, 3] 的随机 nc 多项式"""
    def factory(g: int, d: int) -> NcPoly:
        terms = {}
        for w in words_up_to(g, d):
            c = int(rng.integers(-3, 4))
            if c:
                terms[w] = to_scalar(c)
        return NcPoly(g, terms)
    return factory


@pytest.fixture
def random_point(rng):
    """random_point(g, s)：元素在 [−2, 2] 的随机 s×s 整数矩阵点"""
    def factory(g: int, s: int) -> MatTuple:
        return MatTuple(tuple(
            mat(rng.integers(-2, 3, size=(s, s)).tolist()) for _ in range(g)
        ))
    return factory


@pytest.fixture
def commutator_point() -> MatTuple:
    """Y = (E₁₂, E₂₁)"""
    return MatTuple.of([[0, 1], [0, 0]], [[0, 0], [1, 0]])
