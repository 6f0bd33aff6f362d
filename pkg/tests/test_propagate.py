# -*- coding: utf-8 -*-
"""
最小传播测试
============
传播结果满足 LAC 与最小性、唯一性、与坐标顺序无关；代数嵌入；增长界；非单射例子。

使用方法:
    pytest tests/test_propagate.py
"""
import sys
from pathlib import Path

# 添加项目根目录到 sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from sympy import QQ

from exactmath import (
    MatTuple,
    NotInAlgebraError,
    NotSemisimpleError,
    NotSeparatedError,
    PreconditionFailed,
    equal,
    identity,
    mat,
)
from freealg import NcPoly
from jet import constant_jet, jet_eval, jet_mul, unit_jet
from lac import check_lac_truncated
from propagate import (
    PropagationConfig,
    backward_shift,
    binomial_identities_hold,
    closed_form,
    closed_form_matches,
    embed_algebra,
    growth_bound,
    minimality_defect,
    propagate_minimal,
    separating_example,
    shifted_power,
    solve_propagation_level,
    vanishes_on_block_diagonal,
)
from structure import bimodule_ops, direct_sum_points

E12 = mat([[0, 1], [0, 0]])
E21 = mat([[0, 0], [1, 0]])


@pytest.fixture
def propagated(commutator_point, random_poly):
    """多项式一阶芽传播到 3 阶"""
    y = commutator_point
    ops = bimodule_ops(y)
    seed = jet_eval(random_poly(2, 3), y, 1)
    return y, ops, seed, propagate_minimal(PropagationConfig(y, ops, seed, 3))


# ========== 最小传播 ==========

def test_propagation_extends_seed(propagated):
    y, ops, seed, jet = propagated
    assert jet.order == 3
    assert jet.truncate(1) == seed


def test_propagation_satisfies_lac(propagated):
    y, ops, seed, jet = propagated
    assert check_lac_truncated(y, jet).holds


def test_propagation_is_minimal(propagated):
    """新增各阶在 (ker π)^ℓ 上为零"""
    y, ops, seed, jet = propagated
    for ell in (2, 3):
        assert minimality_defect(jet.maps[ell], ops).is_zero()


def test_propagation_level_is_unique(propagated):
    """把 f₂ 当未知数直接求解：解唯一且等于递推结果"""
    y, ops, seed, jet = propagated
    solution, kernel_dim = solve_propagation_level(y, ops, jet.maps[1], 2)
    assert kernel_dim == 0
    assert solution == jet.maps[2]


def test_propagation_independent_of_basis_order(propagated):
    y, ops, seed, jet = propagated
    reordered = propagate_minimal(PropagationConfig(y, ops, seed, 3), basis_permutation=list(reversed(range(8))))
    assert reordered == jet


def test_propagation_at_reducible_point(commutator_point):
    """C(Y) 二维时传播结果仍满足 LAC"""
    y = direct_sum_points([commutator_point, MatTuple.zero(2, 1)])
    ops = bimodule_ops(y)
    seed = jet_eval(NcPoly.letter(2, 1) * NcPoly.letter(2, 2), y, 0)
    jet = propagate_minimal(PropagationConfig(y, ops, seed, 2))
    assert check_lac_truncated(y, jet).holds
    assert minimality_defect(jet.maps[2], ops).is_zero()


def test_propagation_rejects_non_lac_seed(commutator_point):
    y = commutator_point
    seed = constant_jet(y, mat([[1, 0], [0, 0]]), 1)
    with pytest.raises(PreconditionFailed):
        propagate_minimal(PropagationConfig(y, bimodule_ops(y), seed, 2))


def test_propagation_rejects_lower_target(commutator_point):
    y = commutator_point
    seed = jet_eval(NcPoly.letter(2, 1), y, 2)
    with pytest.raises(PreconditionFailed):
        propagate_minimal(PropagationConfig(y, bimodule_ops(y), seed, 1))


# ========== 代数嵌入 ==========

def test_embed_nilpotent_element(commutator_point):
    """E₁₂ 的传播 f 非零且 f·f = 0"""
    (f,) = embed_algebra(commutator_point, [E12], 4)
    assert equal(f.value(), E12)
    assert not f.is_zero()
    assert jet_mul(f, f).is_zero()


def test_embed_unit_is_unit_jet(commutator_point):
    (one,) = embed_algebra(commutator_point, [identity(2)], 3)
    assert one == unit_jet(commutator_point, 3)


def test_embed_is_multiplicative_and_additive(commutator_point):
    e11 = E12.dot(E21)
    f12, f21, f11, fsum = embed_algebra(commutator_point, [E12, E21, e11, E12 + E21], 2)
    assert jet_mul(f12, f21) == f11
    assert f12 + f21 == fsum


def test_embed_rejects_element_outside_algebra():
    y = MatTuple.of([[1, 0], [0, 2]], [[3, 0], [0, 1]])
    with pytest.raises(NotInAlgebraError):
        embed_algebra(y, [E12], 2)


def test_embed_requires_semisimple():
    y = MatTuple.of([[0, 1], [0, 0]])
    with pytest.raises(NotSemisimpleError):
        embed_algebra(y, [E12], 1)


# ========== 增长界 ==========

def test_growth_small_values():
    """c₁,₀ = 2αβ，c₂,₁ = 2α²β²，α = β = 2 时 c₂,₀ = 64"""
    seq = growth_bound(2, 3, 4)
    assert seq.value(1, 0) == QQ(12)
    assert seq.value(2, 1) == QQ(2 * 4 * 9)
    assert growth_bound(2, 2, 2).value(2, 0) == QQ(64)
    assert seq.value(3, 3) == 0


@pytest.mark.parametrize("alpha", [1, 2])
@pytest.mark.parametrize("beta", [2, 3, 5])
def test_growth_matches_closed_form(alpha, beta):
    assert closed_form_matches(growth_bound(alpha, beta, 12))


def test_growth_accepts_fractions():
    seq = growth_bound("1/2", "5/2", 6)
    assert closed_form_matches(seq)
    assert seq.value(1, 0) == QQ(5, 2)


def test_binomial_identities():
    assert binomial_identities_hold(12)


def test_backward_shift():
    """D((t+1)²) = t + 2，D³((t+1)²) = 0"""
    p = shifted_power(1, 2)
    assert backward_shift(p) == shifted_power(2, 1)
    assert backward_shift(p, 3).is_zero


def test_closed_form_domain():
    with pytest.raises(PreconditionFailed):
        closed_form(1, 2, 1, 0)


@pytest.mark.parametrize("alpha,beta", [(0, 2), (1, -1)])
def test_growth_rejects_non_positive(alpha, beta):
    with pytest.raises(PreconditionFailed):
        growth_bound(alpha, beta, 3)


def test_growth_rows_layout():
    rows = growth_bound(1, 2, 2).rows()
    assert rows[0] == (0, 0, "1/1")
    assert len(rows) == 1 + 2 + 3


# ========== 非单射例子 ==========

def test_separating_example(commutator_point):
    """(E₁₂, E₂₁) ⊕ (0, 0)：f₁ ≠ 0，但在块对角方向上各阶为零"""
    zero = MatTuple.zero(2, 1)
    jet = separating_example(commutator_point, zero, 3)
    assert jet.order == 3
    assert not jet.maps[1].is_zero()
    assert vanishes_on_block_diagonal(jet, [2, 1])
    assert check_lac_truncated(jet.basepoint, jet).holds


def test_separating_example_requires_separated(commutator_point):
    with pytest.raises(NotSeparatedError):
        separating_example(commutator_point, commutator_point, 2)
