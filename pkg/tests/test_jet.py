# -*- coding: utf-8 -*-
"""
芽测试
======
求值、微分算子、芽乘法与求逆、块延拓、幂零判定与 Taylor 求值。

使用方法:
    pytest tests/test_jet.py
"""
import sys
from pathlib import Path

# 添加项目根目录到 sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from config import settings
from exactmath import (
    BasepointMismatch,
    DimensionMismatch,
    MatTuple,
    NotInvertibleError,
    ResourceGuardError,
    equal,
    identity,
    mat,
    to_scalar,
)
from freealg import NcPoly
from jet import (
    MultiMap,
    ampliate,
    check_tensor_size,
    constant_jet,
    differential,
    evaluate,
    is_jointly_nilpotent,
    jet_eval,
    jet_inverse,
    jet_mul,
    nilpotency_index,
    taylor_evaluate,
    unit_jet,
    zero_jet,
)


def x(j, g=2):
    return NcPoly.letter(g, j)


# ========== 求值 ==========

def test_evaluate_constant_is_identity(commutator_point):
    assert equal(evaluate(NcPoly.constant(2, 3), commutator_point), identity(2) * 3)


def test_evaluate_commutator(commutator_point):
    """[E₁₂, E₂₁] = E₁₁ − E₂₂"""
    value = evaluate(x(1) * x(2) - x(2) * x(1), commutator_point)
    assert equal(value, mat([[1, 0], [0, -1]]))


def test_evaluate_letter_mismatch(commutator_point):
    with pytest.raises(DimensionMismatch):
        evaluate(NcPoly.letter(3, 1), commutator_point)


# ========== 微分 ==========

def test_first_differential_is_directional_derivative(commutator_point):
    """Δ¹ (x₁x₂)(Z) = Z₁Y₂ + Y₁Z₂"""
    y = commutator_point
    z = MatTuple.of([[1, 2], [3, 4]], [[0, 1], [1, 0]])
    value = differential(x(1) * x(2), y, [z])
    assert equal(value, z[0].dot(y[1]) + y[0].dot(z[1]))


def test_jet_eval_matches_differential(commutator_point, random_poly):
    """jet_eval 的各阶映射与逐方向求值一致"""
    y = commutator_point
    p = random_poly(2, 3)
    jet = jet_eval(p, y, 2)
    z1 = MatTuple.of([[1, 0], [2, -1]], [[0, 3], [1, 1]])
    z2 = MatTuple.of([[0, 1], [1, 0]], [[2, 0], [0, -1]])
    assert equal(jet.value(), evaluate(p, y))
    assert equal(jet.maps[1].evaluate(z1), differential(p, y, [z1]))
    assert equal(jet.maps[2].evaluate(z1, z2), differential(p, y, [z1, z2]))


def test_jet_eval_matches_differential_on_random_polynomials(random_poly, random_point):
    """100 个次数 ≤ 3 的随机多项式，s ∈ {1, 2}"""
    for trial in range(100):
        s = 1 + trial % 2
        p = random_poly(2, 3)
        y = random_point(2, s)
        z1, z2 = random_point(2, s), random_point(2, s)
        order = 2 if trial < 10 else 1
        jet = jet_eval(p, y, order)
        assert equal(jet.value(), evaluate(p, y))
        assert equal(jet.maps[1].evaluate(z1), differential(p, y, [z1]))
        if order == 2:
            assert equal(jet.maps[2].evaluate(z1, z2), differential(p, y, [z1, z2]))


def test_jet_eval_thread_count_irrelevant(commutator_point, random_poly, monkeypatch):
    p = random_poly(2, 3)
    single = jet_eval(p, commutator_point, 2)
    monkeypatch.setattr(settings, "ncgerm_threads", 3)
    assert jet_eval(p, commutator_point, 2) == single


def test_tensor_guard(monkeypatch):
    monkeypatch.setattr(settings, "ncgerm_mem_cap", 100)
    with pytest.raises(ResourceGuardError):
        check_tensor_size(2, 2, 3)


# ========== 芽运算 ==========

def test_jet_mul_is_jet_of_product(commutator_point, random_poly):
    """jet(p)·jet(q) = jet(p·q)"""
    y = commutator_point
    for _ in range(10):
        p, q = random_poly(2, 2), random_poly(2, 2)
        assert jet_mul(jet_eval(p, y, 2), jet_eval(q, y, 2)) == jet_eval(p * q, y, 2)


def test_jet_mul_basepoint_mismatch(commutator_point):
    other = MatTuple.of([[1, 0], [0, 1]], [[0, 0], [0, 0]])
    with pytest.raises(BasepointMismatch):
        jet_mul(unit_jet(commutator_point, 1), unit_jet(other, 1))


def test_jet_inverse(commutator_point):
    """jet(c)·jet(c)⁻¹ = 1，c = x₁x₂ − x₂x₁ 在 Y 处可逆"""
    y = commutator_point
    a = jet_eval(x(1) * x(2) - x(2) * x(1), y, 2)
    assert jet_mul(a, jet_inverse(a)) == unit_jet(y, 2)
    assert jet_mul(jet_inverse(a), a) == unit_jet(y, 2)


def test_jet_inverse_singular(commutator_point):
    with pytest.raises(NotInvertibleError):
        jet_inverse(jet_eval(x(1), commutator_point, 1))


def test_constant_jet_is_zero_above_order_zero(commutator_point):
    jet = constant_jet(commutator_point, mat([[1, 2], [3, 4]]), 2)
    assert jet.maps[1].is_zero() and jet.maps[2].is_zero()


def test_germ_arithmetic_is_linear(commutator_point, random_poly):
    y = commutator_point
    p, q = random_poly(2, 2), random_poly(2, 2)
    c = to_scalar("3/2")
    assert jet_eval(p, y, 2) + jet_eval(q, y, 2) == jet_eval(p + q, y, 2)
    assert jet_eval(p, y, 2) - jet_eval(q, y, 2) == jet_eval(p - q, y, 2)
    assert jet_eval(p, y, 2).scale(c) == jet_eval(p * c, y, 2)
    assert (jet_eval(p, y, 2) - jet_eval(p, y, 2)) == zero_jet(y, 2)
    assert zero_jet(y, 2).is_zero()


# ========== 块延拓 ==========

def test_ampliate_matches_block_evaluation(commutator_point, random_poly):
    """(Δ¹p)_n(Z) 等于 ⊕ⁿY 处的 Δ¹p(Z)"""
    y = commutator_point
    p = random_poly(2, 2)
    f = jet_eval(p, y, 1).maps[1]
    big = ampliate(f, 2)
    z = MatTuple.of(
        [[1, 0, 2, 0], [0, 1, 0, -1], [1, 1, 0, 0], [0, 0, 1, 3]],
        [[0, 1, 0, 0], [2, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]],
    )
    assert equal(big.evaluate(z), differential(p, y.amplify(2), [z]))


@pytest.mark.parametrize("ell", [1, 2])
def test_ampliate_matches_jet_at_direct_sum(commutator_point, random_poly, ell):
    """Δ^ℓ 在 ⊕²Y 处等于 (Δ^ℓ 在 Y 处)₂"""
    y = commutator_point
    for _ in range(4 if ell == 1 else 2):
        p = random_poly(2, 3)
        small = jet_eval(p, y, ell).maps[ell]
        big = jet_eval(p, y.amplify(2), ell).maps[ell]
        assert ampliate(small, 2) == big


def test_ampliate_constant():
    f = MultiMap.constant(mat([[1, 2], [3, 4]]), 1)
    big = ampliate(f, 2)
    assert big.s == 4
    assert equal(big.tensor[:2, :2], mat([[1, 2], [3, 4]]))
    assert equal(big.tensor[2:, 2:], mat([[1, 2], [3, 4]]))
    assert big.tensor[0, 2] == 0


# ========== 幂零 ==========

def test_nilpotent_strictly_upper():
    z = MatTuple.of([[0, 1, 0], [0, 0, 1], [0, 0, 0]], [[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    assert is_jointly_nilpotent(z)
    assert nilpotency_index(z) == 3


def test_not_jointly_nilpotent(commutator_point):
    """E₁₂、E₂₁ 各自幂零，但 E₁₂E₂₁ = E₁₁ 不幂零"""
    assert not is_jointly_nilpotent(commutator_point)
    assert nilpotency_index(commutator_point) is None


def test_zero_point_nilpotency():
    assert nilpotency_index(MatTuple.zero(2, 2)) == 1


# ========== Taylor 求值 ==========

def test_taylor_sum_reproduces_polynomial(commutator_point, random_poly, random_point):
    """次数 ≤ L 的多项式：Σ_ℓ (f_ℓ)_n(X − ⊕ⁿY, …) = p(X)"""
    p = random_poly(2, 2)
    jet = jet_eval(p, commutator_point, 2)
    point = random_point(2, 4)
    assert equal(taylor_evaluate(jet, point), evaluate(p, point))


def test_taylor_on_nilpotent_neighbourhood_of_scalar_point(random_poly):
    """标量基点、幂零指数 k 的方向：高于 k−1 阶的项不起作用"""
    y = MatTuple.of([[2]], [[-1]])
    p = random_poly(2, 4)
    jet = jet_eval(p, y, 4)
    d = MatTuple.of([[0, 1, 0], [0, 0, 1], [0, 0, 0]], [[0, 0, 2], [0, 0, 0], [0, 0, 0]])
    point = y.amplify(3) + d
    assert nilpotency_index(d) == 3
    assert equal(taylor_evaluate(jet.truncate(2), point), evaluate(p, point))


def test_taylor_size_mismatch(commutator_point):
    with pytest.raises(DimensionMismatch):
        taylor_evaluate(unit_jet(commutator_point, 1), MatTuple.zero(2, 3))
