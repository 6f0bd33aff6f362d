# -*- coding: utf-8 -*-
"""
LAC 检查测试
============
多项式的芽满足截断 LAC；人为构造的序列给出带标签的违反记录；Y-容许性。

使用方法:
    pytest tests/test_lac.py
"""
import sys
from pathlib import Path

# 添加项目根目录到 sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from exactmath import BasepointMismatch, DimensionMismatch, MatTuple, mat, zeros
from freealg import NcPoly
from jet import Jet, MultiMap, constant_jet, jet_eval
from lac import admissibility_defects, check_admissible, check_lac_truncated
from structure import bimodule_ops


def _sigma_component_map(y, ops):
    """f(Z) = σ(Z) 的第一个分量：在 [M_s, Y] 上为零"""
    f = MultiMap.zero(y.size, y.g, 1)
    for a in range(ops.n):
        f.tensor[a] = MatTuple.from_vec(ops.sigma[:, a], y.g, y.size)[0]
    return f


# ========== 多项式的芽 ==========

@pytest.mark.parametrize("order", [0, 1, 2])
def test_polynomial_jets_satisfy_lac(commutator_point, random_poly, order):
    jet = jet_eval(random_poly(2, 3), commutator_point, order)
    report = check_lac_truncated(commutator_point, jet)
    assert report.holds
    assert report.checked > 0


def test_polynomial_jet_at_reducible_point(random_poly):
    """C(Y) 非平凡时模条件也成立"""
    y = MatTuple.of([[1, 0, 0], [0, 1, 0], [0, 0, 2]], [[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    jet = jet_eval(random_poly(2, 3), y, 1)
    assert check_lac_truncated(y, jet).holds


def test_lower_order_check_of_longer_jet(commutator_point, random_poly):
    jet = jet_eval(random_poly(2, 2), commutator_point, 2)
    assert check_lac_truncated(commutator_point, jet, order=1).holds


# ========== 违反记录 ==========

def test_constant_jet_violates_chain_rule(commutator_point):
    """f₀ = E₁₁、f₁ = 0：f₁([S,Y]) = S f₀ − f₀ S 不成立"""
    jet = constant_jet(commutator_point, mat([[1, 0], [0, 0]]), 1)
    report = check_lac_truncated(commutator_point, jet)
    assert not report.holds
    assert {v.tag for v in report.violations} == {"last"}
    assert all(v.level == 1 for v in report.violations)


def test_first_only_stops_early(commutator_point):
    jet = constant_jet(commutator_point, mat([[1, 0], [0, 0]]), 1)
    report = check_lac_truncated(commutator_point, jet, first_only=True)
    assert len(report.violations) == 1


def test_order_zero_commute_violation():
    """L = 0：f₀ 必须与 C(Y) 交换"""
    y = MatTuple.of([[1, 0], [0, 2]])
    jet = constant_jet(y, mat([[0, 1], [0, 0]]), 0)
    report = check_lac_truncated(y, jet)
    assert not report.holds
    assert report.violations[0].tag == "commute"


def test_perturbed_top_map_fails_at_top_level(commutator_point, random_poly):
    """给 f₂ 加上常值张量后只在 ℓ = 2 出现违反"""
    jet = jet_eval(random_poly(2, 3), commutator_point, 2)
    bump = zeros((8, 8, 2, 2))
    bump[..., 0, 0] = 1
    broken = jet.maps[2] + MultiMap(2, 2, 2, bump)
    report = check_lac_truncated(commutator_point, Jet(commutator_point, jet.maps[:2] + (broken,)))
    tags = {v.tag for v in report.violations}
    assert not report.holds
    assert tags <= {"first", "middle", "last", "module-left", "module-middle", "module-right"}
    assert all(v.level == 2 for v in report.violations)


def test_basepoint_mismatch(commutator_point):
    other = MatTuple.zero(2, 2)
    with pytest.raises(BasepointMismatch):
        check_lac_truncated(other, jet_eval(NcPoly.letter(2, 1), commutator_point, 1))


def test_order_too_high(commutator_point):
    with pytest.raises(DimensionMismatch):
        check_lac_truncated(commutator_point, jet_eval(NcPoly.letter(2, 1), commutator_point, 1), order=2)


# ========== 容许性 ==========

def test_sigma_component_is_admissible(commutator_point):
    ops = bimodule_ops(commutator_point)
    f = _sigma_component_map(commutator_point, ops)
    assert check_admissible(commutator_point, f)
    assert admissibility_defects(commutator_point, f, ops) == []


def test_first_differential_is_not_admissible(commutator_point):
    """Δ¹x₁ 在 [M_s, Y] 上不为零"""
    ops = bimodule_ops(commutator_point)
    f = jet_eval(NcPoly.letter(2, 1), commutator_point, 1).maps[1]
    assert not check_admissible(commutator_point, f)
    assert admissibility_defects(commutator_point, f, ops)
