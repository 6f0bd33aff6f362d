# -*- coding: utf-8 -*-
"""
文件格式测试
============
pydantic 模型校验、1 起下标的转换、确定性 JSON 输出。

使用方法:
    pytest tests/test_formats.py
"""
import json
import sys
from pathlib import Path

# 添加项目根目录到 sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from sympy import QQ

from exactmath import FormatError
from freealg import NcPoly, NcSeries
from formats import (
    JetModel,
    MatModel,
    MatTupleModel,
    MultiMapModel,
    PolyModel,
    ProblemModel,
    dump_json,
    jet_from_model,
    jet_to_model,
    load_model,
    mat_from_model,
    multimap_from_model,
    multimap_to_model,
    parse_model,
    point_from_model,
    point_to_model,
    poly_from_model,
    poly_to_model,
)
from jet import MultiMap, jet_eval

POINT_JSON = {
    "size": 2,
    "components": [
        {"rows": 2, "cols": 2, "entries": [["0", "1"], ["0", "0"]]},
        {"rows": 2, "cols": 2, "entries": [["0", "0"], ["1", "0"]]},
    ],
}


# ========== 标量与矩阵 ==========

def test_mat_model_normalizes_scalars():
    m = MatModel(rows=1, cols=3, entries=[[3, "2/4", "-1/3"]])
    assert m.entries == [["3/1", "1/2", "-1/3"]]
    assert mat_from_model(m)[0, 1] == QQ(1, 2)


@pytest.mark.parametrize("entry", ["1/0", "abc", "1.5"])
def test_bad_scalar_is_format_error(entry):
    with pytest.raises(FormatError):
        parse_model(json.dumps({"rows": 1, "cols": 1, "entries": [[entry]]}), MatModel)


def test_shape_mismatch_is_format_error():
    with pytest.raises(FormatError):
        parse_model('{"rows": 2, "cols": 1, "entries": [["1"]]}', MatModel)


def test_invalid_json_is_format_error():
    with pytest.raises(FormatError):
        parse_model("{rows: 1", MatModel)


def test_missing_file_is_format_error(tmp_path):
    with pytest.raises(FormatError):
        load_model(tmp_path / "missing.json", MatModel)


def test_point_model(commutator_point):
    point = point_from_model(MatTupleModel.model_validate(POINT_JSON))
    assert point == commutator_point


def test_point_components_must_be_square():
    bad = {"size": 2, "components": [{"rows": 1, "cols": 2, "entries": [["0", "1"]]}]}
    with pytest.raises(FormatError):
        parse_model(json.dumps(bad), MatTupleModel)


# ========== 多项式 ==========

def test_poly_file(data_dir):
    p = poly_from_model(load_model(data_dir / "commutator_poly.json", PolyModel))
    x1, x2 = NcPoly.letter(2, 1), NcPoly.letter(2, 2)
    assert p == x1 * x2 - x2 * x1


def test_poly_duplicate_words_are_summed():
    model = PolyModel(g=1, terms=[{"word": [1], "coeff": "1/2"}, {"word": [1], "coeff": "1/2"}])
    assert poly_from_model(model) == NcPoly.letter(1, 1)


def test_poly_letter_out_of_range():
    with pytest.raises(FormatError):
        poly_from_model(PolyModel(g=1, terms=[{"word": [2], "coeff": "1"}]))


def test_series_model():
    model = PolyModel(g=1, terms=[{"word": [1, 1], "coeff": "1"}], order=2)
    s = poly_from_model(model)
    assert isinstance(s, NcSeries) and s.order == 2
    assert poly_to_model(s).order == 2
    with pytest.raises(FormatError):
        poly_from_model(PolyModel(g=1, terms=[{"word": [1, 1, 1], "coeff": "1"}], order=2))


# ========== 多重线性映射与芽 ==========

def test_multimap_uses_in_alias_and_one_based_indices():
    """[j,p,q] = [2,1,2] 对应基下标 1·4 + 0·2 + 1 = 5"""
    raw = {"s": 2, "g": 2, "arity": 1, "entries": [{"in": [[2, 1, 2]], "out": [2, 1], "coeff": "3"}]}
    f = multimap_from_model(MultiMapModel.model_validate(raw))
    assert f.tensor[5, 1, 0] == 3
    dumped = multimap_to_model(f).model_dump(by_alias=True)
    assert dumped["entries"][0]["in"] == [[2, 1, 2]]
    assert dumped["entries"][0]["out"] == [2, 1]


def test_multimap_index_out_of_range():
    raw = {"s": 2, "g": 2, "arity": 1, "entries": [{"in": [[3, 1, 1]], "out": [1, 1], "coeff": "1"}]}
    with pytest.raises(FormatError):
        parse_model(json.dumps(raw), MultiMapModel)


def test_multimap_arity_checked():
    raw = {"s": 1, "g": 1, "arity": 2, "entries": [{"in": [[1, 1, 1]], "out": [1, 1], "coeff": "1"}]}
    with pytest.raises(FormatError):
        parse_model(json.dumps(raw), MultiMapModel)


def test_jet_model(commutator_point):
    jet = jet_eval(NcPoly.letter(2, 1) * NcPoly.letter(2, 2), commutator_point, 2)
    assert jet_from_model(jet_to_model(jet)) == jet


def test_jet_model_rejects_wrong_arity(commutator_point):
    bad = JetModel(Y=point_to_model(commutator_point), maps=[multimap_to_model(MultiMap.zero(2, 2, 1))])
    with pytest.raises(FormatError):
        jet_from_model(bad)


# ========== 问题文件 ==========

def test_problem_file(data_dir):
    model = load_model(data_dir / "example_L1.json", ProblemModel)
    assert model.L == 1 and model.Dmax == 12
    assert model.target_expr.startswith("(x1*x2")


def test_problem_needs_exactly_one_target_source():
    base = {"points": [POINT_JSON], "L": 0}
    with pytest.raises(FormatError):
        parse_model(json.dumps(base), ProblemModel)
    both = dict(base, targets=[], target_expr="x1")
    with pytest.raises(FormatError):
        parse_model(json.dumps(both), ProblemModel)


# ========== 输出 ==========

def test_dump_json_is_sorted_and_stable():
    text = dump_json({"b": 1, "a": [1, 2]})
    assert text == dump_json({"a": [1, 2], "b": 1})
    assert text.index('"a"') < text.index('"b"')


def test_dump_json_omits_none():
    text = dump_json(PolyModel(g=1, terms=[]))
    assert "order" not in json.loads(text)
