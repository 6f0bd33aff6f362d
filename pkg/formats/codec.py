# -*- coding: utf-8 -*-
"""
领域对象与文件格式的转换
========================
读：JSON 文本 → pydantic 模型 → 领域对象
写：领域对象 → pydantic 模型 → 排序键的 JSON 文本

JSON 解析错误与模型校验错误统一转换为 FormatError，CLI 据此返回退出码 3。
"""

import json
import logging
from pathlib import Path
from typing import List, Sequence, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from exactmath import FormatError, Mat, MatTuple, format_scalar, to_scalar, zeros
from freealg import NcPoly, NcSeries, PolyLike
from jet import Jet, MultiMap

from .schemas import (
    AlgebraBasisModel,
    EntryModel,
    JetModel,
    LacReportModel,
    MatModel,
    MatTupleModel,
    MultiMapModel,
    PolyModel,
    RankEstimateModel,
    SizeVerdictModel,
    TermModel,
    ViolationModel,
)

# 配置日志
logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


# ========== 读写 ==========

def parse_model(text: str, model: Type[M], source: str = "<input>") -> M:
    """
    解析 JSON 文本并校验

    Raises:
        FormatError: JSON 语法错误或结构不符合模型
    """
    try:
        return model.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        logger.error(f"{source}: JSON 解析失败: {e}")
        raise FormatError(f"{source}: JSON 解析失败: {e}") from e
    except ValidationError as e:
        logger.error(f"{source}: 格式校验失败: {e}")
        raise FormatError(f"{source}: 格式校验失败: {e.errors()[0]['msg']}") from e


def load_model(path: Union[str, Path], model: Type[M]) -> M:
    """读取并校验 JSON 文件"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"无法读取文件 {path}: {e}") from e
    return parse_model(text, model, str(path))


def dump_json(data) -> str:
    """确定性输出：键排序、固定缩进"""
    if isinstance(data, BaseModel):
        data = data.model_dump(by_alias=True, exclude_none=True)
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2)


# ========== 矩阵与点 ==========

def mat_from_model(m: MatModel) -> Mat:
    out = zeros((m.rows, m.cols))
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            out[i, j] = to_scalar(x)
    return out


def mat_to_model(m: Mat) -> MatModel:
    rows, cols = m.shape
    return MatModel(rows=rows, cols=cols, entries=[[format_scalar(x) for x in row] for row in m])


def point_from_model(m: MatTupleModel) -> MatTuple:
    return MatTuple(tuple(mat_from_model(c) for c in m.components))


def point_to_model(x: MatTuple) -> MatTupleModel:
    return MatTupleModel(size=x.size, components=[mat_to_model(c) for c in x])


# ========== 多项式 ==========

def poly_from_model(m: PolyModel) -> PolyLike:
    """
    Raises:
        FormatError: 字母越界或词长超过截断阶
    """
    terms = {}
    for t in m.terms:
        word = tuple(t.word)
        terms[word] = terms.get(word, 0) + to_scalar(t.coeff)
    try:
        if m.order is None:
            return NcPoly(m.g, terms)
        return NcSeries(m.g, m.order, terms)
    except ValueError as e:
        raise FormatError(f"多项式文件不合法: {e}") from e


def poly_to_model(p: PolyLike) -> PolyModel:
    return PolyModel(
        g=p.g,
        terms=[TermModel(word=list(w), coeff=format_scalar(c)) for w, c in p.items()],
        order=p.order if isinstance(p, NcSeries) else None,
    )


# ========== 多重线性映射与芽 ==========

def _flat_index(triple: Sequence[int], s: int) -> int:
    j, p, q = triple
    return (j - 1) * s * s + (p - 1) * s + (q - 1)


def _triple(index: int, s: int) -> List[int]:
    j, rest = divmod(index, s * s)
    p, q = divmod(rest, s)
    return [j + 1, p + 1, q + 1]


def multimap_from_model(m: MultiMapModel) -> MultiMap:
    f = MultiMap(m.s, m.g, m.arity)
    for e in m.entries:
        key = tuple(_flat_index(t, m.s) for t in e.inputs) + (e.out[0] - 1, e.out[1] - 1)
        f.tensor[key] = f.tensor[key] + to_scalar(e.coeff)
    return f


def multimap_to_model(f: MultiMap) -> MultiMapModel:
    entries = [
        EntryModel(
            inputs=[_triple(i, f.s) for i in index],
            out=[out[0] + 1, out[1] + 1],
            coeff=format_scalar(c),
        )
        for index, out, c in f.nonzero_entries()
    ]
    return MultiMapModel(s=f.s, g=f.g, arity=f.arity, entries=entries)


def jet_from_model(m: JetModel) -> Jet:
    """
    Raises:
        FormatError: 映射的 (s, g, ℓ) 与基点不符
    """
    y = point_from_model(m.Y)
    try:
        return Jet(y, tuple(multimap_from_model(f) for f in m.maps))
    except ValueError as e:
        raise FormatError(f"芽文件不合法: {e}") from e


def jet_to_model(jet: Jet) -> JetModel:
    return JetModel(Y=point_to_model(jet.basepoint), maps=[multimap_to_model(f) for f in jet.maps])


# ========== 输出记录 ==========

def algebra_to_model(algebra) -> AlgebraBasisModel:
    table = [[[format_scalar(x) for x in cell] for cell in row] for row in algebra.table]
    return AlgebraBasisModel(s=algebra.s, basis=[mat_to_model(b) for b in algebra.basis], table=table)


def lac_report_to_model(report) -> LacReportModel:
    return LacReportModel(
        holds=report.holds,
        checked=report.checked,
        violations=[
            ViolationModel(
                tag=v.tag, level=v.level, slot=v.slot, witness=mat_to_model(v.witness),
                deviation=format_scalar(v.deviation), location=[int(i) for i in v.location],
            )
            for v in report.violations
        ],
    )


def verdict_to_model(v) -> SizeVerdictModel:
    return SizeVerdictModel(
        size=v.size, verdict=v.verdict, defined=v.defined, undefined=v.undefined,
        witness=point_to_model(v.witness) if v.witness is not None else None,
        witness_value=mat_to_model(v.witness_value) if v.witness_value is not None else None,
        truncated=v.truncated, truncation_order=v.truncation_order, symbolic=v.symbolic,
    )


def rank_to_model(r) -> RankEstimateModel:
    return RankEstimateModel(
        ratio=format_scalar(r.ratio), size=r.size, rank=r.rank, rows=r.rows, cols=r.cols,
        samples=r.samples, full=r.full,
        witness=point_to_model(r.witness) if r.witness is not None else None,
    )
