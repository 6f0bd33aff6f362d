# -*- coding: utf-8 -*-
"""
文件格式模型
============
所有 JSON 输入输出的 pydantic 模型。标量写成 "p/q" 字符串（"3" 是 "3/1" 的简写，
输入也接受整数），下标一律从 1 开始。

知识点：
--------
1. field_validator 在字段级别检查分数字符串，model_validator 检查形状等跨字段约束
2. MultiMap 条目的输入键名是 "in"（Python 关键字），用 Field(alias="in") 映射
3. 模型只负责结构校验，和领域对象之间的转换在 codec.py 中完成
"""

from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from exactmath import format_scalar, to_scalar

ScalarText = Union[int, str]


def _normalize(value: ScalarText) -> str:
    return format_scalar(to_scalar(value))


# ========== 矩阵与点 ==========

class MatModel(BaseModel):
    """{"rows": r, "cols": c, "entries": [["p/q", ...], ...]}"""
    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: List[List[ScalarText]]

    @field_validator("entries")
    @classmethod
    def _check_scalars(cls, v):
        return [[_normalize(x) for x in row] for row in v]

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries 的形状与 rows={self.rows}, cols={self.cols} 不符")
        return self


class MatTupleModel(BaseModel):
    """{"size": s, "components": [Mat, ...]}"""
    size: int = Field(ge=1)
    components: List[MatModel] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_square(self):
        for m in self.components:
            if (m.rows, m.cols) != (self.size, self.size):
                raise ValueError(f"分量应为 {self.size}×{self.size}，得到 {m.rows}×{m.cols}")
        return self


# ========== 多项式 ==========

class TermModel(BaseModel):
    word: List[int]
    coeff: ScalarText

    @field_validator("coeff")
    @classmethod
    def _check_coeff(cls, v):
        return _normalize(v)


class PolyModel(BaseModel):
    """{"g": 2, "terms": [{"word": [1,2,1], "coeff": "3/2"}, ...]}；给出 order 时为截断级数"""
    g: int = Field(ge=1)
    terms: List[TermModel] = Field(default_factory=list)
    order: Optional[int] = Field(default=None, ge=0)


# ========== 多重线性映射与芽 ==========

class EntryModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    inputs: List[List[int]] = Field(alias="in")
    out: List[int] = Field(min_length=2, max_length=2)
    coeff: ScalarText

    @field_validator("coeff")
    @classmethod
    def _check_coeff(cls, v):
        return _normalize(v)

    @field_validator("inputs")
    @classmethod
    def _check_inputs(cls, v):
        for triple in v:
            if len(triple) != 3:
                raise ValueError(f"输入下标应为 [j, p, q]，得到 {triple}")
        return v


class MultiMapModel(BaseModel):
    """{"s": 2, "g": 2, "arity": 1, "entries": [{"in": [[j,p,q]], "out": [p,q], "coeff": "1/1"}]}"""
    s: int = Field(ge=1)
    g: int = Field(ge=1)
    arity: int = Field(ge=0)
    entries: List[EntryModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_entries(self):
        for e in self.entries:
            if len(e.inputs) != self.arity:
                raise ValueError(f"条目有 {len(e.inputs)} 个输入，元数为 {self.arity}")
            for j, p, q in e.inputs:
                if not (1 <= j <= self.g and 1 <= p <= self.s and 1 <= q <= self.s):
                    raise ValueError(f"输入下标 [{j},{p},{q}] 越界")
            if not all(1 <= x <= self.s for x in e.out):
                raise ValueError(f"输出下标 {e.out} 越界")
        return self


class JetModel(BaseModel):
    """{"Y": MatTuple, "maps": [MultiMap, ...]}"""
    Y: MatTupleModel
    maps: List[MultiMapModel] = Field(min_length=1)


class AlgebraBasisModel(BaseModel):
    """table[i][j][k] 为 b_i·b_j 中 b_k 的系数"""
    s: int
    basis: List[MatModel]
    table: List[List[List[ScalarText]]]


# ========== 问题文件 ==========

class ProblemModel(BaseModel):
    """插值问题：targets 与 target_expr 恰给出一个"""
    points: List[MatTupleModel] = Field(min_length=1)
    targets: Optional[List[JetModel]] = None
    target_expr: Optional[str] = None
    L: int = Field(ge=0)
    Dmax: Optional[int] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _one_target_source(self):
        if (self.targets is None) == (self.target_expr is None):
            raise ValueError("targets 与 target_expr 必须恰好给出一个")
        if self.targets is not None and len(self.targets) != len(self.points):
            raise ValueError(f"{len(self.points)} 个点但有 {len(self.targets)} 个目标")
        return self


class PropagationModel(BaseModel):
    """最小传播输入：种子芽（基点即芽的 Y）与目标阶数 M"""
    seed: JetModel
    M: int = Field(ge=0)


class EmbedModel(BaseModel):
    """代数嵌入输入：点 Y、S(Y) 中的矩阵、目标阶数 M"""
    Y: MatTupleModel
    elements: List[MatModel] = Field(min_length=1)
    M: int = Field(ge=0)


class PolyMatrixModel(BaseModel):
    """内秩输入：元素为多项式字符串"""
    g: Optional[int] = Field(default=None, ge=1)
    entries: List[List[str]] = Field(min_length=1)


# ========== 输出记录 ==========

class ViolationModel(BaseModel):
    tag: str
    level: int
    slot: int
    witness: MatModel
    deviation: str
    location: List[int]


class LacReportModel(BaseModel):
    holds: bool
    checked: int
    violations: List[ViolationModel]


class SizeVerdictModel(BaseModel):
    size: int
    verdict: str
    defined: int
    undefined: int
    witness: Optional[MatTupleModel] = None
    witness_value: Optional[MatModel] = None
    truncated: bool = False
    truncation_order: Optional[int] = None
    symbolic: bool = False


class RankEstimateModel(BaseModel):
    ratio: str
    size: int
    rank: int
    rows: int
    cols: int
    samples: int
    full: bool
    witness: Optional[MatTupleModel] = None
