# -*- coding: utf-8 -*-
"""
文件格式模块
============
JSON 文件格式的 pydantic 模型，以及模型与领域对象之间的转换。
"""

from .schemas import (
    MatModel,
    MatTupleModel,
    TermModel,
    PolyModel,
    EntryModel,
    MultiMapModel,
    JetModel,
    AlgebraBasisModel,
    ProblemModel,
    PropagationModel,
    EmbedModel,
    PolyMatrixModel,
    ViolationModel,
    LacReportModel,
    SizeVerdictModel,
    RankEstimateModel,
)
from .codec import (
    parse_model,
    load_model,
    dump_json,
    mat_from_model,
    mat_to_model,
    point_from_model,
    point_to_model,
    poly_from_model,
    poly_to_model,
    multimap_from_model,
    multimap_to_model,
    jet_from_model,
    jet_to_model,
    algebra_to_model,
    lac_report_to_model,
    verdict_to_model,
    rank_to_model,
)

__all__ = [
    "MatModel", "MatTupleModel", "TermModel", "PolyModel", "EntryModel", "MultiMapModel",
    "JetModel", "AlgebraBasisModel", "ProblemModel", "PropagationModel", "EmbedModel",
    "PolyMatrixModel", "ViolationModel", "LacReportModel", "SizeVerdictModel",
    "RankEstimateModel",
    "parse_model", "load_model", "dump_json", "mat_from_model", "mat_to_model",
    "point_from_model", "point_to_model", "poly_from_model", "poly_to_model",
    "multimap_from_model", "multimap_to_model", "jet_from_model", "jet_to_model",
    "algebra_to_model", "lac_report_to_model", "verdict_to_model", "rank_to_model",
]
