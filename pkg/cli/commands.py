# -*- coding: utf-8 -*-
"""
子命令
======
每个子命令是一个处理函数：读入文件、调用一个模块的运算、返回要写到标准输出的文本。
OPERATIONS 是分派表，同时记录每个子命令覆盖的模块运算，
每个模块运算恰好由一个子命令覆盖。

知识点：
--------
1. 处理函数只返回文本，不直接打印，输出位置由 main.run 决定
2. 涉及随机抽样的子命令必须显式给出 --seed
3. 输入文件格式见 formats.schemas；表达式文件是纯文本
"""

import argparse
import csv
import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from exactmath import (
    FormatError,
    PreconditionFailed,
    format_scalar,
    matrix_inverse,
    rank,
    solve_linear,
)
from formats import (
    EmbedModel,
    JetModel,
    MatModel,
    MatTupleModel,
    MultiMapModel,
    PolyMatrixModel,
    PolyModel,
    ProblemModel,
    PropagationModel,
    algebra_to_model,
    dump_json,
    jet_from_model,
    jet_to_model,
    lac_report_to_model,
    load_model,
    mat_from_model,
    mat_to_model,
    multimap_from_model,
    multimap_to_model,
    point_from_model,
    point_to_model,
    poly_from_model,
    poly_to_model,
    rank_to_model,
    verdict_to_model,
)
from freealg import alternating_poly, homogeneous_component, mul, transduct
from hermite import InterpolationProblem, interpolate, min_degree, vanishing_ideal_basis
from jet import ampliate, evaluate, is_jointly_nilpotent, jet_eval, jet_inverse, jet_mul, nilpotency_index
from lac import check_admissible, check_lac_truncated
from mero import (
    describe_generic,
    evaluate_expr,
    expr_jet,
    generic_evaluate,
    identity_test,
    inner_rank_estimate,
    parse,
    parse_matrix,
)
from propagate import (
    PropagationConfig,
    embed_algebra,
    growth_bound,
    propagate_minimal,
    separating_example,
)
from structure import (
    are_separated,
    bimodule_ops,
    centralizer,
    generated_algebra,
    is_irreducible,
    is_semisimple,
    possibly_irreducible_over_extension,
)

# 配置日志
logger = logging.getLogger(__name__)


@dataclass
class Command:
    """
    子命令

    Attributes:
        name: 子命令名
        help: 帮助文本
        handler: 处理函数 args → 输出文本
        configure: 向子解析器添加参数
        operations: 覆盖的模块运算（"模块.运算"）
    """
    name: str
    help: str
    handler: Callable[[argparse.Namespace], str]
    configure: Callable[[argparse.ArgumentParser], None]
    operations: Tuple[str, ...]


# ========== 输入读取 ==========

def _mat(path):
    return mat_from_model(load_model(path, MatModel))


def _point(path):
    return point_from_model(load_model(path, MatTupleModel))


def _poly(path):
    return poly_from_model(load_model(path, PolyModel))


def _jet(path):
    return jet_from_model(load_model(path, JetModel))


def _multimap(path):
    return multimap_from_model(load_model(path, MultiMapModel))


def _text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"无法读取文件 {path}: {e}") from e


def _dump_models(models) -> str:
    return dump_json([m.model_dump(by_alias=True, exclude_none=True) for m in models])


# ========== exactmath / freealg ==========

def cmd_linalg(args) -> str:
    a = _mat(args.matrix)
    if args.op == "rank":
        return dump_json({"rank": rank(a)})
    if args.op == "inverse":
        return dump_json(mat_to_model(matrix_inverse(a)))
    if not args.rhs:
        raise FormatError("solve 需要 --rhs")
    result = solve_linear(a, _mat(args.rhs))
    return dump_json({
        "consistent": result.consistent,
        "solution": mat_to_model(result.solution).model_dump() if result.consistent else None,
        "kernel": [[format_scalar(x) for x in v] for v in result.kernel_vectors],
    })


def _configure_linalg(p):
    p.add_argument("--matrix", required=True, help="矩阵文件")
    p.add_argument("--op", choices=["rank", "solve", "inverse"], default="rank")
    p.add_argument("--rhs", help="solve 的右端项矩阵文件")


def cmd_poly(args) -> str:
    p = _poly(args.poly)
    if args.op == "mul":
        if not args.other:
            raise FormatError("mul 需要 --other")
        result = mul(p, _poly(args.other))
    elif args.op == "component":
        result = homogeneous_component(p, args.degree)
    else:
        result = transduct(args.letter, p)
    return dump_json(poly_to_model(result))


def _configure_poly(p):
    p.add_argument("--poly", required=True, help="多项式文件")
    p.add_argument("--op", choices=["mul", "component", "transduct"], required=True)
    p.add_argument("--other", help="mul 的右因子")
    p.add_argument("--degree", type=int, default=0, help="component 的次数")
    p.add_argument("--letter", type=int, default=1, help="transduct 的字母下标")


def cmd_alternating(args) -> str:
    return dump_json(poly_to_model(alternating_poly(args.s)))


def _configure_alternating(p):
    p.add_argument("--s", type=int, required=True, help="矩阵阶数 s")


# ========== jet ==========

def cmd_evaluate(args) -> str:
    return dump_json(mat_to_model(evaluate(_poly(args.poly), _point(args.point))))


def _configure_poly_point(p):
    p.add_argument("--poly", required=True, help="多项式文件")
    p.add_argument("--point", required=True, help="矩阵点文件")


def cmd_jet(args) -> str:
    return dump_json(jet_to_model(jet_eval(_poly(args.poly), _point(args.point), args.order)))


def _configure_jet(p):
    _configure_poly_point(p)
    p.add_argument("--order", type=int, required=True, help="截断阶 L")


def cmd_jet_mul(args) -> str:
    return dump_json(jet_to_model(jet_mul(_jet(args.a), _jet(args.b))))


def _configure_jet_mul(p):
    p.add_argument("--a", required=True, help="左因子芽文件")
    p.add_argument("--b", required=True, help="右因子芽文件")


def cmd_jet_inverse(args) -> str:
    return dump_json(jet_to_model(jet_inverse(_jet(args.jet))))


def _configure_jet_file(p):
    p.add_argument("--jet", required=True, help="芽文件")


def cmd_ampliate(args) -> str:
    return dump_json(multimap_to_model(ampliate(_multimap(args.map), args.n)))


def _configure_ampliate(p):
    p.add_argument("--map", required=True, help="多重线性映射文件")
    p.add_argument("--n", type=int, required=True, help="块数 n")


def cmd_nilpotent(args) -> str:
    z = _point(args.point)
    return dump_json({"nilpotent": is_jointly_nilpotent(z), "index": nilpotency_index(z)})


def _configure_point(p):
    p.add_argument("--point", required=True, help="矩阵点文件")


# ========== structure / lac ==========

def cmd_structure(args) -> str:
    y = _point(args.point)
    semisimple = is_semisimple(y)
    out = {
        "generated_algebra": algebra_to_model(generated_algebra(y)).model_dump(),
        "centralizer": algebra_to_model(centralizer(y)).model_dump(),
        "semisimple": semisimple,
        "irreducible": is_irreducible(y),
        "possibly_irreducible_over_extension": possibly_irreducible_over_extension(y),
    }
    if semisimple:
        ops = bimodule_ops(y)
        out["bimodule_ops"] = ops.describe()
        out["pi"] = mat_to_model(ops.pi).model_dump()
    return dump_json(out)


def cmd_separated(args) -> str:
    return dump_json({"separated": are_separated([_point(p) for p in args.point])})


def _configure_separated(p):
    p.add_argument("--point", action="append", required=True, help="矩阵点文件（可重复）")


def cmd_lac_check(args) -> str:
    jet = _jet(args.jet)
    report = check_lac_truncated(jet.basepoint, jet, args.order, first_only=args.first_only)
    return dump_json(lac_report_to_model(report))


def _configure_lac_check(p):
    _configure_jet_file(p)
    p.add_argument("--order", type=int, help="截断阶 L，默认为芽的阶")
    p.add_argument("--first-only", action="store_true", help="发现第一条违反即停止")


def cmd_admissible(args) -> str:
    return dump_json({"admissible": check_admissible(_point(args.point), _multimap(args.map))})


def _configure_admissible(p):
    _configure_point(p)
    p.add_argument("--map", required=True, help="多重线性映射文件")


# ========== hermite ==========

def load_problem(path, dmax=None) -> InterpolationProblem:
    """
    读取插值问题；给出 target_expr 时目标芽由表达式的芽运算得到

    Raises:
        PreconditionFailed: target_expr 在某个点处无定义
    """
    model = load_model(path, ProblemModel)
    points = [point_from_model(p) for p in model.points]
    if model.targets is not None:
        targets = [jet_from_model(t) for t in model.targets]
    else:
        expr = parse(model.target_expr, g=points[0].g)
        targets = []
        for i, y in enumerate(points):
            outcome = expr_jet(expr, y, model.L)
            if not outcome.defined:
                raise PreconditionFailed(f"target_expr 在第 {i} 个点处无定义（节点 {outcome.undefined_path}）")
            targets.append(outcome.value)
    return InterpolationProblem(points, targets, model.L, dmax if dmax is not None else model.Dmax)


def cmd_interpolate(args) -> str:
    return dump_json(poly_to_model(interpolate(load_problem(args.problem, args.dmax))))


def cmd_min_degree(args) -> str:
    return str(min_degree(load_problem(args.problem, args.dmax)))


def _configure_problem(p):
    p.add_argument("--problem", required=True, help="插值问题文件")
    p.add_argument("--dmax", type=int, help="覆盖文件中的 Dmax")


def cmd_vanishing_ideal(args) -> str:
    basis = vanishing_ideal_basis(_point(args.point), args.order, args.degree)
    return _dump_models(poly_to_model(p) for p in basis)


def _configure_vanishing_ideal(p):
    _configure_point(p)
    p.add_argument("--order", type=int, required=True, help="阶数 ℓ")
    p.add_argument("--degree", type=int, required=True, help="次数上限 d")


# ========== propagate ==========

def cmd_propagate(args) -> str:
    model = load_model(args.config, PropagationModel)
    seed = jet_from_model(model.seed)
    ops = bimodule_ops(seed.basepoint)
    jet = propagate_minimal(PropagationConfig(seed.basepoint, ops, seed, model.M))
    return dump_json({"jet": jet_to_model(jet).model_dump(by_alias=True), "ops": ops.describe()})


def _configure_config(p):
    p.add_argument("--config", required=True, help="输入文件")


def cmd_embed(args) -> str:
    model = load_model(args.config, EmbedModel)
    y = point_from_model(model.Y)
    jets = embed_algebra(y, [mat_from_model(m) for m in model.elements], model.M)
    return _dump_models(jet_to_model(j) for j in jets)


def cmd_growth_table(args) -> str:
    seq = growth_bound(args.alpha, args.beta, args.lmax)
    if args.format == "json":
        return dump_json([{"ell": ell, "m": m, "value": v} for ell, m, v in seq.rows()])
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["ell", "m", "value"])
    writer.writerows(seq.rows())
    return buffer.getvalue().rstrip("\n")


def _configure_growth_table(p):
    p.add_argument("--alpha", required=True, help="α > 0（整数或 p/q）")
    p.add_argument("--beta", required=True, help="β > 0（整数或 p/q）")
    p.add_argument("--lmax", type=int, required=True, help="最大阶数")
    p.add_argument("--format", choices=["csv", "json"], default="csv")


def cmd_separate(args) -> str:
    jet = separating_example(_point(args.first), _point(args.second), args.order)
    return dump_json(jet_to_model(jet))


def _configure_separate(p):
    p.add_argument("--first", required=True, help="Y′ 文件")
    p.add_argument("--second", required=True, help="Y″ 文件")
    p.add_argument("--order", type=int, default=3, help="传播到的阶数 M")


# ========== mero ==========

def cmd_parse(args) -> str:
    return str(parse(_text(args.expr)))


def _configure_expr(p):
    p.add_argument("--expr", required=True, help="表达式文件")


def cmd_eval_expr(args) -> str:
    x = _point(args.point)
    outcome = evaluate_expr(parse(_text(args.expr), g=x.g), x)
    if not outcome.defined:
        return dump_json({"defined": False, "undefined_path": list(outcome.undefined_path)})
    return dump_json({"defined": True, "value": mat_to_model(outcome.value).model_dump()})


def _configure_eval_expr(p):
    _configure_expr(p)
    _configure_point(p)


def cmd_generic_eval(args) -> str:
    value = generic_evaluate(_poly(args.poly), args.n)
    zero = all(not entry for entry in value.flat)
    return dump_json({"zero": zero, "entries": describe_generic(value)})


def _configure_generic_eval(p):
    p.add_argument("--poly", required=True, help="多项式文件")
    p.add_argument("--n", type=int, required=True, help="生成矩阵阶数")


def _sizes(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise FormatError(f"--sizes 应为逗号分隔的整数: {text!r}") from None


def cmd_identity_test(args) -> str:
    verdicts = identity_test(
        parse(_text(args.expr)), _sizes(args.sizes), args.trials, args.seed,
        bound=args.bound, symbolic=args.symbolic,
    )
    return _dump_models(verdict_to_model(v) for v in verdicts)


def _configure_identity_test(p):
    _configure_expr(p)
    p.add_argument("--sizes", required=True, help="矩阵阶数，如 1,2,3")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, help="随机整数范围 B")
    p.add_argument("--symbolic", action="store_true", help="小规模无求逆表达式用生成矩阵精确判定")


def cmd_inner_rank(args) -> str:
    model = load_model(args.matrix, PolyMatrixModel)
    entries = parse_matrix(model.entries, model.g)
    estimate = inner_rank_estimate(entries, args.nmax, args.trials, args.seed, bound=args.bound)
    return dump_json(rank_to_model(estimate))


def _configure_inner_rank(p):
    p.add_argument("--matrix", required=True, help="多项式矩阵文件")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, help="随机整数范围 B")


# ========== 分派表 ==========

_COMMANDS = [
    Command("linalg", "精确线性代数：秩、求解、求逆", cmd_linalg, _configure_linalg,
            ("exactmath.rank", "exactmath.solve_linear", "exactmath.matrix_inverse")),
    Command("poly", "nc 多项式乘法、齐次分量、右迁移", cmd_poly, _configure_poly,
            ("freealg.mul", "freealg.homogeneous_component", "freealg.transduct")),
    Command("alternating", "交错多项式 h_s", cmd_alternating, _configure_alternating,
            ("freealg.alternating_poly",)),
    Command("evaluate", "多项式在矩阵点上求值", cmd_evaluate, _configure_poly_point,
            ("jet.evaluate",)),
    Command("jet", "多项式在点 Y 处的截断芽", cmd_jet, _configure_jet, ("jet.jet_eval",)),
    Command("jet-mul", "芽乘法", cmd_jet_mul, _configure_jet_mul, ("jet.jet_mul",)),
    Command("jet-inverse", "芽求逆", cmd_jet_inverse, _configure_jet_file, ("jet.jet_inverse",)),
    Command("ampliate", "多重线性映射的块延拓", cmd_ampliate, _configure_ampliate, ("jet.ampliate",)),
    Command("nilpotent", "联合幂零判定", cmd_nilpotent, _configure_point, ("jet.is_jointly_nilpotent",)),
    Command("structure", "S(Y)、C(Y)、半单与不可约判定、双模算子", cmd_structure, _configure_point,
            ("structure.generated_algebra", "structure.centralizer", "structure.is_semisimple",
             "structure.is_irreducible", "structure.bimodule_ops")),
    Command("separated", "分离性判定", cmd_separated, _configure_separated, ("structure.are_separated",)),
    Command("lac-check", "截断 LAC 检查", cmd_lac_check, _configure_lac_check, ("lac.check_lac_truncated",)),
    Command("admissible", "Y-容许性检查", cmd_admissible, _configure_admissible, ("lac.check_admissible",)),
    Command("interpolate", "自由 Hermite 插值", cmd_interpolate, _configure_problem, ("hermite.interpolate",)),
    Command("min-degree", "插值的最小次数", cmd_min_degree, _configure_problem, ("hermite.min_degree",)),
    Command("vanishing-ideal", "消没理想的次数切片", cmd_vanishing_ideal, _configure_vanishing_ideal,
            ("hermite.vanishing_ideal_basis",)),
    Command("propagate", "最小传播", cmd_propagate, _configure_config, ("propagate.propagate_minimal",)),
    Command("embed", "S(Y) 的单项传播嵌入", cmd_embed, _configure_config, ("propagate.embed_algebra",)),
    Command("growth-table", "增长界数表", cmd_growth_table, _configure_growth_table,
            ("propagate.growth_bound",)),
    Command("separate", "非单射例子", cmd_separate, _configure_separate, ("propagate.separating_example",)),
    Command("parse", "解析表达式", cmd_parse, _configure_expr, ("mero.parse",)),
    Command("eval-expr", "表达式在矩阵点上求值", cmd_eval_expr, _configure_eval_expr, ("mero.evaluate_expr",)),
    Command("generic-eval", "生成矩阵求值", cmd_generic_eval, _configure_generic_eval,
            ("mero.generic_evaluate",)),
    Command("identity-test", "随机恒等式检验", cmd_identity_test, _configure_identity_test,
            ("mero.identity_test",)),
    Command("inner-rank", "内秩估计", cmd_inner_rank, _configure_inner_rank, ("mero.inner_rank_estimate",)),
]

OPERATIONS: Dict[str, Command] = {c.name: c for c in _COMMANDS}
