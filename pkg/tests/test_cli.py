# -*- coding: utf-8 -*-
"""
命令行测试
==========
子命令覆盖、样例文件上的端到端运行、退出码映射与可复现性。

使用方法:
    pytest tests/test_cli.py
"""
import json
import logging
import sys
from pathlib import Path

# 添加项目根目录到 sys.path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from cli import OPERATIONS, exit_code_for, run
from config import settings
from exactmath import (
    DimensionMismatch,
    ExprSyntaxError,
    InfeasibleError,
    InternalCheckFailure,
    NotSemisimpleError,
    ResourceGuardError,
)

MODULE_OPERATIONS = {
    "exactmath": ["rank", "solve_linear", "matrix_inverse"],
    "freealg": ["mul", "homogeneous_component", "transduct", "alternating_poly"],
    "jet": ["evaluate", "jet_eval", "jet_mul", "jet_inverse", "ampliate", "is_jointly_nilpotent"],
    "structure": ["generated_algebra", "centralizer", "is_semisimple", "is_irreducible",
                  "are_separated", "bimodule_ops"],
    "lac": ["check_lac_truncated", "check_admissible"],
    "hermite": ["interpolate", "min_degree", "vanishing_ideal_basis"],
    "propagate": ["propagate_minimal", "embed_algebra", "growth_bound", "separating_example"],
    "mero": ["parse", "evaluate_expr", "generic_evaluate", "identity_test", "inner_rank_estimate"],
}


@pytest.fixture(autouse=True)
def isolated_runtime(monkeypatch):
    """run() 会改写线程数与根日志器，测试结束后恢复"""
    monkeypatch.setattr(settings, "ncgerm_threads", settings.ncgerm_threads)
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers = handlers
    root.setLevel(level)


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ========== 分派表 ==========

def test_every_module_operation_has_exactly_one_command():
    covered = [op for command in OPERATIONS.values() for op in command.operations]
    expected = [f"{module}.{op}" for module, ops in MODULE_OPERATIONS.items() for op in ops]
    assert sorted(covered) == sorted(expected)


def test_help_exits_ok(capsys):
    code, out, _ = _run(capsys, "--help")
    assert code == 0
    assert "min-degree" in out


@pytest.mark.parametrize("error,code", [
    (InfeasibleError("x", cap_hit=True), 2),
    (NotSemisimpleError("x"), 2),
    (DimensionMismatch("x"), 2),
    (ExprSyntaxError("x", 0), 3),
    (ResourceGuardError("x"), 4),
    (InternalCheckFailure("x"), 1),
])
def test_exit_code_mapping(error, code):
    assert exit_code_for(error) == code


# ========== 样例文件 ==========

def test_min_degree_example(capsys, data_dir):
    code, out, _ = _run(capsys, "min-degree", "--problem", str(data_dir / "example_L1.json"))
    assert code == 0
    assert out == "4\n"


def test_interpolate_writes_output_file(data_dir, tmp_path):
    target = tmp_path / "p.json"
    code = run(["--output", str(target), "interpolate", "--problem", str(data_dir / "example_L1.json")])
    assert code == 0
    poly = json.loads(target.read_text(encoding="utf-8"))
    assert poly["g"] == 2
    assert max(len(t["word"]) for t in poly["terms"]) == 4


def test_growth_table_csv(capsys):
    code, out, _ = _run(capsys, "growth-table", "--alpha", "2", "--beta", "3", "--lmax", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ell,m,value"
    assert "1,0,12/1" in lines
    assert "2,1,72/1" in lines


def test_growth_table_json(capsys):
    code, out, _ = _run(capsys, "growth-table", "--alpha", "2", "--beta", "2", "--lmax", "2",
                        "--format", "json")
    assert code == 0
    rows = {(r["ell"], r["m"]): r["value"] for r in json.loads(out)}
    assert rows[(2, 0)] == "64/1"


def test_separated(capsys, data_dir):
    code, out, _ = _run(capsys, "separated", "--point", str(data_dir / "commutator_point.json"),
                        "--point", str(data_dir / "zero_point.json"))
    assert code == 0
    assert json.loads(out) == {"separated": True}


def test_structure_reports_ops(capsys, data_dir):
    code, out, _ = _run(capsys, "structure", "--point", str(data_dir / "commutator_point.json"))
    assert code == 0
    result = json.loads(out)
    assert result["semisimple"] and result["irreducible"]
    assert len(result["generated_algebra"]["basis"]) == 4


def test_embed_example(capsys, data_dir):
    code, out, _ = _run(capsys, "embed", "--config", str(data_dir / "embed_E12.json"))
    assert code == 0
    (jet,) = json.loads(out)
    assert len(jet["maps"]) == 5


def test_identity_test_example(capsys, data_dir):
    code, out, _ = _run(capsys, "identity-test", "--expr", str(data_dir / "hua.txt"),
                        "--sizes", "1,2", "--trials", "5", "--seed", "3")
    assert code == 0
    assert [v["verdict"] for v in json.loads(out)] == ["Zero", "Zero"]


def test_identity_test_is_reproducible(capsys, data_dir):
    argv = ["identity-test", "--expr", str(data_dir / "commutator.txt"), "--sizes", "1,2",
            "--trials", "4", "--seed", "9"]
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, "--threads", "2", *argv)
    assert first == second
    assert [v["verdict"] for v in json.loads(first)] == ["Zero", "Nonzero"]


def test_inner_rank_example(capsys, data_dir):
    code, out, _ = _run(capsys, "inner-rank", "--matrix", str(data_dir / "factorized_matrix.json"),
                        "--nmax", "2", "--trials", "5", "--seed", "1")
    assert code == 0
    result = json.loads(out)
    assert result["ratio"] == "1/1"
    assert not result["full"]


# ========== 退出码 ==========

def test_dmax_cap_exits_2(capsys, data_dir):
    code, out, err = _run(capsys, "min-degree", "--problem", str(data_dir / "example_L1.json"),
                          "--dmax", "2")
    assert code == 2
    assert out == ""
    assert "InfeasibleError" in err


def test_bad_json_exits_3(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = _run(capsys, "nilpotent", "--point", str(bad))
    assert code == 3
    assert "FormatError" in err


def test_syntax_error_exits_3(capsys, tmp_path):
    expr = tmp_path / "bad.txt"
    expr.write_text("x1 +* x2", encoding="utf-8")
    code, _, _ = _run(capsys, "parse", "--expr", str(expr))
    assert code == 3


def test_missing_seed_exits_3(capsys, data_dir):
    code, _, _ = _run(capsys, "identity-test", "--expr", str(data_dir / "hua.txt"), "--sizes", "1")
    assert code == 3


def test_negative_seed_exits_2(capsys, data_dir):
    code, out, err = _run(capsys, "inner-rank", "--matrix", str(data_dir / "factorized_matrix.json"),
                          "--nmax", "1", "--trials", "1", "--seed", "-1")
    assert code == 2
    assert out == ""
    assert "PreconditionFailed" in err


def test_non_positive_threads_exits_3(capsys, data_dir):
    code, _, _ = _run(capsys, "--threads", "0", "nilpotent", "--point", str(data_dir / "zero_point.json"))
    assert code == 3


def test_resource_guard_exits_4(capsys, monkeypatch, data_dir):
    monkeypatch.setattr(settings, "ncgerm_monomial_cap", 10)
    code, _, err = _run(capsys, "generic-eval", "--poly", str(data_dir / "commutator_poly.json"), "--n", "3")
    assert code == 4
    assert "ResourceGuardError" in err
