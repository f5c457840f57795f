"""End-to-end command-line runs against temp files."""

from __future__ import annotations

import json
import math

import pytest

from foxhpos.cli import main, parse_grid
from foxhpos.errors import SchemaError


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


def test_grid_parsing():
    g = parse_grid("0.01:100:25:log")
    pts = g.points()
    assert len(pts) == 25
    assert pts[0] == pytest.approx(0.01) and pts[-1] == pytest.approx(100.0)
    lin = parse_grid("1:2:3:lin").points()
    assert lin == [1.0, 1.5, 2.0]
    with pytest.raises(SchemaError):
        parse_grid("1:2:3")
    with pytest.raises(SchemaError):
        parse_grid("2:1:3:log")


def test_check_command(tmp_path, capsys):
    spec_path = _write(tmp_path / "spec.json", {"varphi": [["1", "0"]]})
    code, out, err = _run(capsys, "check", "--in", spec_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["chi_prime"] == "1"
    assert doc["strip"] == {"lo": "0", "hi": "inf"}
    assert doc["pole_check_mode"] == "exact"


def test_build_and_eval_roundtrip(tmp_path, capsys):
    spec_path = _write(tmp_path / "spec.json", {"psi": [["1", "0", "1"]]})
    params_path = str(tmp_path / "params.json")
    code, out, err = _run(capsys, "build", "--in", spec_path, "--out", params_path)
    assert code == 0
    params_doc = json.loads(open(params_path).read())
    assert (params_doc["m"], params_doc["n"]) == (1, 1)
    assert params_doc["ep"]["ok"] is True
    assert params_doc["derivation"][0]["op"] == "build"

    code, out, err = _run(
        capsys, "eval", "--in", params_path, "--grid", "0.5:2:3:lin", "--tol", "1e-10"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "t,value,abs_err_est,height_used,panels"
    assert len(lines) == 4
    t0, v0 = lines[1].split(",")[:2]
    assert float(v0) == pytest.approx(1.0 / 1.5, abs=1e-9)


def test_eval_empty_strip_exits_2(tmp_path, capsys):
    params_path = _write(
        tmp_path / "bad.json",
        {
            "m": 1,
            "n": 1,
            "p": 1,
            "q": 1,
            "upper": [["0", "1"]],
            "lower": [["-1.5", "1"]],
        },
    )
    code, out, err = _run(capsys, "eval", "--in", params_path)
    assert code == 2
    doc = json.loads(err)
    assert doc["error"] == "EmptyStrip"


def test_schema_violation_exits_1(tmp_path, capsys):
    bad = _write(tmp_path / "bad.json", {"varphi": [["1"]]})
    code, out, err = _run(capsys, "check", "--in", bad)
    assert code == 1
    assert json.loads(err)["error"] == "Schema"


def test_oracle_command(tmp_path, capsys):
    spec_path = _write(tmp_path / "spec.json", {"phi": [["1", "0", "2"]]})
    code, out, err = _run(capsys, "oracle", "--in", spec_path, "--grid", "0.25:4:3:log")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "t,value,abs_err_est"
    # single-kernel oracle f = (1 - t) on (0, 1)
    first = lines[1].split(",")
    assert float(first[1]) == pytest.approx(0.75, abs=1e-12)
    last = lines[3].split(",")
    assert float(last[1]) == 0.0


def test_verify_command(tmp_path, capsys):
    spec_path = _write(tmp_path / "spec.json", {"psi": [["1", "0", "1"]]})
    code, out, err = _run(
        capsys, "verify", "--in", spec_path, "--grid", "0.1:10:7:log", "--tol", "1e-10"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["positivity_ok"] is True
    assert doc["max_abs_diff"] < 1e-8
    assert doc["mellin_roundtrip_max_rel_err"] < 1e-5


def test_transform_chain(tmp_path, capsys):
    spec_path = _write(tmp_path / "spec.json", {"psi": [["1", "0", "1"]]})
    params_path = str(tmp_path / "params.json")
    _run(capsys, "build", "--in", spec_path, "--out", params_path)
    out_path = str(tmp_path / "recip.json")
    code, out, err = _run(
        capsys, "transform", "--in", params_path, "--op", "reciprocal", "--out", out_path
    )
    assert code == 0
    doc = json.loads(open(out_path).read())
    assert doc["upper"] == [["1", "1"]]
    assert doc["derivation"][-1] == {"op": "reciprocal"}

    code, out, err = _run(
        capsys,
        "transform",
        "--in",
        out_path,
        "--op",
        "power-arg",
        "--omega",
        "2",
    )
    assert code == 0
    doc2 = json.loads(out)
    assert doc2["upper"] == [["1", "2"]]
    assert doc2["derivation"][-1]["op"] == "power-arg"
    assert doc2["derivation"][-1]["scalar"] == 2.0


def test_transform_product_requires_second_input(tmp_path, capsys):
    spec_path = _write(tmp_path / "spec.json", {"psi": [["1", "0", "1"]]})
    params_path = str(tmp_path / "params.json")
    _run(capsys, "build", "--in", spec_path, "--out", params_path)
    code, out, err = _run(
        capsys,
        "transform",
        "--in",
        params_path,
        "--op",
        "product",
        "--omega",
        "1",
        "--lambda",
        "1",
    )
    assert code == 1  # missing --in2 is a schema-level violation

    code, out, err = _run(
        capsys,
        "transform",
        "--in",
        params_path,
        "--in2",
        params_path,
        "--op",
        "product",
        "--omega",
        "1",
        "--lambda",
        "1",
    )
    assert code == 0
    doc = json.loads(out)
    assert (doc["m"], doc["n"], doc["p"], doc["q"]) == (2, 2, 2, 2)


def test_transform_gate_failure_exits_2(tmp_path, capsys):
    spec_path = _write(tmp_path / "spec.json", {"psi": [["1", "0", "1"]]})
    params_path = str(tmp_path / "params.json")
    _run(capsys, "build", "--in", spec_path, "--out", params_path)
    code, out, err = _run(
        capsys,
        "transform",
        "--in",
        params_path,
        "--op",
        "laplace",
        "--omega",
        "-1",
        "--lambda",
        "1",
    )
    assert code == 2
    assert json.loads(err)["error"] == "PreconditionFailed"


def test_reduce_command(tmp_path, capsys):
    spec_path = _write(tmp_path / "spec.json", {"varphi": [["1", "0"]]})
    params_path = str(tmp_path / "params.json")
    _run(capsys, "build", "--in", spec_path, "--out", params_path)
    code, out, err = _run(capsys, "reduce", "--in", params_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["wright"] == {"upper": [], "lower": [], "mu": "0"}
    assert doc["meijer"]["lambda"] == "1"
    assert doc["macrobert"] is None


def test_corpus_determinism(tmp_path, capsys):
    args = ["corpus", "--seed", "3", "--count", "2", "--grid", "0.5:2:3:log", "--tol", "1e-8"]
    code1, out1, err1 = _run(capsys, *args)
    code2, out2, err2 = _run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.strip().split("\n")
    assert lines[0].startswith("idx,n1,n2,n3,n4,")
    assert len(lines) == 3
    for line in lines[1:]:
        assert line.split(",")[-1] == "1"  # positivity_ok
