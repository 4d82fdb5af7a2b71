from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import pytest

from fccdp import catalog as cat
from fccdp.cli import TABLES, render_table, run
from fccdp.gfcore import FccCode, LinearCode, repetition_code, shortened_hamming_code

GOLDENS = Path(__file__).parent / "goldens"


def write(tmp_path: Path, name: str, data) -> str:
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(p)


@pytest.fixture
def files(tmp_path):
    return {
        "weight3": write(tmp_path, "w3.json", cat.weight3().to_json()),
        "weight4": write(tmp_path, "w4.json", cat.weight4().to_json()),
        "c633": write(tmp_path, "c633.json", cat.code_633().to_json()),
        "parity4": write(tmp_path, "p4.json", cat.parity4().to_json()),
        "h743": write(tmp_path, "h743.json", cat.hamming_743().to_json()),
        "ex5": write(tmp_path, "ex5.json", FccCode.from_mapping(cat.EX5_CODE, cat.weight3(), 3, 5).to_json()),
        "linear_f": write(tmp_path, "linear_f.json", cat.linear_function().to_json()),
        "c734": write(tmp_path, "c734.json", cat.code_734().to_json()),
        "c322": write(tmp_path, "c322.json", cat.code_322().to_json()),
    }


@pytest.mark.parametrize("name", list(TABLES))
def test_table_matches_golden(name):
    text, ok = render_table(name)
    assert ok
    assert text == (GOLDENS / f"{name}.txt").read_text()


def test_tables_command(capsys):
    assert run(["tables", "--example", "ex9"]) == 0
    assert "4-cycle" in capsys.readouterr().out


class TestConstruct:
    def test_two_step_round_trip(self, files, tmp_path, capsys):
        out = tmp_path / "code.json"
        rc = run(["construct", "--method", "two-step", "--function", files["weight3"], "--ecc", files["c633"],
                  "--td", "1", "--tf", "2", "-o", str(out)])
        assert rc == 0
        data = json.loads(out.read_text())
        code = FccCode.from_json(data)
        assert code.redundancy == 6 and code.to_json() == data
        assert run(["verify", "--code", str(out)]) == 0

    def test_locally_binary(self, files, capsys):
        assert run(["construct", "--method", "locally-binary", "--function", files["parity4"], "--ecc", files["h743"], "--df", "5"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert {k: v for k, v in data["entries"].items()} == cat.PARITY4_CODE

    def test_locally_bounded(self, tmp_path, capsys):
        f = write(tmp_path, "w4.json", cat.weight4().to_json())
        c = write(tmp_path, "h.json", shortened_hamming_code(4).to_json())
        assert run(["construct", "--method", "locally-bounded", "--function", f, "--ecc", c, "--dd", "3", "--df", "5"]) == 0

    def test_hamming_weight(self, tmp_path, capsys):
        f = write(tmp_path, "w4.json", cat.weight4().to_json())
        c = write(tmp_path, "h.json", shortened_hamming_code(4).to_json())
        assert run(["construct", "--method", "hamming-weight", "--function", f, "--ecc", c, "--td", "1", "--tf", "2"]) == 0

    def test_linear(self, files, capsys):
        assert run(["construct", "--method", "linear", "--function", files["linear_f"], "--ecc", files["c734"], "--outer", files["c322"]]) == 0
        assert json.loads(capsys.readouterr().out)["entries"] == cat.LINEAR_CODE

    def test_radius_mismatch_is_usage_error(self, files, capsys):
        rc = run(["construct", "--method", "two-step", "--function", files["weight3"], "--ecc", files["c633"],
                  "--td", "1", "--dd", "5", "--tf", "2"])
        assert rc == 2
        assert "disagree" in capsys.readouterr().err


class TestVerify:
    def test_valid(self, files, capsys):
        assert run(["verify", "--code", files["ex5"]]) == 0
        assert json.loads(capsys.readouterr().out)["measured_d_f"] == 5

    def test_corrupted_code_exits_one(self, files, tmp_path, capsys):
        data = json.loads(Path(files["ex5"]).read_text())
        data["entries"]["111"] = "111000110"
        bad = write(tmp_path, "bad.json", data)
        assert run(["verify", "--code", bad, "--format", "table"]) == 1
        assert "INVALID" in capsys.readouterr().out

    def test_malformed_json_names_position(self, tmp_path, capsys):
        bad = write(tmp_path, "bad.json", '{"q": 2,\n  "k": }')
        assert run(["verify", "--code", bad]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert run(["verify", "--code", "/nonexistent/x.json"]) == 2

    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 2


class TestBounds:
    def test_weight4_csv(self, files, capsys):
        assert run(["bounds", "--function", files["weight4"], "--dd", "3", "--df", "5", "--format", "csv"]) == 0
        rows = {r["bound"]: r for r in csv.DictReader(io.StringIO(capsys.readouterr().out))}
        assert rows["plotkin-dp"]["exact"] == "33/8"
        assert rows["plotkin-dp"]["decimal"] == "4.1250"
        assert rows["plotkin-dp"]["rounded"] == "5"

    def test_with_inner_code_json(self, files, capsys):
        assert run(["bounds", "--function", files["weight3"], "--ecc", files["c633"], "--td", "1", "--tf", "2"]) == 0
        data = json.loads(capsys.readouterr().out)
        kinds = {e["kind"] for e in data["entries"]}
        assert kinds == {"lower", "upper"}

    def test_table_format(self, files, capsys):
        assert run(["--format", "table", "bounds", "--function", files["weight3"], "--td", "1", "--tf", "2"]) == 0
        assert "plotkin-dp" in capsys.readouterr().out

    def test_needs_radii(self, files, capsys):
        assert run(["bounds", "--function", files["weight3"]]) == 2


class TestSearchAndGraph:
    def test_ndsearch(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", cat.EX1_FDM)
        assert run(["ndsearch", "--matrix", m]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["status"] == "Exact" and out["length"] == 3

    def test_ndsearch_budget_exit(self, tmp_path, capsys, monkeypatch):
        e = [[0 if i == j else 3 for j in range(8)] for i in range(8)]
        m = write(tmp_path, "m.json", e)
        monkeypatch.setenv("FCCDP_NODE_BUDGET", "5")
        assert run(["ndsearch", "--matrix", m]) == 3
        assert json.loads(capsys.readouterr().out)["status"] == "LowerBoundOnly"

    def test_ndsearch_infeasible(self, tmp_path, capsys):
        m = write(tmp_path, "m.json", [[1, 0], [0, 0]])
        assert run(["ndsearch", "--matrix", m]) == 1

    def test_graph_dot(self, tmp_path, capsys):
        code = write(tmp_path, "c.json", list(cat.EX9_CODE))
        dot = tmp_path / "g.dot"
        assert run(["graph", "--code", code, "--dot", str(dot), "--values", "2"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["strict_fcc"] == "RuledOut"
        assert dot.read_text().count("--") == 4

    def test_graph_of_linear_code(self, tmp_path, capsys):
        code = write(tmp_path, "c.json", repetition_code(3).to_json())
        assert run(["graph", "--code", code]) == 0
        assert json.loads(capsys.readouterr().out)["num_components"] == 1


class TestSimulate:
    def test_exhaustive(self, files, capsys):
        assert run(["simulate", "--code", files["ex5"]]) == 0
        assert json.loads(capsys.readouterr().out)["function_failures"] == 0

    def test_traditional_code_fails(self, tmp_path, capsys):
        code = write(tmp_path, "t.json", FccCode.from_mapping(cat.EX5_TRADITIONAL, cat.weight3(), 3, 5).to_json())
        assert run(["simulate", "--code", code, "--td", "1", "--tf", "2"]) == 1
        assert json.loads(capsys.readouterr().out)["data_failures"] == 18

    def test_monte_carlo_seeded(self, files, capsys):
        argv = ["simulate", "--code", files["ex5"], "--mode", "mc", "--trials", "500", "--seed", "4"]
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        assert capsys.readouterr().out == first
        assert json.loads(first)["seed"] == 4


def test_code_files_round_trip(files):
    for key in ("c633", "h743", "c734"):
        data = json.loads(Path(files[key]).read_text())
        assert LinearCode.from_json(data).to_json() == data
