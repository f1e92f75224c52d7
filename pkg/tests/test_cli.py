# -*- coding: utf-8 -*-

"""命令行入口：输出格式与退出码"""

import csv
import json
from fractions import Fraction

import jsonschema
import pytest

from tools.zr_cli import main
from utils.config import reset_config

from tests.conftest import SIMPLEX_ROWS


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        code = main(list(argv))
        return code, capsys.readouterr().out
    return invoke


@pytest.fixture
def tiny_budget(monkeypatch):
    monkeypatch.setenv("ZR_BUDGET", "10")
    reset_config()
    yield
    monkeypatch.delenv("ZR_BUDGET")
    reset_config()


class TestThresholdCommands:

    def test_threshold_text(self, run):
        code, out = run("threshold", "2", "1", "2")
        assert code == 0
        assert "1/4" in out

    def test_threshold_json(self, run, load_schema):
        code, out = run("threshold", "3", "1", "3", "--json")
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, load_schema("threshold.schema.json"))
        assert data["p_star"] == "10/27"
        assert data["L"] == 3

    def test_threshold_csv(self, run):
        code, out = run("threshold", "2", "1", "2", "--csv", "--L-max", "4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "q,ell,L,p_star,p_star_decimal"
        assert [line.split(",")[3] for line in lines[1:]] == ["1/4", "1/4", "5/16"]

    def test_coefficient(self, run, load_schema):
        code, out = run("coefficient", "3", "1", "2", "--json")
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, load_schema("coefficient.schema.json"))
        assert data["c"] == "1/9"
        assert data["verified"] is True

    def test_unverified_coefficient_schema(self, run, load_schema):
        code, out = run("coefficient", "4", "2", "2", "--json")
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, load_schema("coefficient.schema.json"))
        assert data["verified"] is False


class TestCodeCommands:

    def test_construct_to_stdout(self, run):
        code, out = run("construct", "3", "1", "2", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "3 6 3"
        assert [tuple(int(x) for x in line.split()) for line in lines[1:]] == SIMPLEX_ROWS

    def test_construct_to_file(self, run, tmp_path):
        target = tmp_path / "code.txt"
        code, _ = run("construct", "3", "1", "2", "2", "--out", str(target))
        assert code == 0
        assert target.read_text(encoding="utf-8").splitlines()[0] == "3 90 6"

    def test_tradeoff_csv(self, run, tmp_path):
        code, out = run("tradeoff", "3", "1", "2", "--m-list", "1,2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "m,M,n,p_exact,p_star,c_over_m,residual"
        assert lines[1].split(",")[:4] == ["1", "3", "6", "1/2"]
        code, _ = run("tradeoff", "3", "1", "2", "--out", str(tmp_path / "table.csv"))
        assert code == 0
        assert (tmp_path / "table.csv").exists()

    def test_tradeoff_residual_growth(self, run, monkeypatch):
        import services.construction as construction

        # 残差 m/1000 使 m²·|r(m)| 递增
        monkeypatch.setattr(
            construction, "exact_radius",
            lambda spec: Fraction(1, 3) + Fraction(1, 9 * spec.m) + Fraction(spec.m, 1000),
        )
        code, out = run("tradeoff", "3", "1", "2", "--m-list", "1,2")
        assert code == 1
        assert out == ""

    def test_radius_dump_lp(self, run, codefile, tmp_path):
        target = tmp_path / "pair.tsv"
        code, out = run("radius", codefile(3, SIMPLEX_ROWS), "--list", "0,1", "--dump-lp", str(target))
        assert code == 0
        assert json.loads(out)["chebyshev"] == "1/2"
        with open(target, encoding="utf-8") as f:
            rows = list(csv.reader(f, delimiter="\t"))
        # 6 个坐标各 3 个 y，T，两个松弛变量
        assert rows[0][0] == "row" and rows[0][-1] == "rhs"
        assert rows[0][19] == "T"
        assert len(rows[0]) == 1 + 6 * 3 + 1 + 2 + 1
        assert rows[1][0] == "objective"

    def test_radius_report(self, run, codefile, load_schema):
        code, out = run("radius", codefile(3, SIMPLEX_ROWS), "--list", "0,1", "--omega", "3/4,1/4")
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, load_schema("radius_report.schema.json"))
        assert data["chebyshev"] == "1/2"
        assert set(data["weighted"]) == {"U_L", "omega_1"}

    def test_radius_over_budget(self, run, codefile, load_schema, tiny_budget):
        code, out = run("radius", codefile(3, SIMPLEX_ROWS))
        assert code == 3
        data = json.loads(out)
        jsonschema.validate(data, load_schema("radius_report.schema.json"))
        assert data["chebyshev"] is None
        assert data["notes"]


class TestVerifyCommands:

    def test_pass_and_fail(self, run, codefile, load_schema):
        path = codefile(3, SIMPLEX_ROWS)
        schema = load_schema("verdict.schema.json")
        code, out = run("verify", path, "1/3")
        assert code == 0
        jsonschema.validate(json.loads(out), schema)
        code, out = run("verify", path, "1/2", "1", "2", "--method", "radius")
        assert code == 1
        data = json.loads(out)
        jsonschema.validate(data, schema)
        assert data["verdict"] == "FAIL"

    def test_ball_search_over_budget(self, run, codefile, tiny_budget):
        code, _ = run("verify", codefile(3, SIMPLEX_ROWS), "1/3")
        assert code == 3

    def test_abundance(self, run, codefile, load_schema):
        code, out = run("abundance", codefile(3, SIMPLEX_ROWS), "--epsilon", "1/9")
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, load_schema("abundance.schema.json"))
        assert data["close_tuples"] == 6
        assert data["biased"] is True


class TestUsage:

    @pytest.mark.parametrize("argv", [
        [],
        ["threshold", "2", "x", "2"],
        ["--threads", "0", "threshold", "2", "1", "2"],
        ["threshold", "2", "2", "3"],
        ["verify", "missing-file.txt", "1/3"],
        ["radius", "missing-file.txt", "--omega", "1/2,1/3"],
    ])
    def test_bad_arguments(self, run, argv):
        code, _ = run(*argv)
        assert code == 2

    def test_propsuite_list(self, run):
        code, out = run("propsuite", "--list")
        assert code == 0
        assert "radius_sandwich" in out
        assert "tradeoff_residual" in out


@pytest.mark.slow
class TestPropertySuite:

    def test_deterministic(self, run):
        first = run("--seed", "3", "propsuite", "--trials", "2")
        second = run("propsuite", "--trials", "2", "--seed", "3")
        assert first == second
        assert first[1].splitlines()[-1].endswith("项通过")

    def test_json(self, run, load_schema):
        code, out = run("propsuite", "--trials", "1", "--json")
        data = json.loads(out)
        assert data["passed"] == (code == 0)
        assert len(data["properties"]) == 19
        jsonschema.validate(data, load_schema("propsuite.schema.json"))
