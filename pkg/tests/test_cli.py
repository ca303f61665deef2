from __future__ import annotations

import json
from pathlib import Path

import pytest

from tradeopt.cli import main

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"
STATIC = str(SCENARIO_DIR / "static_baseline.json")
DYNAMIC = str(SCENARIO_DIR / "two_period_baseline.json")
DISCRETE = str(SCENARIO_DIR / "six_point_enumeration.json")
INFER = str(SCENARIO_DIR / "implied_valuation.json")
CHAIN = str(SCENARIO_DIR / "four_period_chain.json")


class TestSolve:
    def test_static_text_output_uses_four_decimals(self, capsys):
        assert main(["solve", STATIC]) == 0
        out = capsys.readouterr().out
        assert "0.8575" in out
        assert "5.1450" in out
        assert "1.1662e+12" in out
        assert "PASS" in out

    def test_dynamic_text_output(self, capsys):
        assert main(["solve", DYNAMIC]) == 0
        out = capsys.readouterr().out
        for expected in ("1.3904", "2.2352", "0.0274", "0.8179", "3.6315e+12"):
            assert expected in out

    def test_chain_text_output(self, capsys):
        assert main(["solve", CHAIN]) == 0
        out = capsys.readouterr().out
        assert "Total discounted benefit" in out
        assert "PASS" in out

    def test_chain_verify_reports_the_oracle_gap(self, capsys):
        assert main(["solve", CHAIN, "--json", "--verify", "--oracle-points", "1000"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert len(report["diagnostics"]["kkt"]) == 3
        assert abs(report["diagnostics"]["oracle"]["relative_gap"]) <= 1e-4

    def test_json_output_is_full_precision(self, capsys):
        from tradeopt import PossibilityFrontier, StaticScenario, Valuation, solve_static

        expected = solve_static(
            StaticScenario(PossibilityFrontier(10, 0.1, 10), Valuation(1e6, 6e4))
        )
        assert main(["solve", STATIC, "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["solution"]["allocation"]["lives_saved"] == expected.allocation.lives_saved
        assert report["solution"]["z_star"] == expected.z_star
        assert report["solution"]["z_star_scaled"] == pytest.approx(1.16619e12, rel=1e-4)
        assert report["diagnostics"]["kkt"]["passed"] is True

    def test_verify_reports_the_oracle_gap(self, capsys):
        assert main(["solve", STATIC, "--json", "--verify", "--oracle-points", "100000"]) == 0
        report = json.loads(capsys.readouterr().out)
        oracle = report["diagnostics"]["oracle"]
        assert oracle["n_points"] == 100000
        assert abs(oracle["relative_gap"]) <= 1e-6

    def test_trace_writes_sectioned_tsv(self, tmp_path, capsys):
        out_file = tmp_path / "plot.tsv"
        assert main(["solve", STATIC, "--trace", "9", "--trace-out", str(out_file)]) == 0
        lines = out_file.read_text().splitlines()
        assert "# series: frontier" in lines
        assert "# series: optimum" in lines
        assert "# series: tangent" in lines
        frontier_rows = [
            l for l in lines[lines.index("# series: frontier") + 1:] if not l.startswith("#")
        ][:9]
        assert len(frontier_rows) == 9
        first = frontier_rows[0].split("\t")
        assert [float(x) for x in first[:3]] == [0.0, 1.0, 0.0]
        # tangent rows sit at the optimum's objective level
        tangent_rows = lines[lines.index("# series: tangent") + 1:]
        z_values = {row.split("\t")[3] for row in tangent_rows}
        assert len(z_values) == 1

    def test_trace_rejected_for_dynamic(self, capsys):
        assert main(["solve", DYNAMIC, "--trace", "10"]) == 2

    def test_missing_file_is_an_io_error(self, capsys):
        assert main(["solve", "does_not_exist.json"]) == 3

    def test_invalid_json_is_a_validation_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["solve", str(bad)]) == 2

    def test_domain_violation_names_the_field(self, tmp_path, capsys):
        doc = json.loads(Path(STATIC).read_text())
        doc["payload"]["frontier"]["a"] = -1
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        assert main(["solve", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "frontier.a" in err
        assert "NON_POSITIVE_PARAMETER" in err

    def test_solve_rejects_discrete_files(self, capsys):
        assert main(["solve", DISCRETE]) == 2


class TestEnumerate:
    def test_table_and_best_point(self, capsys):
        assert main(["enumerate", DISCRETE]) == 0
        out = capsys.readouterr().out
        assert "<- best" in out
        assert "(0.8000, 6.0000)" in out

    def test_json_rows_are_exact(self, capsys):
        assert main(["enumerate", DISCRETE, "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert [row["z"] for row in report["rows"]] == [
            600000.0, 788000.0, 952000.0, 1080000.0, 1160000.0, 1000000.0,
        ]
        assert [row["z_scaled"] for row in report["rows"]] == [
            600e9, 788e9, 952e9, 1080e9, 1160e9, 1000e9,
        ]
        assert report["best_index"] == 4
        assert report["tied"] is False

    def test_wrong_kind_is_rejected(self, capsys):
        assert main(["enumerate", STATIC]) == 2


class TestSensitivity:
    def test_level_sensitivity_matches_the_multiplier(self, capsys):
        assert main(["sensitivity", STATIC, "--param", "c", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["d_z"] == pytest.approx(5.831e4, rel=1e-3)

    def test_invalid_parameter_name(self, capsys):
        assert main(["sensitivity", STATIC, "--param", "z"]) == 2

    def test_step_out_of_range(self, capsys):
        assert main(["sensitivity", STATIC, "--param", "c", "--step", "0.5"]) == 2


class TestInfer:
    def test_recovers_the_price_ratio(self, capsys):
        assert main(["infer", INFER, "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["implied_price_ratio"] == pytest.approx(1e6 / 6e4, rel=1e-9)

    def test_text_output(self, capsys):
        assert main(["infer", INFER]) == 0
        assert "16.6667" in capsys.readouterr().out

    def test_off_frontier_observation(self, tmp_path, capsys):
        doc = json.loads(Path(INFER).read_text())
        doc["payload"]["observed"]["lives_saved"] = 0.95
        bad = tmp_path / "off.json"
        bad.write_text(json.dumps(doc))
        assert main(["infer", str(bad)]) == 2
        assert "OFF_FRONTIER_OBSERVATION" in capsys.readouterr().err
