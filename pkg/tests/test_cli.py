"""Problem-file parsing and the JSON-reporting subcommands."""

from __future__ import annotations

import json

import pytest

from liefol.cli import ProblemError, main, parse_problem

BASIC = """\
# a pair of fields on the plane
vars: x y
field v = x*dx + y*dy
field w = -y*dx + x*dy
curve C = x*y - 1
"""

SPATIAL = """\
vars: x y z
field rot = -y*dx + x*dy
field vert = dz
foliation F = rot, vert
map proj = x
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestParseProblem:
    def test_basic(self):
        problem = parse_problem(BASIC)
        assert problem.chart.variables == ("x", "y")
        assert set(problem.fields) == {"v", "w"}
        assert str(problem.curves["C"]) == "x*y - 1"

    def test_vars_must_come_first(self):
        with pytest.raises(ProblemError, match="vars"):
            parse_problem("field v = dx\nvars: x\n")

    def test_duplicate_name_rejected(self):
        text = "vars: x\nfield v = dx\nfield v = x*dx\n"
        with pytest.raises(ProblemError, match="duplicate"):
            parse_problem(text)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ProblemError):
            parse_problem("vars: x\nwidget v = dx\n")

    def test_undeclared_basis(self):
        with pytest.raises(ProblemError):
            parse_problem("vars: x\nfield v = dx + dz\n")

    def test_foliation_references_fields(self):
        with pytest.raises(ProblemError, match="unknown field"):
            parse_problem("vars: x y\nfield v = dx\nfoliation F = v, ghost\n")

    def test_error_carries_line_number(self):
        try:
            parse_problem("vars: x\nfield v = +++\n")
        except ProblemError as err:
            assert err.line == 2
        else:  # pragma: no cover
            pytest.fail("expected a ProblemError")

    def test_comments_and_blanks_ignored(self):
        problem = parse_problem("# top\n\nvars: x\n# middle\nfield v = dx\n")
        assert set(problem.fields) == {"v"}


class TestBracket(object):
    def test_named_pair(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(BASIC)
        code, report = run(capsys, "bracket", str(path), "v", "w")
        assert code == 0
        assert report["status"] == "ok"
        assert report["result"]["coefficients"] == ["0", "0"]

    def test_default_pair_when_exactly_two(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(BASIC)
        code, report = run(capsys, "bracket", str(path))
        assert code == 0
        assert report["inputs"]["v"]["name"] == "v"

    def test_scaling_example(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nfield v = x*dx\nfield w = dx\n")
        code, report = run(capsys, "bracket", str(path), "v", "w")
        assert code == 0
        assert report["result"]["coefficients"] == ["-1", "0"]

    def test_unknown_field_errors(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(BASIC)
        code, report = run(capsys, "bracket", str(path), "v", "ghost")
        assert code == 1
        assert report["status"] == "error"
        assert "ghost" in report["error"]


class TestInvariance:
    def test_foliation_and_curve(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(SPATIAL)
        code, report = run(capsys, "invariance", str(path), "--field", "rot", "--foliation", "F")
        assert code == 0
        assert report["result"]["foliation"]["invariant"] is True

    def test_curve_invariance(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nfield h = x*dx + -1*y*dy\ncurve C = x*y - 1\n")
        code, report = run(capsys, "invariance", str(path), "--curve", "C")
        assert code == 0
        assert report["result"]["curve"]["invariant"] is True

    def test_map_resolves_to_tangent_foliation(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(
            "vars: x y\nfield v = x*dx + -1*y*dy\nmap m = x*y\n"
        )
        code, report = run(capsys, "invariance", str(path), "--field", "v", "--foliation", "m")
        assert code == 0
        assert report["result"]["foliation"]["invariant"] is True

    def test_nothing_to_check(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(BASIC)
        code, report = run(capsys, "invariance", str(path), "--field", "v")
        assert code == 1
        assert "nothing to check" in report["error"]

    def test_witness_on_failure(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nfield shear = x*dy\nfield horiz = dx\nfoliation F = horiz\n")
        code, report = run(capsys, "invariance", str(path), "--field", "shear", "--foliation", "F")
        assert code == 0
        block = report["result"]["foliation"]
        assert block["invariant"] is False
        assert block["witness"] == ["0", "-1"]


class TestFoliation:
    def test_rank_involutivity_singular(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(SPATIAL)
        code, report = run(capsys, "foliation", str(path), "F")
        assert code == 0
        result = report["result"]
        assert result["rank"] == 2
        assert result["involutive"] is True
        assert result["singular_locus"] == ["x", "y"]

    def test_non_involutive_witness(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(
            "vars: x y z\nfield a = dx\nfield b = dy + x*dz\nfoliation H = a, b\n"
        )
        code, report = run(capsys, "foliation", str(path), "H")
        assert code == 0
        result = report["result"]
        assert result["involutive"] is False
        assert result["witness"] == ["0", "0", "1"]

    def test_dependent_generators_note(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(
            "vars: x y\nfield v = x*dx + y*dy\nfield w = 2*x*dx + 2*y*dy\nfoliation F = v, w\n"
        )
        code, report = run(capsys, "foliation", str(path), "F")
        assert code == 0
        result = report["result"]
        assert result["rank"] == 1
        assert result["singular_locus"] is None
        assert "note" in result

    def test_map_argument(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nmap m = x^2 + y^2\n")
        code, report = run(capsys, "foliation", str(path), "m")
        assert code == 0
        assert report["result"]["rank"] == 1


class TestPlanar:
    def test_rotation(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nfield rot = -y*dx + x*dy\n")
        code, report = run(capsys, "planar", str(path))
        assert code == 0
        result = report["result"]
        assert result["Q"] == "x^2 + y^2"
        assert result["line_invariant"] is True
        assert result["rational_infinity_points"] == []

    def test_hyperbolic_with_curve(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nfield h = x*dx + -1*y*dy\ncurve C = x*y - 1\n")
        code, report = run(capsys, "planar", str(path), "--curve", "C")
        assert code == 0
        result = report["result"]
        assert result["Q"] == "-2*x*y"
        assert result["curve_verdict"] == "consistent"
        assert result["rational_infinity_points"] == [["1", "0"], ["0", "1"]]

    def test_radial_degenerates(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nfield v = x*dx + y*dy\n")
        code, report = run(capsys, "planar", str(path))
        assert code == 0
        assert report["result"]["line_invariant"] is False

    def test_three_variable_chart_rejected(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(SPATIAL)
        code, report = run(capsys, "planar", str(path), "--field", "rot")
        assert code == 1


class TestFlowSeries:
    def test_function_target(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nfield v = x*dx + y*dy\ncurve f = x\n")
        code, report = run(capsys, "flow-series", str(path), "f", "--order", "2")
        assert code == 0
        result = report["result"]
        assert result["kind"] == "function"
        assert result["coefficients"] == ["x", "x", "1/2*x"]

    def test_field_target(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x y\nfield v = x*dx\nfield w = dx\n")
        code, report = run(capsys, "flow-series", str(path), "w", "--v", "v", "--order", "2")
        assert code == 0
        result = report["result"]
        assert result["kind"] == "field"
        assert result["coefficients"] == [["1", "0"], ["-1", "0"], ["1/2", "0"]]

    def test_unknown_target(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(BASIC)
        code, report = run(capsys, "flow-series", str(path), "ghost")
        assert code == 1


class TestAnosov:
    def test_default_run(self, capsys):
        code, report = run(capsys, "anosov", "--samples", "6", "--t-max", "25")
        assert code == 0
        result = report["result"]
        assert result["bounds"]["passed"] is True
        assert result["bounds"]["lambda_stable"] == pytest.approx(0.381966011250, abs=1e-9)
        assert [ln["label"] for ln in result["closed_orbit"]["lines"]] == [
            "stable",
            "flow",
            "unstable",
        ]
        assert len(result["closed_orbit"]["planes"]) == 3
        assert result["leaf_density"]["coverage"] == 1.0
        assert result["leaf_density"]["control_coverage"] < 0.9

    def test_swap_bundles_fails(self, capsys):
        code, report = run(capsys, "anosov", "--samples", "4", "--t-max", "20", "--swap-bundles")
        assert code == 0
        assert report["result"]["bounds"]["passed"] is False


class TestErrorReporting:
    def test_missing_file(self, capsys):
        code, report = run(capsys, "bracket", "/no/such/file")
        assert code == 1
        assert report["status"] == "error"

    def test_problem_error_includes_line(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("vars: x\nfield v = ???\n")
        code, report = run(capsys, "bracket", str(path))
        assert code == 1
        assert "line 2" in report["error"]

    def test_stdin_input(self, tmp_path, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(BASIC))
        code, report = run(capsys, "bracket", "-")
        assert code == 0
        assert report["result"]["coefficients"] == ["0", "0"]
