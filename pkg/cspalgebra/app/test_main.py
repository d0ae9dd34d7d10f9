"""Tests for the command line."""

import json
from pathlib import Path

import pytest

from cspalgebra import domain_service
from cspalgebra.app import run_cli
from cspalgebra.app.commands import solve as solve_command
from cspalgebra.app.exit_codes import ExitCode
from cspalgebra.engine.settings import settings as engine_settings
from cspalgebra.fixtures.catalog import horn
from cspalgebra.formats import parse_template

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


class TestClassify:
    """Tests for the classify command."""

    def test_k3_is_negative(self, capsys):
        assert run_cli(["classify", fixture_path("k3.tmpl")]) == ExitCode.NEGATIVE
        assert "tractable: no" in capsys.readouterr().out

    def test_horn_is_tractable(self, capsys):
        assert run_cli(["classify", fixture_path("horn.tmpl")]) == ExitCode.OK
        out = capsys.readouterr().out
        assert "tractable: yes" in out
        assert "width 1: yes" in out

    def test_cap_refusal(self):
        assert run_cli(["classify", "k3", "--cap", "10"]) == ExitCode.CAP

    def test_several_templates_keep_order(self, capsys):
        assert run_cli(["classify", "horn", "2sat", "--jobs", "2"]) == ExitCode.OK
        out = capsys.readouterr().out
        assert out.index("horn") < out.index("2sat")

    def test_report_verifies(self, tmp_path, capsys):
        report = tmp_path / "report.json"
        assert run_cli(["classify", "2sat", "horn", "--json", str(report)]) == ExitCode.OK
        doc = json.loads(report.read_text())
        assert [v["template_id"] for v in doc["verdicts"]] == ["2sat", "horn"]
        assert run_cli(["verify-report", str(report)]) == ExitCode.OK
        assert "all witnesses verified" in capsys.readouterr().out

    def test_tampered_report_fails(self, tmp_path):
        report = tmp_path / "report.json"
        run_cli(["classify", "2sat", "--json", str(report)])
        doc = json.loads(report.read_text())
        doc["verdicts"][0]["dual_discriminator"]["witness"]["operations"][0]["table"] = [
            [[0, 0], [0, 0]],
            [[0, 0], [0, 0]],
        ]
        report.write_text(json.dumps(doc))
        assert run_cli(["verify-report", str(report)]) == ExitCode.NEGATIVE


class TestSolve:
    """Tests for the solve command."""

    def test_horn_solvable(self, capsys):
        status = run_cli(["solve", fixture_path("horn.tmpl"), fixture_path("horn-solvable.in")])
        assert status == ExitCode.OK
        out = capsys.readouterr().out
        assert "solved by width1" in out
        assert "3 1" in out.splitlines()

    def test_k4_not_3_colourable(self, capsys):
        assert run_cli(["solve", "k3", fixture_path("k3-k4.in")]) == ExitCode.NEGATIVE
        assert "unsolvable" in capsys.readouterr().out

    def test_seed_order(self, monkeypatch):
        """The order reaches the solver for this call only."""
        monkeypatch.setattr(engine_settings, "variable_order", "mrv")
        orders = []

        def recording_solve(x, s, *, order=None, cap=None):
            orders.append(order)
            return domain_service.solve(x, s, order=order, cap=cap)

        monkeypatch.setattr(solve_command, "solve", recording_solve)
        status = run_cli(["solve", "k3", fixture_path("k3-k4.in"), "--seed-order", "index"])
        assert status == ExitCode.NEGATIVE
        assert orders == ["index"]
        assert engine_settings.variable_order == "mrv"

    def test_solution_report_verifies(self, tmp_path):
        report = tmp_path / "solve.json"
        run_cli(["solve", "horn", fixture_path("horn-solvable.in"), "--json", str(report)])
        assert run_cli(["verify-report", str(report)]) == ExitCode.OK


class TestReduce:
    """Tests for the reduce command."""

    def test_unsolvable_triangle(self, capsys):
        status = run_cli(["reduce", fixture_path("nae-to-k2.json"), fixture_path("k2-triangle.in"), "--solve"])
        assert status == ExitCode.NEGATIVE
        assert capsys.readouterr().out.startswith("interpretation:")

    def test_pulls_back_solutions(self, tmp_path, capsys):
        edge = tmp_path / "edge.in"
        edge.write_text("variables 2\nrel E 2\n0 1\n")
        status = run_cli(["reduce", fixture_path("nae-to-k2.json"), str(edge), "--solve"])
        assert status == ExitCode.OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[-2:] in (["0 0", "1 1"], ["0 1", "1 0"])

    def test_writes_compiled_instance(self, tmp_path):
        out = tmp_path / "compiled.in"
        run_cli(["reduce", fixture_path("nae-to-k2.json"), fixture_path("k2-triangle.in"), "--out", str(out)])
        assert out.read_text().startswith("variables ")


class TestObstruct:
    """Tests for the obstruct command."""

    def test_cycle_obstruction(self, capsys):
        assert run_cli(["obstruct", "k2", fixture_path("k2-triangle.in")]) == ExitCode.OK
        assert "does not return" in capsys.readouterr().out

    def test_acyclic_lift(self, tmp_path, capsys):
        x = tmp_path / "clash.in"
        x.write_text("variables 1\nrel U0 1\n0\nrel U1 1\n0\n")
        lift = tmp_path / "lift.txt"
        assert run_cli(["obstruct", "horn", str(x), "--out", str(lift)]) == ExitCode.OK
        assert "not arc-consistent" in capsys.readouterr().out
        assert run_cli(["obstruct", "horn", str(x), "--lift", str(lift)]) == ExitCode.OK

    def test_no_obstruction(self, tmp_path):
        x = tmp_path / "path.in"
        x.write_text("variables 3\nrel E 2\n0 1\n1 2\n")
        assert run_cli(["obstruct", "k2", str(x)]) == ExitCode.NEGATIVE


class TestGadget:
    """Tests for the gadget command."""

    def test_verify_inverter(self, capsys):
        assert run_cli(["gadget", "verify", "inverter"]) == ExitCode.OK
        assert "PASS (243 boundary patterns)" in capsys.readouterr().out

    def test_transcript(self, capsys):
        run_cli(["gadget", "verify", "inverter", "--transcript"])
        assert len(capsys.readouterr().out.splitlines()) == 244

    def test_setter_needs_pairs(self):
        assert run_cli(["gadget", "verify", "setter"]) == ExitCode.USAGE

    def test_verify_setter(self):
        assert run_cli(["gadget", "verify", "setter", "2"]) == ExitCode.OK

    def test_build_with_coloring(self, tmp_path, capsys):
        edges = tmp_path / "graph.txt"
        status = run_cli(["gadget", "build", fixture_path("example.cnf"), "--coloring", "--out", str(edges)])
        assert status == ExitCode.OK
        assert "satisfying assignment" in capsys.readouterr().out
        assert edges.read_text().startswith("vertices ")


class TestFixtures:
    """Tests for the fixtures command."""

    def test_list(self, capsys):
        assert run_cli(["fixtures", "list"]) == ExitCode.OK
        assert "special-triad" in capsys.readouterr().out

    def test_emit(self, tmp_path):
        out = tmp_path / "horn.tmpl"
        assert run_cli(["fixtures", "emit", "horn", "--out", str(out)]) == ExitCode.OK
        assert parse_template(out.read_text()) == horn()

    def test_unknown(self):
        assert run_cli(["fixtures", "emit", "k9"]) == ExitCode.USAGE


class TestErrors:
    """Tests for exit statuses on bad input."""

    def test_unknown_command(self):
        assert run_cli(["nope"]) == ExitCode.USAGE

    def test_unknown_template(self):
        assert run_cli(["classify", "no-such-template"]) == ExitCode.USAGE

    def test_parse_error_is_positioned(self, tmp_path, capsys):
        bad = tmp_path / "bad.tmpl"
        bad.write_text("domain 2\nrel E 2\n0 1 1\n")
        assert run_cli(["classify", str(bad)]) == ExitCode.USAGE
        assert f"{bad}:3:" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [["--help"], ["classify", "--help"]])
    def test_help(self, argv):
        assert run_cli(argv) == ExitCode.OK
