"""
Tester för kommandoradsgränssnittet
"""
import json

from click.testing import CliRunner

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.cli import cli, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCommands:
    def test_table(self, capsys):
        """Testa att kurvtabellen skrivs som JSON"""
        code, out, _ = invoke(capsys, "table", "--genus", "3", "--boundaries", "2")
        report = json.loads(out)
        assert code == 0
        assert report["outputs"]["curves"]["c1"] == [0, 0, 0, 0, 1, 0, 0, 0]
        assert report["verdict"] == "report-only"
        assert "elapsed_ms" not in report

    def test_tau(self, capsys):
        """Testa τ av (1234)"""
        code, out, _ = invoke(capsys, "tau", "--genus", "3", "--chain", "1234")
        assert code == 0
        assert json.loads(out)["outputs"]["triples"] == [["x1", "y1", "y2", 1]]

    def test_sigma(self, capsys):
        """Testa σ av (1234)"""
        code, out, _ = invoke(capsys, "sigma", "--genus", "3", "--chain", "1234")
        assert code == 0
        assert json.loads(out)["outputs"]["monomials"] == [["x1", "y1"], ["x1", "y1", "y2"]]

    def test_single_curve_chain(self, capsys):
        """Testa att (12) är giltig och har τ = 0"""
        code, out, _ = invoke(capsys, "tau", "--genus", "3", "--chain", "12")
        assert code == 0
        assert json.loads(out)["outputs"]["triples"] == []

    def test_malformed_chain(self, capsys):
        """Testa att (1) ger slutkod 2"""
        code, out, err = invoke(capsys, "tau", "--genus", "3", "--chain", "1")
        assert code == 2
        assert out == ""
        assert "odd" in err

    def test_unknown_flag(self, capsys):
        """Testa att okända flaggor ger slutkod 2"""
        code, _, err = invoke(capsys, "rank", "--genus", "3", "--bogus")
        assert code == 2
        assert "Usage" in err

    def test_verify(self, capsys):
        """Testa att J1 verifieras vid g = 3"""
        code, out, _ = invoke(capsys, "verify", "--relation", "J1", "--k", "3", "--genus", "3")
        report = json.loads(out)
        assert code == 0
        assert report["verdict"] == "pass"
        assert report["outputs"]["tau_defect"] == []

    def test_rank(self, capsys):
        """Testa rangen vid g = 3"""
        code, out, _ = invoke(capsys, "rank", "--genus", "3", "--boundaries", "2")
        outputs = json.loads(out)["outputs"]
        assert code == 0
        assert outputs["expected"] == 64
        assert outputs["computed"] == 64

    def test_span_dmin(self, capsys):
        """Testa sökningen efter minsta frögrad"""
        code, out, _ = invoke(capsys, "span", "--genus", "3", "--what", "dmin")
        outputs = json.loads(out)["outputs"]
        assert code == 0
        assert outputs["dimension"] == 2
        assert outputs["closures"]["1"] == 15

    def test_rewrite(self, capsys):
        """Testa omskrivning med T^{-1}_{c_3}"""
        code, out, _ = invoke(capsys, "rewrite", "--genus", "3", "--twist", "3", "--sign", "-1", "--chain", "1356")
        assert code == 0
        assert json.loads(out)["outputs"]["word"] == "[1456]"

    def test_rewrite_without_rule(self, capsys):
        """Testa att en saknad regel ger slutkod 2"""
        code, _, _ = invoke(capsys, "rewrite", "--genus", "3", "--twist", "3", "--chain", "b567")
        assert code == 2

    def test_graph(self, capsys):
        """Testa grafkommandot"""
        code, out, _ = invoke(capsys, "graph", "--genus", "7", "--m", "3")
        report = json.loads(out)
        assert code == 0
        assert report["outputs"]["connected"] is True
        assert report["verdict"] == "pass"

    def test_max_dim_guard(self, capsys):
        """Testa att för stora genus avvisas"""
        code, _, err = invoke(capsys, "table", "--genus", "12")
        assert code == 2
        assert "max-dim" in err

    def test_deterministic(self, capsys):
        """Testa att samma indata ger byte-identisk JSON"""
        _, first, _ = invoke(capsys, "enumerate", "--genus", "3")
        _, second, _ = invoke(capsys, "enumerate", "--genus", "3")
        assert first == second
        assert json.loads(first)["outputs"]["count"] == 131

    def test_timing_flag(self, capsys):
        """Testa att --timing tar med elapsed_ms"""
        _, out, _ = invoke(capsys, "table", "--genus", "3", "--timing", "--json-indent", "2")
        assert "elapsed_ms" in json.loads(out)


class TestRunner:
    def test_exit_code_through_runner(self):
        """Testa slutkoden via CliRunner"""
        result = CliRunner().invoke(cli, ["verify", "--relation", "J3", "--k", "4", "--genus", "3"])
        assert result.exit_code == 0

    def test_input_error_through_runner(self):
        """Testa slutkod 2 via CliRunner"""
        result = CliRunner().invoke(cli, ["verify", "--relation", "J1", "--k", "9", "--genus", "3"])
        assert result.exit_code == 2
