"""
Тесты командной строки clique-powers.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from clique_powers.main import app, parse_range, render_markdown_table
from clique_powers.exceptions import InputError
from clique_powers.theorems import REGISTRY, TheoremEntry
from clique_powers.types import TableCell, TheoremReport, Verdict
from clique_powers.validation import validate_document

PROJECT_ROOT = Path(__file__).parent.parent


class TestParseRange:
    """Тесты разбора диапазонов."""

    @pytest.mark.parametrize(
        "text, expected",
        [("3..6", [3, 4, 5, 6]), ("2,4,6", [2, 4, 6]), ("7", [7]), ("1..2,5", [1, 2, 5]), (None, [])],
    )
    def test_forms(self, text, expected):
        assert parse_range(text) == expected

    def test_garbage(self):
        with pytest.raises(InputError, match="cannot parse"):
            parse_range("3-20")


class TestGraphCommands:
    """Тесты gen, power и complex."""

    def test_gen_cycle(self, runner):
        result = runner.invoke(app, ["gen", "cycle", "5"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert "# family: cycle" in lines
        assert "5 5" in lines
        assert "0 4" in lines

    def test_gen_random_records_seed(self, runner):
        result = runner.invoke(app, ["gen", "random", "6", "--seed", "3", "--p", "0.4"])
        assert result.exit_code == 0
        assert "# seed: 3" in result.stdout
        assert "# prng: PCG64" in result.stdout
        assert "# p: 0.4" in result.stdout

    def test_gen_json(self, runner):
        result = runner.invoke(app, ["gen", "complete", "4", "--format", "json"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        validate_document("graph", document)
        assert document["vertex_count"] == 4
        assert len(document["edges"]) == 6

    def test_gen_to_file(self, runner, tmp_path):
        target = tmp_path / "p4.txt"
        result = runner.invoke(app, ["gen", "path", "4", "--output", str(target)])
        assert result.exit_code == 0
        assert target.read_text(encoding="utf-8").splitlines()[-1] == "2 3"

    def test_gen_derived_family(self, runner, edge_list_file):
        result = runner.invoke(app, ["gen", "line", "--input", str(edge_list_file)])
        assert result.exit_code == 0
        assert "6 6" in result.stdout.splitlines()

    def test_gen_unknown_family(self, runner):
        result = runner.invoke(app, ["gen", "hypercube", "3"])
        assert result.exit_code == 2
        assert "unknown family" in result.stderr

    def test_gen_wrong_parameters(self, runner):
        result = runner.invoke(app, ["gen", "circular", "8", "2"])
        assert result.exit_code == 2

    def test_power(self, runner):
        result = runner.invoke(app, ["power", "6", "--family", "cycle", "--r", "2"])
        assert result.exit_code == 0
        assert "6 12" in result.stdout.splitlines()

    def test_power_from_file(self, runner, edge_list_file):
        result = runner.invoke(app, ["power", "--input", str(edge_list_file), "--r", "3"])
        assert result.exit_code == 0
        assert "6 15" in result.stdout.splitlines()

    def test_power_needs_graph(self, runner):
        result = runner.invoke(app, ["power", "--r", "2"])
        assert result.exit_code == 2

    def test_complex_facets(self, runner):
        result = runner.invoke(app, ["complex", "4", "--family", "cycle"])
        assert result.exit_code == 0
        assert "4 4" in result.stdout.splitlines()

    def test_complex_json(self, runner):
        result = runner.invoke(app, ["complex", "6", "--family", "cycle", "--power", "2", "--format", "json"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        validate_document("complex", document)
        assert document["f_vector"] == [6, 12, 8]

    def test_independence_complex(self, runner):
        result = runner.invoke(app, ["complex", "5", "--family", "cycle", "--complex", "independence"])
        assert result.exit_code == 0
        assert "5 5" in result.stdout.splitlines()


class TestHomologyCommand:
    """Тесты команды homology."""

    def test_cycle_square(self, runner):
        result = runner.invoke(app, ["homology", "6", "--family", "cycle", "--power", "2"])
        assert result.exit_code == 0
        assert "type: S^2" in result.stdout
        assert "tier: exact" in result.stdout

    def test_independence(self, runner):
        result = runner.invoke(app, ["homology", "6", "--family", "cycle", "--complex", "independence"])
        assert result.exit_code == 0
        assert "type: v^2 S^1" in result.stdout

    def test_facet_list_input(self, runner, facet_list_file):
        result = runner.invoke(app, ["homology", "--complex-input", str(facet_list_file)])
        assert result.exit_code == 0
        assert "type: S^1" in result.stdout

    def test_json(self, runner):
        result = runner.invoke(app, ["homology", "--family", "petersen", "--format", "json"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        validate_document("profile", document)
        assert document["profile"]["betti"][1] == 6

    def test_csv(self, runner):
        result = runner.invoke(app, ["homology", "5", "--family", "cycle", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "dimension,betti,torsion"
        assert "1,1," in lines

    def test_resource_ceiling(self, runner, small_face_limit):
        result = runner.invoke(app, ["homology", "12", "--family", "cycle", "--power", "3"])
        assert result.exit_code == 2
        assert "limit" in result.stderr


class TestCheckCommand:
    """Тесты команды check и кодов завершения."""

    def test_list(self, runner):
        result = runner.invoke(app, ["check", "--list"])
        assert result.exit_code == 0
        listed = {line.split()[0] for line in result.stdout.splitlines() if line.strip()}
        assert listed == set(REGISTRY)

    def test_pass(self, runner):
        result = runner.invoke(app, ["check", "table", "--n", "6..7", "--r", "2"])
        assert result.exit_code == 0
        assert "2 pass" in result.stdout

    def test_json_reports(self, runner):
        result = runner.invoke(app, ["check", "kozlov", "--m", "3..6", "--format", "json", "--metrics"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        validate_document("reports", document)
        assert [r["parameters"]["m"] for r in document["reports"]] == [3, 4, 5, 6]
        assert document["metrics"]["total_reports"] == 4

    def test_csv_reports(self, runner):
        result = runner.invoke(app, ["check", "girth-sharpness", "--r", "2", "--format", "csv"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "theorem,parameters,verdict"
        assert result.stdout.splitlines()[1].endswith(",pass")

    def test_input_graph(self, runner):
        result = runner.invoke(app, ["check", "square-condition", "6", "--family", "cycle", "--format", "json"])
        assert result.exit_code == 0
        report = json.loads(result.stdout)["reports"][0]
        assert report["evidence"]["witness"] == [0, 2, 4]

    def test_fail_exit_code(self, runner, monkeypatch):
        def failing(request):
            return [
                lambda: TheoremReport(
                    theorem="table", verdict=Verdict.FAIL, parameters={"n": 6, "r": 2}, counterexample={"cell": "S^1"}
                )
            ]

        monkeypatch.setitem(REGISTRY, "table", TheoremEntry("table", "always fails", failing))
        result = runner.invoke(app, ["check", "table"])
        assert result.exit_code == 1

    def test_resource_exit_code(self, runner, small_face_limit):
        result = runner.invoke(app, ["check", "table", "--n", "12", "--r", "3", "--format", "json"])
        assert result.exit_code == 2
        assert json.loads(result.stdout)["reports"][0]["verdict"] == "resource"

    def test_precondition_exit_code(self, runner):
        result = runner.invoke(app, ["check", "girth-collapse", "12", "--family", "cycle", "--r", "4"])
        assert result.exit_code == 2
        assert "girth" in result.stderr

    def test_unknown_theorem(self, runner):
        result = runner.invoke(app, ["check", "riemann"])
        assert result.exit_code == 2
        assert "available" in result.stderr

    def test_missing_theorem(self, runner):
        result = runner.invoke(app, ["check"])
        assert result.exit_code == 2

    def test_save(self, runner, temp_results_dir, monkeypatch):
        from clique_powers.config import settings

        monkeypatch.setattr(settings, "results_dir", str(temp_results_dir))
        result = runner.invoke(app, ["check", "kneser", "--k", "1", "--save", "kneser.json"])
        assert result.exit_code == 0
        saved = json.loads((temp_results_dir / "kneser.json").read_text(encoding="utf-8"))
        validate_document("reports", saved)


class TestTableCommand:
    """Тесты команды table."""

    def test_markdown(self, runner):
        result = runner.invoke(app, ["table", "8"])
        assert result.exit_code == 0
        assert "| C_6 | v^5 S^0 | S^1 | S^2 | * |  | yes |" in result.stdout.splitlines()

    def test_predicted_only(self, runner):
        result = runner.invoke(app, ["table", "30", "--n-min", "25", "--predicted-only"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert len(lines) == 2 + 6
        assert lines[-1].startswith("| C_30 | v^29 S^0 |")

    def test_json(self, runner):
        result = runner.invoke(app, ["table", "5", "--format", "json"])
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        validate_document("table", document)
        assert len(document["cells"]) == 2 + 3 + 3
        assert all(cell["agrees"] for cell in document["cells"])

    def test_csv(self, runner):
        result = runner.invoke(app, ["table", "4", "--format", "csv"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "n,r,predicted,computed,tier,agrees,faces"

    def test_bad_range(self, runner):
        result = runner.invoke(app, ["table", "2"])
        assert result.exit_code == 2

    def test_render_disagreement(self):
        cells = [
            TableCell(n=5, r=0, predicted="v^4 S^0", computed="v^4 S^0", agrees=True, faces=6),
            TableCell(n=5, r=1, predicted="S^1", computed="S^2", agrees=False, faces=11),
        ]
        rendered = render_markdown_table(cells).splitlines()
        assert rendered[0] == "| n | r=0 | r=1 | agrees |"
        assert rendered[2] == "| C_5 | v^4 S^0 | S^2 (expected S^1) | no |"


class TestModuleEntryPoint:
    """Запуск через python -m."""

    def test_help(self):
        env = {**os.environ, "PYTHONPATH": str(PROJECT_ROOT / "src")}
        result = subprocess.run(
            [sys.executable, "-m", "clique_powers", "--help"],
            capture_output=True,
            text=True,
            cwd=PROJECT_ROOT,
            env=env,
            timeout=60,
        )
        assert result.returncode == 0, result.stderr
        assert "homology" in result.stdout
        assert "table" in result.stdout
