"""
Общие фикстуры для тестов.
"""

import shutil
import sys
import tempfile
from pathlib import Path

import pytest
from typer.testing import CliRunner

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from clique_powers.config import settings
from clique_powers.core.graph import Graph
from clique_powers.families import complete, cycle, path, petersen, three_sun


@pytest.fixture
def temp_results_dir():
    """Временная директория для результатов тестов."""
    temp_dir = tempfile.mkdtemp()
    yield Path(temp_dir)
    shutil.rmtree(temp_dir)


@pytest.fixture
def runner():
    """CliRunner с раздельным stderr."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture
def small_face_limit(monkeypatch):
    """Ограничение на число граней, которое срабатывает на небольших комплексах."""
    monkeypatch.setattr(settings, "face_limit", 40)
    return 40


@pytest.fixture
def named_graphs() -> dict[str, Graph]:
    """Небольшие именованные графы."""
    return {
        "C5": cycle(5),
        "C6": cycle(6),
        "P4": path(4),
        "K4": complete(4),
        "3-sun": three_sun(),
        "petersen": petersen(),
        "two-edges": Graph(4, [(0, 1), (2, 3)]),
    }


@pytest.fixture
def edge_list_file(tmp_path):
    """Файл со списком рёбер цикла C_6."""
    path = tmp_path / "c6.txt"
    path.write_text("# family: cycle\n6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n", encoding="utf-8")
    return path


@pytest.fixture
def facet_list_file(tmp_path):
    """Файл с гранями границы треугольника."""
    path = tmp_path / "circle.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n", encoding="utf-8")
    return path
