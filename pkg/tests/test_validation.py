"""
Тесты JSON-схем документов командной строки.
"""

import json

import pytest

from clique_powers.exceptions import CliquePowersError
from clique_powers.types import SCHEMA_VERSION
from clique_powers.validation import DOCUMENT_KINDS, document_schema, validate_document, validate_document_file


class TestDocumentSchemas:
    """Тесты схем."""

    @pytest.mark.parametrize("kind", DOCUMENT_KINDS)
    def test_schema_is_valid(self, kind):
        schema = document_schema(kind)
        assert schema["properties"]["schema_version"] == {"const": SCHEMA_VERSION}

    def test_unknown_kind(self):
        with pytest.raises(CliquePowersError, match="unknown document kind"):
            document_schema("spreadsheet")

    def test_graph_document(self):
        validate_document("graph", {"schema_version": SCHEMA_VERSION, "vertex_count": 3, "edges": [[0, 1]]})

    def test_wrong_version(self):
        with pytest.raises(CliquePowersError, match="schema_version"):
            validate_document("graph", {"schema_version": "0", "vertex_count": 3, "edges": []})

    def test_bad_edge(self):
        with pytest.raises(CliquePowersError, match="edges/0"):
            validate_document("graph", {"schema_version": SCHEMA_VERSION, "vertex_count": 3, "edges": [[0, 1, 2]]})

    def test_report_verdict_enum(self):
        document = {
            "schema_version": SCHEMA_VERSION,
            "reports": [{"theorem": "kozlov", "parameters": {}, "verdict": "maybe", "evidence": {}}],
        }
        with pytest.raises(CliquePowersError, match="reports/0/verdict"):
            validate_document("reports", document)


class TestDocumentFiles:
    """Тесты проверки сохранённых файлов."""

    def test_valid_file(self, tmp_path):
        path = tmp_path / "reports.json"
        path.write_text(json.dumps({"schema_version": SCHEMA_VERSION, "reports": []}), encoding="utf-8")
        assert validate_document_file(path) == (True, [])

    def test_broken_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        ok, errors = validate_document_file(path)
        assert not ok
        assert len(errors) == 1

    def test_missing_file(self, tmp_path):
        ok, _ = validate_document_file(tmp_path / "absent.json", "table")
        assert not ok
