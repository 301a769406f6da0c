"""
Validation of the JSON documents printed and saved by the command line.
"""

import json
from functools import cache
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator
from jsonschema.exceptions import ValidationError
from loguru import logger
from pydantic import BaseModel

from .exceptions import CliquePowersError
from .types import SCHEMA_VERSION, HomologyProfile, TableCell, TheoremReport

DOCUMENT_KINDS = ("reports", "profile", "table", "complex", "graph")


def _model_schema(model: type[BaseModel], defs: dict[str, Any]) -> dict[str, Any]:
    schema = model.model_json_schema(ref_template="#/$defs/{model}")
    defs.update(schema.pop("$defs", {}))
    return schema


def _envelope(properties: dict[str, Any], defs: dict[str, Any]) -> dict[str, Any]:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["schema_version", *properties],
        "properties": {"schema_version": {"const": SCHEMA_VERSION}, **properties},
        "$defs": defs,
    }


@cache
def document_schema(kind: str) -> dict[str, Any]:
    """JSON Schema for one kind of command-line document."""
    defs: dict[str, Any] = {}
    integer_list = {"type": "array", "items": {"type": "integer"}}
    if kind == "reports":
        schema = _envelope({"reports": {"type": "array", "items": _model_schema(TheoremReport, defs)}}, defs)
        schema["properties"]["metrics"] = {"type": "object"}
    elif kind == "profile":
        schema = _envelope(
            {
                "profile": _model_schema(HomologyProfile, defs),
                "tier": {"enum": ["exact", "field"]},
                "faces": {"type": "integer", "minimum": 0},
                "rendered": {"type": "string"},
            },
            defs,
        )
    elif kind == "table":
        schema = _envelope({"cells": {"type": "array", "items": _model_schema(TableCell, defs)}}, defs)
    elif kind == "complex":
        schema = _envelope(
            {
                "vertex_count": {"type": "integer", "minimum": 0},
                "f_vector": integer_list,
                "facets": {"type": "array", "items": integer_list},
            },
            defs,
        )
    elif kind == "graph":
        schema = _envelope(
            {
                "vertex_count": {"type": "integer", "minimum": 0},
                "edges": {"type": "array", "items": {**integer_list, "minItems": 2, "maxItems": 2}},
            },
            defs,
        )
    else:
        raise CliquePowersError(f"unknown document kind '{kind}'")
    Draft202012Validator.check_schema(schema)
    return schema


def validate_document(kind: str, document: Any) -> None:
    """Raise CliquePowersError when the document does not follow its schema."""
    validator = Draft202012Validator(document_schema(kind))
    errors = sorted(validator.iter_errors(document), key=lambda e: list(e.path))
    if errors:
        first: ValidationError = errors[0]
        location = "/".join(map(str, first.path)) or "<root>"
        raise CliquePowersError(f"{kind} document invalid at {location}: {first.message}")


def validate_document_file(path: Path, kind: str = "reports") -> tuple[bool, list[str]]:
    """Валидирует один сохранённый JSON-документ."""
    try:
        with open(path, encoding="utf-8") as f:
            document = json.load(f)
        validate_document(kind, document)
        return True, []
    except (OSError, json.JSONDecodeError, CliquePowersError) as e:
        logger.error(f"{path}: invalid - {e}")
        return False, [str(e)]
