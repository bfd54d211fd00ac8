"""Structured result documents and their canonical JSON rendering.

Reports are plain dicts with a fixed key order and only finite numbers, so
identical inputs render to byte-identical text: floats go through Python's
shortest round-trip repr via json.
"""

from __future__ import annotations

import json
import math
from typing import Any

import jsonschema

from .errors import InternalInvariantError, InvalidArgumentError

SCHEMA_VERSION = "1"

#: Key order of a rendered report; absent optional fields are omitted.
_FIELD_ORDER = (
    "schema_version",
    "command",
    "inputs",
    "coefficients",
    "initial",
    "bases",
    "mse",
    "bound",
    "diagnostics",
    "tables",
)

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "lp-lab report document",
    "type": "object",
    "required": ["schema_version", "command", "inputs"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["synth", "fit", "construct", "experiment"]},
        "inputs": {"type": "object"},
        "coefficients": {"type": "array", "items": {"type": "number"}, "minItems": 1},
        "initial": {"type": "array", "items": {"type": "number"}, "minItems": 1},
        "bases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["rho", "theta", "power", "b", "c"],
                "additionalProperties": False,
                "properties": {
                    "rho": {"type": "number", "exclusiveMinimum": 0},
                    "theta": {"type": "number", "minimum": 0, "maximum": math.pi},
                    "power": {"type": "integer", "minimum": 0},
                    "b": {"type": "number"},
                    "c": {"type": "number"},
                },
            },
        },
        "mse": {"type": "number", "minimum": 0},
        "bound": {"type": "number", "minimum": 0},
        "diagnostics": {"type": "object"},
        "tables": {"type": "array", "items": {"type": "object"}},
    },
}


def _pythonify(value):
    """Recursively convert numpy scalars/arrays into plain Python values."""
    if isinstance(value, dict):
        return {str(k): _pythonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_pythonify(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if hasattr(value, "item"):
        value = value.item()
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InvalidArgumentError("reports cannot contain non-finite numbers")
        return value
    if isinstance(value, int):
        return value
    raise InvalidArgumentError(f"cannot put a {type(value).__name__} in a report")


def build_report(command: str, inputs: dict, **optional) -> dict:
    """Assemble a report document in canonical field order.

    Optional sections (coefficients, initial, bases, mse, bound, diagnostics,
    tables) are included only when not None.
    """
    doc: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "command": command}
    doc["inputs"] = _pythonify(inputs)
    for key in _FIELD_ORDER[3:]:
        value = optional.pop(key, None)
        if value is not None:
            doc[key] = _pythonify(value)
    if optional:
        raise InvalidArgumentError(f"unknown report sections: {sorted(optional)}")
    validate_report(doc)
    return doc


def canonical_document(doc: dict) -> dict:
    """Re-ordered copy of a report with keys in the published order."""
    unknown = set(doc) - set(_FIELD_ORDER)
    if unknown:
        raise InvalidArgumentError(f"unknown report fields: {sorted(unknown)}")
    return {key: doc[key] for key in _FIELD_ORDER if key in doc}


def validate_report(doc: dict) -> None:
    """Check a document against the published schema."""
    try:
        jsonschema.validate(doc, REPORT_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InternalInvariantError(f"report failed schema validation: {exc.message}") from exc


def render_report(doc: dict) -> str:
    """Canonical JSON text of a report: 2-space indent, trailing newline."""
    ordered = canonical_document(doc)
    validate_report(ordered)
    return json.dumps(ordered, indent=2, allow_nan=False) + "\n"
