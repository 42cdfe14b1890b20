"""JSON schema of a record file."""
from __future__ import annotations

import json

DECIMAL = {"oneOf": [{"type": "number"},
                     {"type": "string", "pattern": r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$"}]}
POSITIVE = {"oneOf": [{"type": "number", "exclusiveMinimum": 0},
                      {"type": "string", "pattern": r"^\+?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$"}]}
INT_MATRIX = {"type": "array", "minItems": 1, "items": {"type": "array", "minItems": 1, "items": {"type": "integer"}}}
DEC_MATRIX = {"type": "array", "minItems": 1, "items": {"type": "array", "minItems": 1, "items": DECIMAL}}
NONNEG = {"type": "integer", "minimum": 0}


def _record(with_sub: bool) -> dict:
    props = {
        "group": {
            "type": "object",
            "required": ["two_m", "d"],
            "additionalProperties": False,
            "properties": {"two_m": {"type": "integer", "minimum": 2, "multipleOf": 2},
                           "d": {"type": "integer", "minimum": 1}},
        },
        "field_summary": {
            "type": "object",
            "required": ["h_K", "h_Kplus", "R_K", "R_Kplus", "t_S", "e", "c"],
            "additionalProperties": False,
            "properties": {"h_K": {"type": "integer", "minimum": 1}, "h_Kplus": {"type": "integer", "minimum": 1},
                           "R_K": POSITIVE, "R_Kplus": POSITIVE, "t_S": NONNEG, "e": NONNEG,
                           "e_prime": NONNEG, "c": NONNEG, "c_prime": NONNEG},
        },
        "minus_units": {
            "type": "object",
            "required": ["gamma_action", "log_embeddings", "precision"],
            "additionalProperties": False,
            "properties": {"gamma_action": INT_MATRIX, "log_embeddings": DEC_MATRIX, "precision": POSITIVE},
        },
        "class_minus": {
            "type": "object",
            "required": ["ring", "relations"],
            "additionalProperties": False,
            "properties": {
                "ring": {"enum": ["Z", "Z[i]", "Z[H]", "O"]},
                "relations": {"type": "array", "items": {
                    "type": "array", "minItems": 1,
                    "items": {"type": "array", "minItems": 1, "items": {"type": "integer"}}}},
            },
        },
        "l_values": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["chi_exponent", "re", "im", "precision"],
                "additionalProperties": False,
                "properties": {"chi_exponent": {"type": "integer"}, "re": DECIMAL, "im": DECIMAL,
                               "precision": POSITIVE},
            },
        },
        "provenance": {
            "type": "object",
            "required": ["oracle", "version", "defining_polynomials"],
            "properties": {"oracle": {"type": "string"}, "version": {"type": "string"},
                           "defining_polynomials": {"type": "array", "items": {"type": "string"}}},
        },
    }
    required = ["group", "field_summary", "minus_units", "class_minus", "l_values", "provenance"]
    if with_sub:
        props["sub_extension_F"] = _record(False)
    else:
        required.remove("provenance")
    return {"type": "object", "required": required, "properties": props, "additionalProperties": False}


RECORD_SCHEMA = {"$schema": "https://json-schema.org/draft/2020-12/schema",
                 "title": "ExtensionRecord", **_record(True)}


def schema_text() -> str:
    return json.dumps(RECORD_SCHEMA, indent=2, sort_keys=True)
