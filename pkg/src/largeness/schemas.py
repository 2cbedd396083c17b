"""JSON Schemas (draft 2020-12) for every file the CLI reads or writes.

Integers are always decimal strings so arbitrarily large values survive
round trips through any JSON tool.
"""
from __future__ import annotations

INT = {"type": "string", "pattern": "^-?[0-9]+$"}
PAIR = {"type": "array", "items": INT, "minItems": 2, "maxItems": 2}

POLYNOMIAL = {
    "type": "object",
    "required": ["coeffs"],
    "properties": {"coeffs": {"type": "array", "items": INT, "minItems": 1}},
    "additionalProperties": False,
}

_PARAM = {"anyOf": [INT, {"type": "array", "items": {"$ref": "#/$defs/param"}},
                    {"type": "boolean"}, {"type": "null"}]}

SET_DESCRIPTOR = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {
        "param": _PARAM,
        "set": {
            "type": "object",
            "required": ["variant", "universe"],
            "properties": {"universe": {"enum": ["naturals", "integers"]}},
            "oneOf": [
                {"properties": {"variant": {"const": "interval_union"},
                                "intervals": {"type": "array", "items": PAIR}},
                 "required": ["intervals"]},
                {"properties": {"variant": {"const": "explicit_sorted"},
                                "elements": {"type": "array", "items": INT}},
                 "required": ["elements"]},
                {"properties": {"variant": {"const": "complement"},
                                "inner": {"$ref": "#/$defs/set"}},
                 "required": ["inner"]},
                {"properties": {"variant": {"const": "construction_backed"},
                                "rule": {"enum": ["ip_star", "ipn_star", "delta_star",
                                                  "central_star"]},
                                "params": {"type": "object",
                                           "additionalProperties": {"$ref": "#/$defs/param"}}},
                 "required": ["rule", "params"]},
            ],
        },
    },
    "$ref": "#/$defs/set",
}


def _with_set_defs(schema: dict) -> dict:
    out = {"$schema": SET_DESCRIPTOR["$schema"], "$defs": SET_DESCRIPTOR["$defs"]}
    out.update(schema)
    return out


CONSTRUCTION_RESULT = _with_set_defs({
    "type": "object",
    "required": ["name", "polys", "parameters", "generators", "S", "A", "claims",
                 "fiber_universe", "provenance"],
    "properties": {
        "name": {"type": "string"},
        "polys": {"type": "array", "items": POLYNOMIAL, "minItems": 1},
        "parameters": {"type": "object",
                       "additionalProperties": {"anyOf": [{"$ref": "#/$defs/param"},
                                                          {"type": "string"}]}},
        "generators": {"type": "array", "items": PAIR},
        "S": {"anyOf": [{"$ref": "#/$defs/set"}, {"type": "null"}]},
        "A": {"anyOf": [{"$ref": "#/$defs/set"}, {"type": "null"}]},
        "S_enumeration": {
            "type": "object",
            "required": ["window", "elements"],
            "properties": {"window": PAIR, "elements": {"type": "array", "items": INT}},
        },
        "claims": {
            "type": "array",
            "items": {"type": "object", "required": ["id", "kind", "description"],
                      "properties": {"id": {"type": "string"}, "kind": {"type": "string"},
                                     "description": {"type": "string"}}},
        },
        "fiber_universe": {"enum": ["naturals2", "integers2"]},
        "provenance": {
            "type": "object",
            "required": ["package", "version"],
            "properties": {"package": {"type": "string"}, "version": {"type": "string"}},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
})

_WITNESS_ITEM = {"anyOf": [INT, {"type": "array", "items": INT}]}

VERIFY_REPORT = {
    "$schema": SET_DESCRIPTOR["$schema"],
    "type": "object",
    "required": ["construction", "claims", "verified", "total", "exit_code"],
    "properties": {
        "construction": {"type": "string"},
        "claims": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "kind", "status", "detail", "witness"],
                "properties": {
                    "id": {"type": "string"},
                    "kind": {"type": "string"},
                    "status": {"enum": ["verified", "violated", "inconclusive"]},
                    "detail": {"type": "string"},
                    "witness": {"type": "array", "items": _WITNESS_ITEM},
                },
                "additionalProperties": False,
            },
        },
        "verified": INT,
        "total": INT,
        "exit_code": {"enum": ["0", "1", "2"]},
    },
    "additionalProperties": False,
}

WITNESS_REPORT = {
    "$schema": SET_DESCRIPTOR["$schema"],
    "type": "object",
    "required": ["kind", "verdict", "witness", "bounds"],
    "properties": {
        "kind": {"enum": ["ip", "delta", "thick", "pws", "block_2d"]},
        "verdict": {"enum": ["witness_found", "exhausted", "inconclusive"]},
        "witness": {"type": "array", "items": _WITNESS_ITEM},
        "bounds": {"type": "object"},
    },
    "additionalProperties": False,
}

SYNDETIC_REPORT = {
    "$schema": SET_DESCRIPTOR["$schema"],
    "type": "object",
    "required": ["kind", "max_gap", "window"],
    "properties": {
        "kind": {"const": "syndetic"},
        "max_gap": {"anyOf": [INT, {"type": "null"}]},
        "window": PAIR,
    },
    "additionalProperties": False,
}

LATTICE = {
    "$schema": SET_DESCRIPTOR["$schema"],
    "type": "object",
    "required": ["nodes", "edges"],
    "properties": {
        "nodes": {"type": "array", "items": {"type": "string"}, "uniqueItems": True},
        "edges": {"type": "array",
                  "items": {"type": "array", "items": {"type": "string"},
                            "minItems": 2, "maxItems": 2}},
    },
    "additionalProperties": False,
}

FIBER_CSV_HEADER = "m,n"
FIBER_CSV_ROW = r"^-?[0-9]+,-?[0-9]+$"

SCHEMAS = {
    "polynomial": POLYNOMIAL,
    "set": SET_DESCRIPTOR,
    "construct": CONSTRUCTION_RESULT,
    "verify": VERIFY_REPORT,
    "witness": WITNESS_REPORT,
    "syndetic": SYNDETIC_REPORT,
    "lattice": LATTICE,
}
