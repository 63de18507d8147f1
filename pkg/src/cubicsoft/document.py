"""JSON documents for cubic soft sets (schema_version "1").

Layout::

    {
      "schema_version": "1",
      "universe": ["p1", "p2"],
      "parameters": [{"name": "e1", "negated": false}, ...],
      "grades": {"e1": {"p1": {"ivf": ["0.3", "0.7"], "fuzzy": "0.5"}, ...}, ...}
    }

``grades`` is keyed by the parameter label: the bare name, prefixed with
``¬`` when negated.  Product parameters additionally carry a ``pair`` list
with their two component parameters.
"""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .core import CubicGrade, CubicSoftSet, Interval, ParameterId, format_unit, parse_unit_value
from .errors import DuplicateParameter, InvertedInterval, MalformedDocument, MissingGrade

SCHEMA_VERSION = "1"

_PARAM_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["name", "negated"],
    "properties": {
        "name": {"type": "string"},
        "negated": {"type": "boolean"},
        "pair": {
            "type": "array",
            "minItems": 2,
            "maxItems": 2,
            "items": {"$ref": "#/$defs/parameter"},
        },
    },
    "additionalProperties": False,
}

DOCUMENT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "universe", "parameters", "grades"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "universe": {"type": "array", "items": {"type": "string"}},
        "parameters": {"type": "array", "items": {"$ref": "#/$defs/parameter"}},
        "grades": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "additionalProperties": {
                    "type": "object",
                    "required": ["ivf", "fuzzy"],
                    "properties": {
                        "ivf": {"type": "array", "minItems": 2, "maxItems": 2},
                        "fuzzy": {},
                    },
                    "additionalProperties": False,
                },
            },
        },
    },
    "additionalProperties": False,
    "$defs": {"parameter": _PARAM_SCHEMA},
}

_validator = jsonschema.Draft202012Validator(DOCUMENT_SCHEMA)


def _param_to_json(p: ParameterId) -> dict[str, Any]:
    out: dict[str, Any] = {"name": p.name, "negated": p.negated}
    if p.pair is not None:
        out["pair"] = [_param_to_json(p.pair[0]), _param_to_json(p.pair[1])]
    return out


def _param_from_json(obj: dict[str, Any]) -> ParameterId:
    if "pair" in obj:
        a, b = (_param_from_json(o) for o in obj["pair"])
        p = ParameterId.product(a, b)
        if p.name != obj["name"]:
            raise MalformedDocument(f"pair parameter name {obj['name']!r} should be {p.name!r}")
        return ParameterId(p.name, obj["negated"], p.pair)
    return ParameterId(obj["name"], obj["negated"])


def to_document(s: CubicSoftSet) -> dict[str, Any]:
    labels = [p.label for p in s.params]
    if len(set(labels)) != len(labels):
        dup = next(p for p in s.params if labels.count(p.label) > 1)
        raise DuplicateParameter(dup)
    grades = {}
    for p in s.params:
        grades[p.label] = {
            x: {
                "ivf": [format_unit(g.ivf.lo), format_unit(g.ivf.hi)],
                "fuzzy": format_unit(g.fuzzy),
            }
            for x in s.universe
            for g in (s.grades[(p, x)],)
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "universe": list(s.universe),
        "parameters": [_param_to_json(p) for p in s.params],
        "grades": grades,
    }


def from_document(doc: Any) -> CubicSoftSet:
    """Validate a parsed document and build the soft set.

    Shape problems raise :class:`MalformedDocument`; value and totality
    problems raise the specific invariant error, checked in
    (parameter order, universe order) so the first failure is reported.
    """
    err = next(iter(sorted(_validator.iter_errors(doc), key=lambda e: list(e.path))), None)
    if err is not None:
        path = "/".join(str(p) for p in err.path) or "<root>"
        raise MalformedDocument(f"{path}: {err.message}")
    universe = doc["universe"]
    params = [_param_from_json(o) for o in doc["parameters"]]
    seen: dict[str, ParameterId] = {}
    for p in params:
        if p.label in seen:
            raise DuplicateParameter(p)
        seen[p.label] = p
    extra = set(doc["grades"]) - set(seen)
    if extra:
        raise MalformedDocument(f"grades for undeclared parameters: {sorted(extra)}")
    grades = {}
    for p in params:
        row = doc["grades"].get(p.label, {})
        stray = set(row) - set(universe)
        if stray:
            raise MalformedDocument(f"grades for {p.label} name unknown elements: {sorted(stray)}")
        for x in universe:
            if x not in row:
                raise MissingGrade(p, x)
            where = f"({p.label}, {x})"
            cell = row[x]
            lo = parse_unit_value(cell["ivf"][0], where)
            hi = parse_unit_value(cell["ivf"][1], where)
            fz = parse_unit_value(cell["fuzzy"], where)
            if lo > hi:
                raise InvertedInterval(lo, hi, where)
            grades[(p, x)] = CubicGrade(Interval(lo, hi), fz)
    return CubicSoftSet(universe, params, grades)


def load_cubic_soft_set(document: str | bytes | dict) -> CubicSoftSet:
    """Load from JSON text or an already parsed object.

    ``json.JSONDecodeError`` propagates for unparsable text.
    """
    if isinstance(document, (str, bytes)):
        document = json.loads(document)
    return from_document(document)


def dumps(s: CubicSoftSet) -> str:
    return dump_json(to_document(s))


def dump_json(obj: Any) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
