"""Curve spec files (JSON or TOML).

Either roots are given directly::

    {"field_order": 4, "roots": [1, -1]}

or the symmetric normal form with roots c_i * xi^(2j)::

    [normal_form]
    k = 3
    params = [1, 4]

A field element is an integer, a "p/q" string, {"order": M, "coeffs": [...]} in the
power basis of Q(zeta_M), or {"order": M, "power": j, "scale": q} for q * zeta_M^j.
"""

import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

import jsonschema

from .curve import HyperellipticCurve, NormalFormSpec, curve_from_roots, curve_normal_form
from .field import CycloElem, cyclo_new, field_context, root_of_unity

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


class SpecParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        super().__init__(message)
        self.line = line
        self.column = column

    def as_dict(self) -> dict:
        return {"line": self.line, "column": self.column}


_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*-?\d+\s*(/\s*\d+\s*)?$"},
        {
            "type": "array",
            "items": {"type": ["string", "integer"]},
            "minItems": 2,
            "maxItems": 2,
        },
    ]
}

_ELEMENT = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*-?\d+\s*(/\s*\d+\s*)?$"},
        {
            "type": "object",
            "properties": {
                "order": {"type": "integer", "minimum": 1},
                "coeffs": {"type": "array", "items": _RATIONAL},
            },
            "required": ["order", "coeffs"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "order": {"type": "integer", "minimum": 1},
                "power": {"type": "integer"},
                "scale": _RATIONAL,
            },
            "required": ["order", "power"],
            "additionalProperties": False,
        },
    ]
}

SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "field_order": {"type": "integer", "minimum": 1},
        "roots": {"type": "array", "items": _ELEMENT},
        "normal_form": {
            "type": "object",
            "properties": {
                "k": {"type": "integer", "minimum": 1},
                "params": {"type": "array", "items": _ELEMENT, "minItems": 1},
            },
            "required": ["k", "params"],
            "additionalProperties": False,
        },
        "format": {"enum": ["json", "text"]},
    },
    "oneOf": [
        {"required": ["roots"], "not": {"required": ["normal_form"]}},
        {"required": ["normal_form"], "not": {"required": ["roots"]}},
    ],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class CurveSpec:
    curve: HyperellipticCurve
    format: Optional[str] = None
    source: str = "-"


def _rational(raw: Any) -> Fraction:
    try:
        if isinstance(raw, list):
            return Fraction(int(raw[0]), int(raw[1]))
        if isinstance(raw, str):
            return Fraction(raw.replace(" ", ""))
        return Fraction(raw)
    except ZeroDivisionError as e:
        raise SpecParseError(f"Zero denominator in {raw!r}") from e


def parse_element(raw: Any) -> CycloElem:
    if isinstance(raw, dict):
        order = raw["order"]
        if "power" in raw:
            return root_of_unity(order, raw["power"]) * _rational(raw.get("scale", 1))
        return cyclo_new(field_context(order), [_rational(c) for c in raw["coeffs"]])
    return CycloElem.rational(_rational(raw))


def _toml_position(error: Exception) -> tuple[Optional[int], Optional[int]]:
    line = getattr(error, "lineno", None)
    column = getattr(error, "colno", None)
    if line is None:
        match = re.search(r"line (\d+), column (\d+)", str(error))
        if match:
            line, column = int(match.group(1)), int(match.group(2))
    return line, column


def load_document(text: str, suffix: str = "") -> dict:
    """Decode JSON or TOML; without a .toml/.json suffix JSON is tried first."""
    if suffix == ".toml":
        try:
            return tomllib.loads(text)
        except tomllib.TOMLDecodeError as e:
            raise SpecParseError(f"Invalid TOML: {e}", *_toml_position(e)) from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        if suffix == ".json":
            raise SpecParseError(f"Invalid JSON: {e.msg}", e.lineno, e.colno) from e
        json_error = e
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError:
        raise SpecParseError(
            f"Input is neither JSON nor TOML: {json_error.msg}",
            json_error.lineno,
            json_error.colno,
        ) from json_error


def spec_from_document(document: Any, source: str = "-") -> CurveSpec:
    try:
        jsonschema.validate(document, SCHEMA)
    except jsonschema.ValidationError as e:
        location = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SpecParseError(f"{source}: {location}: {e.message}") from e

    field_order = document.get("field_order", 1)
    if "roots" in document:
        roots = [parse_element(r) for r in document["roots"]]
        curve = curve_from_roots(field_order, roots)
    else:
        nf = document["normal_form"]
        spec = NormalFormSpec(nf["k"], tuple(parse_element(c) for c in nf["params"]))
        curve = curve_normal_form(spec)
        if curve.field_order % field_order:
            curve = curve_from_roots(field_order, curve.roots)
    return CurveSpec(curve, document.get("format"), source)


def parse_spec(text: str, source: str = "-") -> CurveSpec:
    suffix = Path(source).suffix.lower() if source != "-" else ""
    return spec_from_document(load_document(text, suffix), source)


def read_spec(path: str) -> CurveSpec:
    if path == "-":
        return parse_spec(sys.stdin.read(), "-")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise SpecParseError(f"{path}: not valid UTF-8: {e.reason}") from e
    except OSError as e:
        raise SpecParseError(f"{path}: {e.strerror or e}") from e
    return parse_spec(text, path)
