"""JSON forms of characters, verdicts, diagrams and suite reports.

Groups are written with ``str(group)`` (``"A1"``, ``"A1xB3"``), which
``parse_group`` reads back.  Labels of a simple group are lists of ints;
labels of a product group are lists of such lists.  Every number is an
exact integer.
"""

from __future__ import annotations

import json

from .charengine import FormalChar
from .rootdata import ProductGroup, parse_group
from .superalg import MFVerdict, RepDiagram, Submodule


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _label_to_json(group, label):
    if isinstance(group, ProductGroup):
        return [list(w) for w in label]
    return list(label)


def _label_from_json(group, data):
    if isinstance(group, ProductGroup):
        return tuple(tuple(w) for w in data)
    return tuple(data)


def char_to_json(fc: FormalChar) -> dict:
    return {
        "group": str(fc.group),
        "terms": [
            {"label": _label_to_json(fc.group, lab), "multiplicity": m}
            for lab, m in fc.items()
        ],
        "dimension": fc.dimension(),
    }


def char_from_json(data: dict) -> FormalChar:
    g = parse_group(data["group"])
    return FormalChar(g, {_label_from_json(g, t["label"]): t["multiplicity"] for t in data["terms"]})


def diagram_to_json(d: RepDiagram) -> dict:
    return {
        "name": d.name,
        "factors": [{"name": n, "group": str(g)} for n, g in zip(d.factor_names, d.factors)],
        "submodules": [
            {
                "name": s.name,
                "parity": s.parity,
                "weights": [list(w) for w in s.weights],
                "dual": s.dual_mark,
            }
            for s in d.submodules
        ],
    }


def diagram_from_json(data: dict) -> RepDiagram:
    factors = tuple(parse_group(f["group"]) for f in data["factors"])
    subs = tuple(
        Submodule(s["parity"], tuple(tuple(w) for w in s["weights"]), s["dual"], s["name"])
        for s in data["submodules"]
    )
    return RepDiagram(factors, subs, data["name"], tuple(f["name"] for f in data["factors"]))


def verdict_to_json(v: MFVerdict, d: RepDiagram) -> dict:
    out = {
        "diagram": d.name,
        "status": v.status,
        "bound": v.bound,
        "components_checked": v.components_checked,
        "witness": None,
    }
    if v.witness is not None:
        w = v.witness
        out["witness"] = {
            "multiindex": w.multiindex.format(d),
            "degrees": list(w.multiindex.degrees),
            "label": [list(x) for x in w.label],
            "multiplicity": w.multiplicity,
        }
    return out


_INT = {"type": "integer"}
_WEIGHT = {"type": "array", "items": _INT}

FORMAL_CHAR_SCHEMA = {
    "type": "object",
    "required": ["group", "terms", "dimension"],
    "additionalProperties": False,
    "properties": {
        "group": {"type": "string"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "multiplicity"],
                "additionalProperties": False,
                "properties": {
                    "label": {"anyOf": [_WEIGHT, {"type": "array", "items": _WEIGHT}]},
                    "multiplicity": {"type": "integer", "minimum": 1},
                },
            },
        },
        "dimension": {"type": "integer", "minimum": 0},
    },
}

DIAGRAM_SCHEMA = {
    "type": "object",
    "required": ["name", "factors", "submodules"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "factors": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name", "group"],
                "additionalProperties": False,
                "properties": {"name": {"type": "string"}, "group": {"type": "string"}},
            },
        },
        "submodules": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name", "parity", "weights", "dual"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "parity": {"enum": ["even", "odd"]},
                    "weights": {"type": "array", "items": _WEIGHT},
                    "dual": {"type": "boolean"},
                },
            },
        },
    },
}

MF_VERDICT_SCHEMA = {
    "type": "object",
    "required": ["diagram", "status", "bound", "components_checked", "witness"],
    "additionalProperties": False,
    "properties": {
        "diagram": {"type": "string"},
        "status": {"enum": ["mf_up_to_bound", "not_mf"]},
        "bound": {"type": "integer", "minimum": 1},
        "components_checked": {"type": "integer", "minimum": 0},
        "component": FORMAL_CHAR_SCHEMA,
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["multiindex", "degrees", "label", "multiplicity"],
                    "additionalProperties": False,
                    "properties": {
                        "multiindex": {"type": "string"},
                        "degrees": {"type": "array", "items": _INT},
                        "label": {"type": "array", "items": _WEIGHT},
                        "multiplicity": {"type": "integer", "minimum": 2},
                    },
                },
            ]
        },
    },
}

SUITE_REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "status", "cases", "anchors"],
    "additionalProperties": False,
    "properties": {
        "suite": {"type": "string"},
        "status": {"enum": ["pass", "fail"]},
        "anchors": {"type": "array", "items": {"type": "string"}},
        "timings": {"type": "object"},
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "anchor", "expected", "computed", "status"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "anchor": {"type": "string"},
                    "expected": {"type": "string"},
                    "computed": {"type": "string"},
                    "status": {"enum": ["pass", "fail"]},
                    "time": {"type": "number", "minimum": 0},
                },
            },
        },
    },
}
