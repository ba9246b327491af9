from __future__ import annotations

import jsonschema
import pytest

from supermf import jsonio
from supermf.charengine import FormalChar, sym_power
from supermf.rootdata import G2, SL, ProductGroup
from supermf.superalg import is_super_mf, make_diagram
from supermf.verify.suites import run_suite


def g2_pair():
    return make_diagram([G2], [("even", [(1, 0)]), ("odd", [(1, 0)])], "g2")


def test_char_round_trip():
    g = ProductGroup((SL(2), SL(3)))
    fc = FormalChar(g, {((1,), (1, 0)): 2, ((0,), (0, 0)): 1})
    data = jsonio.char_to_json(fc)
    jsonschema.validate(data, jsonio.FORMAL_CHAR_SCHEMA)
    assert data["dimension"] == 13
    assert jsonio.char_from_json(data) == fc
    simple = sym_power(SL(3), FormalChar.irreducible(SL(3), (1, 1)), 2)
    assert jsonio.char_from_json(jsonio.char_to_json(simple)) == simple


def test_diagram_round_trip():
    d = make_diagram([SL(3), SL(2)], [("even", [(1, 0), (1,)]), ("odd", [(0, 1), (0,)], True)], "d")
    data = jsonio.diagram_to_json(d)
    jsonschema.validate(data, jsonio.DIAGRAM_SCHEMA)
    assert jsonio.diagram_from_json(data) == d


def test_verdict_json():
    d = g2_pair()
    data = jsonio.verdict_to_json(is_super_mf(d, 3), d)
    jsonschema.validate(data, jsonio.MF_VERDICT_SCHEMA)
    assert data["witness"] == {"multiindex": "(1|2)", "degrees": [1, 2], "label": [[1, 0]], "multiplicity": 2}
    ok = make_diagram([SL(3)], [("even", [(1, 0)])])
    data = jsonio.verdict_to_json(is_super_mf(ok, 3), ok)
    jsonschema.validate(data, jsonio.MF_VERDICT_SCHEMA)
    assert data["witness"] is None and data["status"] == "mf_up_to_bound"


def test_schema_rejects_bad_verdicts():
    bad = {"diagram": "x", "status": "maybe", "bound": 3, "components_checked": 1, "witness": None}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, jsonio.MF_VERDICT_SCHEMA)


def test_suite_report_schema():
    data = run_suite("dualities-vs-oracle").to_json()
    jsonschema.validate(data, jsonio.SUITE_REPORT_SCHEMA)
    timed = run_suite("dualities-vs-oracle").to_json(timings=True)
    jsonschema.validate(timed, jsonio.SUITE_REPORT_SCHEMA)
    assert "time" in timed["cases"][0] and "time" not in data["cases"][0]


def test_dumps_is_canonical():
    assert jsonio.dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
