from __future__ import annotations

import json

import pytest

from supermf import charengine as ce
from supermf.charengine import FormalChar
from supermf.verify import tables
from supermf.verify.suites import Engine, fmt_char, fmt_label, run_suite, suite_names


class CubeForSquare(Engine):
    """Returns S^3 whenever S^2 is asked for."""

    def sym_power(self, g, label, k):
        return super().sym_power(g, label, 3 if k == 2 else k)


def test_suite_names():
    assert suite_names() == [
        "dualities-vs-oracle",
        "plethysm-closed-forms",
        "branching",
        "theorem-positives",
        "section5-negatives",
        "section6-negatives",
        "lemma-big-mama",
        "lemma-proof1-distinctness",
        "three-factor",
        "closure-properties",
    ]
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_injected_fault_is_reported_with_diff():
    report = run_suite("dualities-vs-oracle", engine=CubeForSquare())
    assert report.status == "fail"
    bad = report.case("sym[n=2,m=2,k=2]")
    assert bad.status == "fail"
    assert "diff:" in bad.computed and "expected 1, got 0" in bad.computed
    assert all(c.case_id.startswith("sym[") and "k=2]" in c.case_id for c in report.failures())
    assert report.case("ext[n=2,m=2,k=2]").status == "pass"


def test_exceptions_become_failed_cases():
    class Broken(Engine):
        def ext_power(self, g, label, k):
            raise RuntimeError("boom")

    report = run_suite("dualities-vs-oracle", engine=Broken())
    c = report.case("ext[n=3,m=3,k=1]")
    assert c.status == "fail" and "RuntimeError: boom" in c.computed


def test_witness_table_case():
    report = run_suite("section5-negatives")
    c = report.case("Sp6:C+C")
    assert c.status == "pass"
    assert c.expected == c.computed


def test_big_mama():
    report = run_suite("lemma-big-mama")
    assert report.passed
    assert report.case("lr[(3,2,1);(2,1),(2,1)]").computed == "2"


def test_reports_are_byte_identical():
    a = json.dumps(run_suite("three-factor").to_json(), sort_keys=True)
    ce.clear_memo()
    b = json.dumps(run_suite("three-factor", jobs=3).to_json(), sort_keys=True)
    assert a == b


def test_text_report():
    text = run_suite("lemma-big-mama").to_text()
    assert text.startswith("suite lemma-big-mama: pass")
    assert "anchor:" in text and "[" not in text.splitlines()[0]


def test_witness_rows_are_well_formed():
    for w in tables.simple_group_cases() + tables.two_factor_cases():
        assert len(w.idx) == len(w.diagram.submodules), w.case_id
        assert len(w.label) == len(w.diagram.factors), w.case_id
        assert w.printed_label == (w.printed if w.printed is not None else w.label)


def test_formatting():
    assert fmt_label((1, 0)) == "(1,0)"
    assert fmt_label(((1,), (0, 1))) == "(1)x(0,1)"
    from supermf.rootdata import SL

    assert fmt_char(FormalChar(SL(2), {(2,): 2, (0,): 1})) == "2*(2) + (0)"
    assert fmt_char(FormalChar(SL(2), {})) == "0"
