from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supermf.dsl import ParseError, SourceSpan, parse_diagram, render_diagram
from supermf.rootdata import E6, G2, SL, SO, Sp
from supermf.superalg import make_diagram

SOURCE = """\
diagram "example graph"
group G1 = SL(4)
group G2 = SL(2)
group G3 = SO(7)
even U1 = G1:std * G2:std
odd  W1 = G2:std * G3:std      # a comment
"""


def test_parse_example():
    d = parse_diagram(SOURCE)
    assert d.name == "example graph"
    assert d.factors == (SL(4), SL(2), SO(7))
    assert d.factor_names == ("G1", "G2", "G3")
    assert [s.name for s in d.submodules] == ["U1", "W1"]
    assert d.submodules[0].weights == ((1, 0, 0), (1,), (0, 0, 0))
    assert d.submodules[1].weights == ((0, 0, 0), (1,), (1, 0, 0))
    assert d.submodules[1].parity == "odd"


def test_weight_forms():
    d = parse_diagram(
        'diagram "w"\ngroup A = SL(3)\ngroup B = SO(3)\n'
        "even U = A:part(2,1) * B:std\nodd W = A:[0,1]^*\neven V = A:triv * B:[4]\n"
    )
    assert d.submodules[0].weights == ((1, 1), (2,))
    assert d.submodules[1].dual_mark and d.submodules[1].weights == ((0, 1), (0,))
    assert d.submodules[2].weights == ((0, 0), (4,))


def test_spin_sugar():
    d = parse_diagram('diagram "s"\ngroup A = Spin(7)\ngroup B = Spin(8)-\nodd W = A:std * B:std\n')
    assert d.factors == (SO(7), SO(8))
    assert d.submodules[0].weights == ((0, 0, 1), (0, 0, 0, 1))
    d = parse_diagram('diagram "s"\ngroup B = Spin(10)\neven U = B:std\n')
    assert d.submodules[0].weights == ((0, 0, 0, 1, 0),)


def test_exceptional_groups():
    d = parse_diagram('diagram "e"\ngroup X = E6\ngroup Y = G2\neven U = X:std\nodd W = Y:std\n')
    assert d.factors == (E6, G2)
    assert d.submodules[1].weights == ((0,) * 6, (1, 0))


def test_crlf_and_comments():
    d = parse_diagram(SOURCE.replace("\n", "\r\n"))
    assert d == parse_diagram(SOURCE)
    assert parse_diagram("# lead\n" + SOURCE) == parse_diagram(SOURCE)


def test_round_trip_of_example():
    d = parse_diagram(SOURCE)
    assert parse_diagram(render_diagram(d)) == d
    assert render_diagram(parse_diagram(render_diagram(d))) == render_diagram(d)


groups = st.sampled_from([SL(2), SL(3), SO(5), Sp(4), SO(8), G2])


@st.composite
def diagrams(draw):
    factors = draw(st.lists(groups, min_size=1, max_size=3))
    subs = []
    for _ in range(draw(st.integers(1, 3))):
        ws = [tuple(draw(st.integers(0, 2)) for _ in range(f.rank)) for f in factors]
        if not any(any(w) for w in ws):
            ws[0] = (1,) + ws[0][1:]
        subs.append((draw(st.sampled_from(["even", "odd"])), ws, draw(st.booleans())))
    name = draw(st.text(alphabet='ab "\\x', max_size=6))
    return make_diagram(factors, subs, name)


@settings(max_examples=60, deadline=None)
@given(diagrams())
def test_render_parse_round_trip(d):
    assert parse_diagram(render_diagram(d)) == d


def _error(text):
    with pytest.raises(ParseError) as info:
        parse_diagram(text)
    return info.value


def test_error_spans():
    text = 'diagram "x"\ngroup A = SL(4)\neven U = A:[1,0]\n'
    e = _error(text)
    assert "weight length 2" in e.message
    assert (e.span.line, e.span.column) == (3, 12)
    assert text[e.span.start:e.span.end] == "[1,0]"

    text = 'diagram "x"\ngroup A = SL(4)\neven U = B:std\n'
    e = _error(text)
    assert "unknown factor" in e.message and text[e.span.start:e.span.end] == "B"

    text = 'diagram "x"\ngroup A = SO(4)\neven U = A:std\n'
    e = _error(text)
    assert text[e.span.start:e.span.end] == "SO(4)"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "'diagram'"),
        ('diagram "x"\n', "at least one group"),
        ('diagram "x"\ngroup A = SL(2)\n', "at least one submodule"),
        ('diagram "x"\ngroup A = SL(2)\ngroup A = SL(3)\neven U = A:std\n', "duplicate factor"),
        ('diagram "x"\ngroup A = SL(2)\neven U = A:std\nodd U = A:std\n', "duplicate submodule"),
        ('diagram "x"\ngroup A = SL(2)\neven U = A:std * A:std\n', "used twice"),
        ('diagram "x"\ngroup A = SL(2)\neven U = A:triv\n', "trivial"),
        ('diagram "x"\ngroup A = F4\neven U = A:std\n', "unknown group type"),
        ('diagram "x"\ngroup A = Spin(7)+\neven U = A:std\n', "chirality"),
        ('diagram "x"\ngroup A = Sp(5)\neven U = A:std\n', "even"),
        ('diagram "x"\ngroup A = SL(2)\neven U = A:std extra\n', "unexpected"),
        ('diagram "x"\ngroup A = SL(2)\neven U = A:\n', "expected a weight"),
        ('diagram "x"\ngroup A = SL(2)\neven U = A:std $\n', ""),
    ],
)
def test_errors(text, fragment):
    e = _error(text)
    assert fragment in e.message
    assert isinstance(e.span, SourceSpan)
    assert e.span.line >= 1 and e.span.column >= 1
    assert str(e).startswith(f"{e.span.line}:{e.span.column}:")


def test_span_validation():
    with pytest.raises(ValueError):
        SourceSpan(1, 1, 5, 4)
