"""Text format for representation diagrams.

Example::

    diagram "example graph"
    group G1 = SL(4)
    group G2 = SL(2)
    group G3 = SO(7)
    even U1 = G1:std * G2:std
    odd  W1 = G2:std * G3:std      # a comment

Weights are ``[a1,...,ar]`` (fundamental coordinates), ``part(p1,...)``
(partition label), ``std`` or ``triv``.  A trailing ``^*`` marks the dual of
the submodule.  On a ``Spin(m)`` factor ``std`` means the spin
representation; ``Spin(2n)-`` picks the minus half-spin representation.
Factors a submodule does not mention act trivially on it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .rootdata import SL, SO, Sp, E6, E7, G2, GroupType, partition_to_weight, spin_label, standard_weight
from .superalg import RepDiagram, Submodule


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError("span start after end")


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{span.line}:{span.column}: {message}")
        self.message = message
        self.span = span


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    span: SourceSpan


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<dual>\^\*)
  | (?P<punct>[=()\[\],:*+-])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    byte = 0
    line, col = 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        chunk = m.group(0) if m else text[pos]
        nbytes = len(chunk.encode("utf-8"))
        span = SourceSpan(line, col, byte, byte + nbytes)
        if not m:
            raise ParseError(f"unexpected character {chunk!r}", span)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, chunk, span))
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
        byte += nbytes
    toks.append(_Tok("eof", "", SourceSpan(line, col, byte, byte)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.cur
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> _Tok:
        t = self.cur
        if t.kind != kind or (text is not None and t.text != text):
            want = what or (repr(text) if text else kind)
            got = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {want}, got {got}", t.span)
        return self.advance()

    def at_keyword(self, *words: str) -> bool:
        return self.cur.kind == "ident" and self.cur.text in words

    # grammar

    def parse(self) -> RepDiagram:
        self.expect("ident", "diagram", "'diagram'")
        name_tok = self.expect("string", what="diagram name string")
        name = _unquote(name_tok.text)
        factors: list[tuple[str, GroupType, str, _Tok]] = []
        if not self.at_keyword("group"):
            raise ParseError("at least one group required", self.cur.span)
        while self.at_keyword("group"):
            factors.append(self.factor())
        names = {}
        for fname, g, sugar, tok in factors:
            if fname in names:
                raise ParseError(f"duplicate factor name {fname!r}", tok.span)
            names[fname] = (len(names), g, sugar)
        subs = []
        if not self.at_keyword("even", "odd"):
            if self.cur.kind == "eof":
                raise ParseError("at least one submodule required", self.cur.span)
            raise ParseError(f"expected 'even' or 'odd', got {self.cur.text!r}", self.cur.span)
        seen = set()
        while self.at_keyword("even", "odd"):
            sub, tok = self.submodule(names, len(factors))
            if sub.name in seen:
                raise ParseError(f"duplicate submodule name {sub.name!r}", tok.span)
            seen.add(sub.name)
            subs.append(sub)
        if self.cur.kind != "eof":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.span)
        return RepDiagram(
            tuple(g for _, g, _, _ in factors),
            tuple(subs),
            name,
            tuple(n for n, _, _, _ in factors),
        )

    def factor(self):
        self.advance()
        ident = self.expect("ident", what="factor name")
        self.expect("punct", "=")
        g, sugar = self.gtype()
        return ident.text, g, sugar, ident

    def gtype(self) -> tuple[GroupType, str]:
        t = self.expect("ident", what="group type")
        if t.text in ("G2", "E6", "E7"):
            return {"G2": G2, "E6": E6, "E7": E7}[t.text], "plain"
        if t.text not in ("SL", "SO", "Sp", "Spin"):
            raise ParseError(f"unknown group type {t.text!r}", t.span)
        self.expect("punct", "(")
        num = self.expect("int", what="dimension")
        close = self.expect("punct", ")")
        m = int(num.text)
        span = SourceSpan(t.span.line, t.span.column, t.span.start, close.span.end)
        sugar = "plain"
        if t.text == "Spin" and self.cur.kind == "punct" and self.cur.text in "+-":
            sign = self.advance()
            if m % 2:
                raise ParseError("chirality only applies to Spin(2n)", sign.span)
            sugar = "spin-" if sign.text == "-" else "spin+"
        elif t.text == "Spin":
            sugar = "spin+"
        try:
            if t.text == "SL":
                if m < 2:
                    raise ValueError("SL(n) needs n >= 2")
                return SL(m), sugar
            if t.text == "Sp":
                if m < 2 or m % 2:
                    raise ValueError("Sp(m) needs an even m >= 2")
                return Sp(m), sugar
            if m % 2 == 0 and m < 6:
                raise ValueError(f"SO(2n) with n<3 is not supported ({t.text}({m}))")
            if m < 3:
                raise ValueError(f"{t.text}({m}) is not supported")
            return SO(m), sugar
        except ValueError as e:
            raise ParseError(str(e), span) from None

    def submodule(self, names, nfactors: int):
        parity = self.advance().text
        ident = self.expect("ident", what="submodule name")
        self.expect("punct", "=")
        weights = [None] * nfactors
        first = self.cur.span
        last = self.term(names, weights)
        while self.cur.kind == "punct" and self.cur.text == "*":
            self.advance()
            last = self.term(names, weights)
        dual = False
        if self.cur.kind == "dual":
            dual = True
            last = self.advance().span
        span = SourceSpan(first.line, first.column, first.start, last.end)
        ws = []
        for (fname, (k, g, _)) in sorted(names.items(), key=lambda kv: kv[1][0]):
            ws.append(weights[k] if weights[k] is not None else (0,) * g.rank)
        if not any(any(w) for w in ws):
            raise ParseError(f"submodule {ident.text!r} is trivial on every factor", span)
        return Submodule(parity, tuple(ws), dual, ident.text), ident

    def term(self, names, weights) -> SourceSpan:
        ft = self.expect("ident", what="factor name")
        if ft.text not in names:
            raise ParseError(f"unknown factor {ft.text!r}", ft.span)
        k, g, sugar = names[ft.text]
        if weights[k] is not None:
            raise ParseError(f"factor {ft.text!r} used twice in one submodule", ft.span)
        self.expect("punct", ":")
        w, span = self.weight(g, sugar)
        weights[k] = w
        return span

    def weight(self, g: GroupType, sugar: str):
        t = self.cur
        if t.kind == "ident" and t.text in ("std", "triv"):
            self.advance()
            if t.text == "triv":
                return (0,) * g.rank, t.span
            if sugar == "plain":
                return standard_weight(g), t.span
            if g.family == "B":
                return spin_label(g, "full"), t.span
            return spin_label(g, "minus" if sugar == "spin-" else "plus"), t.span
        if t.kind == "ident" and t.text == "part":
            self.advance()
            self.expect("punct", "(")
            parts = [int(self.expect("int", what="integer").text)]
            while self.cur.kind == "punct" and self.cur.text == ",":
                self.advance()
                parts.append(int(self.expect("int", what="integer").text))
            close = self.expect("punct", ")")
            span = SourceSpan(t.span.line, t.span.column, t.span.start, close.span.end)
            try:
                return partition_to_weight(g, parts), span
            except ValueError as e:
                raise ParseError(str(e), span) from None
        if t.kind == "punct" and t.text == "[":
            self.advance()
            coords = [int(self.expect("int", what="integer").text)]
            while self.cur.kind == "punct" and self.cur.text == ",":
                self.advance()
                coords.append(int(self.expect("int", what="integer").text))
            close = self.expect("punct", "]")
            span = SourceSpan(t.span.line, t.span.column, t.span.start, close.span.end)
            if len(coords) != g.rank:
                raise ParseError(f"weight length {len(coords)} ≠ rank {g.rank}", span)
            return tuple(coords), span
        got = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"expected a weight, got {got}", t.span)


def _unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s[1:-1])


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def parse_diagram(text: str) -> RepDiagram:
    """Parse diagram source; raises ``ParseError`` carrying a ``SourceSpan``."""
    try:
        return _Parser(text).parse()
    except ParseError:
        raise
    except ValueError as e:
        # semantic checks inside RepDiagram
        raise ParseError(str(e), SourceSpan(1, 1, 0, 0)) from None


def _group_text(g: GroupType) -> str:
    if g.family == "G":
        return "G2"
    if g.family == "E":
        return f"E{g.rank}"
    return g.classical_name


def render_diagram(d: RepDiagram) -> str:
    """Canonical source text; ``parse_diagram(render_diagram(d)) == d``."""
    lines = [f"diagram {_quote(d.name)}"]
    for name, g in zip(d.factor_names, d.factors):
        lines.append(f"group {name} = {_group_text(g)}")
    for s in d.submodules:
        terms = [
            f"{name}:[{','.join(str(x) for x in w)}]"
            for name, w in zip(d.factor_names, s.weights)
            if any(w)
        ]
        tail = "^*" if s.dual_mark else ""
        lines.append(f"{s.parity} {s.name} = {' * '.join(terms)}{tail}")
    return "\n".join(lines) + "\n"
