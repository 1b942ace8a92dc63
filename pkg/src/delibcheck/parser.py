"""Recursive-descent parser for the two-layer formula syntax.

Grammar (whitespace-insensitive; `<->` accepted as sugar in both layers):

    white := `<<` black `>>` | `[[` black `]]` | `~` white
           | white (`&` | `|` | `->` | `<->`) white
           | `<` IDENT `>` white | `[` IDENT `]` white
           | `E*` white | `A*` white | `(` white `)`
    black := IDENT | `~` black | black (`&` | `|` | `->` | `<->`) black
           | `(` black `)`

Precedence in both layers: unary and modalities bind tightest, then `&`,
then `|`, then `->` (right-associative), then `<->`. All sugar is expanded
during parsing; the resulting ASTs use only the core connectives.
"""

from __future__ import annotations

import re

from .arguments import Arg, arg, is_reserved
from .errors import FormulaSyntaxError, LayerError
from . import formulas as fm

_TOKEN_RE = re.compile(
    r"""
    (?P<LDIA><<) | (?P<RDIA>>>) | (?P<LBB>\[\[) | (?P<RBB>\]\]) |
    (?P<IFF><->) | (?P<IMPL>->) |
    (?P<EX>E\*) | (?P<ALL>A\*) |
    (?P<IDENT>[A-Za-z0-9_]+) |
    (?P<LANG><) | (?P<RANG>>) | (?P<LBR>\[) | (?P<RBR>\]) |
    (?P<NOT>~) | (?P<AND>&) | (?P<OR>\|) | (?P<LP>\() | (?P<RP>\))
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("EOF", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise FormulaSyntaxError(f"expected {what}, found {tok[1] or 'end of input'!r}", tok[2])
        return self.take()

    def ident(self, role: str) -> Arg:
        tok = self.expect("IDENT", f"an argument name ({role})")
        if is_reserved(tok[1]):
            raise FormulaSyntaxError(f"argument name {tok[1]!r} is reserved", tok[2])
        return arg(tok[1])

    # white layer, lowest binding first

    def white(self) -> fm.WhiteFormula:
        lhs = self.white_impl()
        while self.peek()[0] == "IFF":
            self.take()
            lhs = fm.white_iff(lhs, self.white_impl())
        return lhs

    def white_impl(self) -> fm.WhiteFormula:
        lhs = self.white_or()
        if self.peek()[0] == "IMPL":
            self.take()
            return fm.white_implies(lhs, self.white_impl())
        return lhs

    def white_or(self) -> fm.WhiteFormula:
        lhs = self.white_and()
        while self.peek()[0] == "OR":
            self.take()
            lhs = fm.white_or(lhs, self.white_and())
        return lhs

    def white_and(self) -> fm.WhiteFormula:
        lhs = self.white_unary()
        while self.peek()[0] == "AND":
            self.take()
            lhs = fm.WhiteAnd(lhs, self.white_unary())
        return lhs

    def white_unary(self) -> fm.WhiteFormula:
        kind, text, pos = self.peek()
        if kind == "NOT":
            self.take()
            return fm.WhiteNeg(self.white_unary())
        if kind == "LDIA":
            self.take()
            body = self.black()
            self.expect("RDIA", "'>>'")
            return fm.BlackDiamond(body)
        if kind == "LBB":
            self.take()
            body = self.black()
            self.expect("RBB", "']]'")
            return fm.black_box(body)
        if kind == "LANG":
            self.take()
            p = self.ident("update diamond index")
            self.expect("RANG", "'>'")
            return fm.UpdateDiamond(p, self.white_unary())
        if kind == "LBR":
            self.take()
            p = self.ident("update box index")
            self.expect("RBR", "']'")
            return fm.update_box(p, self.white_unary())
        if kind == "EX":
            self.take()
            return fm.ExistsDiamond(self.white_unary())
        if kind == "ALL":
            self.take()
            return fm.white_box(self.white_unary())
        if kind == "LP":
            self.take()
            body = self.white()
            self.expect("RP", "')'")
            return body
        if kind == "IDENT":
            raise LayerError(
                f"argument {text!r} used at the dynamic level; wrap it in << >> or [[ ]]",
                pos,
            )
        raise FormulaSyntaxError(f"expected a formula, found {text or 'end of input'!r}", pos)

    # black layer

    def black(self) -> fm.BlackFormula:
        lhs = self.black_impl()
        while self.peek()[0] == "IFF":
            self.take()
            lhs = fm.black_iff(lhs, self.black_impl())
        return lhs

    def black_impl(self) -> fm.BlackFormula:
        lhs = self.black_or()
        if self.peek()[0] == "IMPL":
            self.take()
            return fm.BlackImplies(lhs, self.black_impl())
        return lhs

    def black_or(self) -> fm.BlackFormula:
        lhs = self.black_and()
        while self.peek()[0] == "OR":
            self.take()
            lhs = fm.black_or(lhs, self.black_and())
        return lhs

    def black_and(self) -> fm.BlackFormula:
        lhs = self.black_unary()
        while self.peek()[0] == "AND":
            self.take()
            lhs = fm.black_and(lhs, self.black_unary())
        return lhs

    def black_unary(self) -> fm.BlackFormula:
        kind, text, pos = self.peek()
        if kind == "NOT":
            self.take()
            return fm.BlackNeg(self.black_unary())
        if kind == "IDENT":
            if is_reserved(text):
                raise FormulaSyntaxError(f"argument name {text!r} is reserved", pos)
            self.take()
            return fm.Atom(arg(text))
        if kind == "LP":
            self.take()
            body = self.black()
            self.expect("RP", "')'")
            return body
        if kind in ("LDIA", "LBB", "LANG", "LBR", "EX", "ALL"):
            raise LayerError(f"dynamic operator {text!r} inside a << >> / [[ ]] block", pos)
        raise FormulaSyntaxError(f"expected a formula, found {text or 'end of input'!r}", pos)


def parse_formula(text: str) -> fm.WhiteFormula:
    """Parse a white-layer formula, expanding all sugar."""
    parser = _Parser(text)
    phi = parser.white()
    kind, tok_text, pos = parser.peek()
    if kind != "EOF":
        raise FormulaSyntaxError(f"unexpected {tok_text!r} after the formula", pos)
    return phi


def parse_black(text: str) -> fm.BlackFormula:
    """Parse a bare black-layer formula (handy for tests and tooling)."""
    parser = _Parser(text)
    alpha = parser.black()
    kind, tok_text, pos = parser.peek()
    if kind != "EOF":
        raise FormulaSyntaxError(f"unexpected {tok_text!r} after the formula", pos)
    return alpha
