"""Recursive-descent parser for the expression grammar.

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := rational | 'zeta' | var | '(' expr ')'
    var    := ('x'|'z') uint

Whitespace is insignificant.  Printing an MPoly and parsing it back yields
the identical canonical form.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclo import CycloNum
from .errors import ExprSyntaxError, UnknownVariable
from .poly import MPoly

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+\d*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprSyntaxError(f"unexpected character {stripped[0]!r}", pos)
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: str, nvars: int, conductor: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet
        self.nvars = nvars
        self.conductor = conductor

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, symbol):
        kind, value, pos = self.next()
        if kind != "op" or value != symbol:
            raise ExprSyntaxError(f"expected {symbol!r}", pos)

    def _const(self, value) -> MPoly:
        return MPoly.constant(value, self.alphabet, self.nvars, self.conductor)

    def parse(self) -> MPoly:
        result = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected trailing {value!r}", pos)
        return result

    def expr(self) -> MPoly:
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value == "-":
            self.next()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                rhs = self.term()
                acc = acc + rhs if value == "+" else acc - rhs
            else:
                return acc

    def term(self) -> MPoly:
        acc = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.next()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> MPoly:
        base = self.base()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.next()
            k, v, pos = self.next()
            if k != "int":
                raise ExprSyntaxError("expected integer exponent", pos)
            return base ** int(v)
        return base

    def base(self) -> MPoly:
        kind, value, pos = self.next()
        if kind == "int":
            num = int(value)
            k, v, _ = self.peek()
            if k == "op" and v == "/":
                self.next()
                k2, v2, pos2 = self.next()
                if k2 != "int":
                    raise ExprSyntaxError("expected denominator", pos2)
                return self._const(Fraction(num, int(v2)))
            return self._const(num)
        if kind == "name":
            if value == "zeta":
                return self._const(CycloNum.zeta(self.conductor))
            m = re.fullmatch(r"([A-Za-z])(\d+)", value)
            if m and m.group(1) == self.alphabet:
                index = int(m.group(2))
                if not 1 <= index <= self.nvars:
                    raise UnknownVariable(f"variable {value!r} out of range", pos)
                return MPoly.variable(index, self.alphabet, self.nvars, self.conductor)
            raise UnknownVariable(f"unknown symbol {value!r}", pos)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ExprSyntaxError(f"unexpected token {value!r}", pos)


def parse_expr(text: str, alphabet: str = "x", nvars: int = 2, conductor: int = 12) -> MPoly:
    """Parse an expression into a canonical MPoly."""
    return _Parser(text, alphabet, nvars, conductor).parse()


def parse_scalar(text: str, conductor: int = 12) -> CycloNum:
    """Parse a variable-free expression into a CycloNum."""
    p = parse_expr(text, alphabet="x", nvars=1, conductor=conductor)
    if p.total_degree() > 0:
        raise ExprSyntaxError("expected a scalar expression", 0)
    return p.coefficient((0,))
