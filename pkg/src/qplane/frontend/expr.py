"""Expression trees and a recursive-descent parser for quantum-plane input.

Grammar (juxtaposition multiplies, products keep source order)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*
    factor := atom ('^' natural)?
    atom   := 'x' | 'y' | 'q' | integer | integer '/' integer
            | '(' expr ')' | 'exp_q' '(' expr ')'

``/`` between factors divides by a scalar (an expression free of x and y);
``integer '/' integer`` directly is a rational literal. A leading minus is
stored as ``Sub(IntLit(0), ...)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import ExponentTooLarge, ParseError

__all__ = [
    "Var",
    "IntLit",
    "RatLit",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Pow",
    "ExpQ",
    "ExprNode",
    "parse",
    "contains_expq",
    "MAX_EXPONENT",
]

MAX_EXPONENT = 10_000


@dataclass(frozen=True)
class Var:
    name: str  # "x", "y" or "q"


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class RatLit:
    value: Fraction


@dataclass(frozen=True)
class Add:
    left: ExprNode
    right: ExprNode


@dataclass(frozen=True)
class Sub:
    left: ExprNode
    right: ExprNode


@dataclass(frozen=True)
class Mul:
    left: ExprNode
    right: ExprNode


@dataclass(frozen=True)
class Div:
    left: ExprNode
    right: ExprNode


@dataclass(frozen=True)
class Pow:
    base: ExprNode
    exponent: int


@dataclass(frozen=True)
class ExpQ:
    argument: ExprNode


ExprNode = Union[Var, IntLit, RatLit, Add, Sub, Mul, Div, Pow, ExpQ]


def contains_expq(node: ExprNode) -> bool:
    if isinstance(node, ExpQ):
        return True
    if isinstance(node, (Add, Sub, Mul, Div)):
        return contains_expq(node.left) or contains_expq(node.right)
    if isinstance(node, Pow):
        return contains_expq(node.base)
    return False


# -- tokenizer -------------------------------------------------------------------

_SYMBOLS = frozenset("+-*/^()")
_FACTOR_START = frozenset({"x", "y", "q", "integer", "(", "exp_q"})


@dataclass(frozen=True)
class _Token:
    kind: str  # symbol text, "x"/"y"/"q", "exp_q", "integer" or "end"
    text: str
    pos: int  # character index


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, i))
            i += 1
        elif "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            tokens.append(_Token("integer", text[i:j], i))
            i = j
        elif text.startswith("exp_q", i):
            tokens.append(_Token("exp_q", "exp_q", i))
            i += 5
        elif ch in "xyq":
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise ParseError(
                f"unexpected character {ch!r}",
                _byte_offset(text, i),
                _FACTOR_START | {"+", "-", "*", "/", "^", ")"},
            )
    tokens.append(_Token("end", "", n))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


# -- parser ------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected, message=None, tok=None):
        tok = tok or self.tok
        if message is None:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            message = f"unexpected {found}"
        raise ParseError(message, _byte_offset(self.text, tok.pos), expected)

    def expect(self, kind: str) -> _Token:
        if self.tok.kind != kind:
            self.fail({kind})
        return self.advance()

    def parse(self) -> ExprNode:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail({"+", "-", "*", "/", "^", "end of input"} | _FACTOR_START)
        return node

    def expr(self) -> ExprNode:
        if self.tok.kind == "-":
            self.advance()
            node = Sub(IntLit(0), self.term())
        else:
            node = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self) -> ExprNode:
        node = self.factor()
        while True:
            kind = self.tok.kind
            if kind == "*":
                self.advance()
                node = Mul(node, self.factor())
            elif kind == "/":
                self.advance()
                node = Div(node, self.factor())
            elif kind in _FACTOR_START:
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> ExprNode:
        base = self.atom()
        if self.tok.kind != "^":
            return base
        self.advance()
        tok = self.tok
        if tok.kind != "integer":
            self.fail({"integer"}, "exponent must be a natural number literal")
        self.advance()
        exponent = int(tok.text)
        if exponent > MAX_EXPONENT:
            raise ExponentTooLarge(
                f"exponent {exponent} exceeds the limit {MAX_EXPONENT}",
                _byte_offset(self.text, tok.pos),
            )
        return Pow(base, exponent)

    def atom(self) -> ExprNode:
        tok = self.tok
        kind = tok.kind
        if kind in ("x", "y", "q"):
            self.advance()
            return Var(kind)
        if kind == "integer":
            self.advance()
            value = int(tok.text)
            if self.tok.kind == "/" and self.tokens[self.i + 1].kind == "integer":
                nxt = self.tokens[self.i + 1]
                self.advance()
                self.advance()
                den = int(nxt.text)
                if den == 0:
                    self.fail(set(), "zero denominator in rational literal", nxt)
                return RatLit(Fraction(value, den))
            return IntLit(value)
        if kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "exp_q":
            self.advance()
            self.expect("(")
            node = self.expr()
            self.expect(")")
            return ExpQ(node)
        self.fail(_FACTOR_START)


def parse(text: str) -> ExprNode:
    """Parse ``text`` into an expression tree; raises ``ParseError``."""
    return _Parser(text).parse()
