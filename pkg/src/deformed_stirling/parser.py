"""Recursive-descent parser for polynomial expressions in ``N``.

Grammar (standard precedence, ``^`` binds tighter than unary minus)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("-" | "+") unary | power
    power   := atom ("^" INT)*
    atom    := INT | "N" | bracket | "(" expr ")"
    bracket := "[" "N" (("+" | "-") INT)? "]"

Brackets only appear in the rendered output of bracket-mode polynomials; a
box expression uses ``N`` alone.  Division is allowed only by a nonzero
constant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BRACKET_MODE, N_MODE, BracketPoly
from .errors import ExponentError, NonPolynomial, ParseError, VarsetMismatch

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<bracket>\[\s*N\s*(?:(?P<sign>[+-])\s*(?P<off>\d+)\s*)?\])|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # int, N, bracket, op, end
    value: object
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[start]!r}", start)
        start = m.start(m.lastgroup) if m.lastgroup else pos
        if m.group("int") is not None:
            tokens.append(Token("int", int(m.group("int")), start))
        elif m.group("bracket") is not None:
            offset = int(m.group("off") or 0)
            # [N-j] is B_j, [N+j] is B_{-j}
            index = offset if m.group("sign") == "-" else -offset
            tokens.append(Token("bracket", index, m.start("bracket")))
        elif m.group("name") is not None:
            if m.group("name") != "N":
                raise ParseError(f"unknown identifier {m.group('name')!r}", m.start("name"))
            tokens.append(Token("N", None, m.start("name")))
        else:
            tokens.append(Token("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(Token("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, mode: str | None):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0
        self.mode = mode

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.value in ops

    def claim_mode(self, mode: str, pos: int) -> None:
        if self.mode is None:
            self.mode = mode
        elif self.mode != mode:
            raise VarsetMismatch(f"cannot mix N and bracket variables (at position {pos})")

    # The parse tree is evaluated on the fly.  Constants are kept as Fraction
    # until a variable fixes the mode.

    def lift(self, value):
        if isinstance(value, BracketPoly):
            return value
        return BracketPoly.const(value, self.mode or N_MODE)

    def parse(self) -> BracketPoly:
        value = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected token {self.tok.value!r}", self.tok.pos)
        return self.lift(value)

    def expr(self):
        left = self.term()
        while self.at_op("+", "-"):
            op = self.advance().value
            right = self.term()
            left = self.combine(left, right, op)
        return left

    def term(self):
        left = self.unary()
        while self.at_op("*", "/"):
            op_tok = self.advance()
            right_pos = self.tok.pos
            right = self.unary()
            if op_tok.value == "*":
                left = self.combine(left, right, "*")
                continue
            if isinstance(right, BracketPoly):
                if not right.is_constant():
                    raise NonPolynomial("division by a non-constant expression", right_pos)
                right = right.constant_value()
            if right == 0:
                raise ParseError("division by zero", right_pos)
            left = left / Fraction(right) if isinstance(left, BracketPoly) else Fraction(left) / right
        return left

    def unary(self):
        if self.at_op("-"):
            self.advance()
            return -self.unary()
        if self.at_op("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        while self.at_op("^"):
            self.advance()
            t = self.tok
            if t.kind == "int":
                self.advance()
                base = base ** t.value
            elif t.kind == "op" and t.value == "-":
                raise ExponentError("negative exponent", t.pos)
            elif t.kind == "end":
                raise ParseError("missing exponent", t.pos)
            else:
                raise ExponentError("exponent must be a nonnegative integer literal", t.pos)
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Fraction(t.value)
        if t.kind == "N":
            self.advance()
            self.claim_mode(N_MODE, t.pos)
            return BracketPoly.n_var()
        if t.kind == "bracket":
            self.advance()
            self.claim_mode(BRACKET_MODE, t.pos)
            return BracketPoly.bracket_var(t.value)
        if self.at_op("("):
            self.advance()
            value = self.expr()
            if not self.at_op(")"):
                raise ParseError("expected ')'", self.tok.pos)
            self.advance()
            return value
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected token {t.value!r}", t.pos)

    def combine(self, left, right, op: str):
        if isinstance(left, BracketPoly) or isinstance(right, BracketPoly):
            left, right = self.lift(left), self.lift(right)
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        return left * right


def parse_expression(src: str, mode: str | None = None) -> BracketPoly:
    """Parse ``src`` into an expanded polynomial.

    ``mode`` forces the variable set; when omitted it is inferred from the
    variables present (constant input defaults to N-mode).
    """
    return _Parser(src, mode).parse()
