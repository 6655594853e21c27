"""Parser for the polynomial text grammar.

Grammar: variables are identifiers, ``^`` is the exponent, ``*`` is
optional (juxtaposition multiplies), rationals are written ``a/b``,
parentheses group.  Examples: ``x^2 - 3/2*x*y + 1``, ``t*(x + y)^2``.
Errors carry 1-based line/column positions.
"""

from __future__ import annotations

from .poly import Polynomial, Ring


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


_TOKEN_CHARS = {"+", "-", "*", "/", "^", "(", ")"}


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, tok[2], tok[3])

    def parse(self) -> Polynomial:
        poly = self.expression()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return poly

    def expression(self) -> Polynomial:
        kind = self.peek()[0]
        negate = False
        if kind in ("+", "-"):
            negate = self.advance()[0] == "-"
        result = self.term()
        if negate:
            result = -result
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            result = result - rhs if op == "-" else result + rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.advance()
                result = result * self.factor()
            elif kind == "/":
                tok = self.advance()
                divisor = self.factor()
                if not divisor.is_constant():
                    self.error("division is only allowed by a number", tok)
                if divisor.is_zero():
                    self.error("division by zero", tok)
                result = result.scale(self.ring.field.div(self.ring.field.one, divisor.constant_term()))
            elif kind in ("int", "ident", "("):
                result = result * self.factor()
            else:
                return result

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "-":
            self.advance()
            return -self.factor()
        if tok[0] == "+":
            self.advance()
            return self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            caret = self.advance()
            exp_tok = self.peek()
            if exp_tok[0] != "int":
                self.error("malformed exponent", caret)
            self.advance()
            return base ** int(exp_tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.advance()
        if tok[0] == "int":
            return self.ring.const(int(tok[1]))
        if tok[0] == "ident":
            if tok[1] not in self.ring.vars:
                self.error(f"unknown variable {tok[1]!r}", tok)
            return self.ring.var(tok[1])
        if tok[0] == "(":
            inner = self.expression()
            closing = self.advance()
            if closing[0] != ")":
                self.error("expected ')'", closing)
            return inner
        self.error(f"expected a number, variable or '(', got {tok[1]!r}", tok)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse one polynomial in the given ring."""
    return _Parser(text, ring).parse()
