"""Parser for the polynomial text grammar.

Identifiers are variables; operators ``+ - * ^`` (``**`` accepted as ``^``);
integer literals, and ``num/den`` rationals (division only by nonzero
constants).  Juxtaposition is an error: ``2x`` must be written ``2*x``.
"""

from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg):
        raise ParseError(f"{msg} in {self.text!r}")

    def parse(self):
        if not self.toks:
            self.fail("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                val = val * self.unary()
            elif tok == ("op", "/"):
                self.take()
                den = self.unary()
                if not den.is_constant() or den.is_zero():
                    self.fail("division by a non-constant or zero")
                val = val.scale(self.ring.field.inv(den.constant_coefficient()))
            elif tok[0] in ("num", "id") or tok == ("op", "("):
                self.fail("juxtaposition is not allowed; use '*'")
            else:
                return val

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a nonnegative integer literal")
            return base ** tok[1]
        return base

    def atom(self):
        kind, val = self.take()
        R = self.ring
        if kind == "num":
            return R(val)
        if kind == "id":
            if val not in R.index:
                self.fail(f"unknown variable {val!r}")
            return R.gen(val)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                self.fail("missing ')'")
            return inner
        self.fail(f"unexpected token {val!r}")


def parse_poly(text: str, ring):
    return _Parser(str(text), ring.base_ring).parse()
