"""A small expression language for symmetric functions.

Examples: ``s[2,1] - 2*p[2]``, ``3/2*h[3]*e[1]``, ``(s[1] + 1)*s[1]``,
``sdag[2]`` (a stable Specht function). A JSON SymFunc document is accepted as well.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .partitions import Partition
from .symfunc import BASES, SymFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z]+)\[([\d,\s]*)\]|(.))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise ValueError(f"cannot parse expression at {text[pos:]!r}")
        num, name, parts, sym = match.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            inner = parts.replace(" ", "")
            shape = Partition(int(x) for x in inner.split(",")) if inner else Partition()
            tokens.append(("gen", (name, shape)))
        elif sym in "+-*/()":
            tokens.append(("op", sym))
        else:
            raise ValueError(f"unexpected character {sym!r} in expression")
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        value = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        kind, val = self.take()
        if kind == "num":
            if self.peek() == ("op", "/"):
                self.take()
                den_kind, den = self.take()
                if den_kind != "num":
                    raise ValueError("expected a denominator")
                return Fraction(val, den)
            return Fraction(val)
        if kind == "gen":
            name, shape = val
            if name in BASES:
                return SymFunc.basis_element(name, shape)
            if name == "sdag":
                from .complexes import stable_specht

                return stable_specht(shape)
            raise ValueError(f"unknown generator {name!r}")
        if (kind, val) == ("op", "("):
            value = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return value
        raise ValueError(f"unexpected token {val!r}")


def parse_expr(text: str) -> SymFunc:
    text = text.strip()
    if text.startswith("{"):
        from .emit import from_doc

        value = from_doc(json.loads(text))
        if not isinstance(value, SymFunc):
            raise ValueError("JSON expression must be a SymFunc document")
        return value
    parser = _Parser(_tokenize(text))
    value = parser.expr()
    if parser.i != len(parser.tokens):
        raise ValueError(f"trailing input in expression {text!r}")
    if not isinstance(value, SymFunc):
        value = SymFunc.scalar(value)
    return value
