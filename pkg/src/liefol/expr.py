"""Parser for the shared polynomial / vector-field expression grammar.

The grammar is deliberately small: integers, rational literals ``p/q``,
variable names, ``+ - * ^`` with non-negative integer exponents, and
parentheses; whitespace is insignificant.  ``/`` is only legal between
two integer literals, so every expression denotes a polynomial.

Vector-field expressions use the same grammar over the chart extended
by basis names: ``d<var>`` for each chart variable, with ``dx1 .. dxn``
accepted as positional aliases.  Every term of a field expression must
contain exactly one basis factor, to the first power.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import Chart, Poly


class ParseError(ValueError):
    """A syntax or name-resolution error, carrying a character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # "num" | "name" | one of + - * ^ ( )
    text: str
    value: Optional[Fraction]
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            numerator = int(text[start:i])
            # peek for a rational literal p/q
            j = i
            while j < n and text[j].isspace():
                j += 1
            if j < n and text[j] == "/":
                j += 1
                while j < n and text[j].isspace():
                    j += 1
                if j >= n or not text[j].isdigit():
                    raise ParseError("expected an integer after '/'", j if j < n else n - 1)
                dstart = j
                while j < n and text[j].isdigit():
                    j += 1
                denominator = int(text[dstart:j])
                if denominator == 0:
                    raise ParseError("zero denominator in rational literal", dstart)
                tokens.append(_Token("num", text[start:j], Fraction(numerator, denominator), start))
                i = j
            else:
                tokens.append(_Token("num", text[start:i], Fraction(numerator), start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("name", text[start:i], None, start))
            continue
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, None, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    """Recursive descent over the token list, producing a Poly."""

    def __init__(self, tokens: List[_Token], chart: Chart, names: Dict[str, int], length: int):
        self.tokens = tokens
        self.chart = chart
        self.names = names
        self.length = length
        self.i = 0

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.length)
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.take()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text!r}", tok.pos)
        return tok

    def parse(self) -> Poly:
        p = self.expression()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return p

    def expression(self) -> Poly:
        tok = self.peek()
        if tok is not None and tok.kind in "+-":
            self.take()
            acc = self.term()
            if tok.kind == "-":
                acc = -acc
        else:
            acc = self.term()
        while True:
            tok = self.peek()
            if tok is None or tok.kind not in "+-":
                return acc
            self.take()
            rhs = self.term()
            acc = acc + rhs if tok.kind == "+" else acc - rhs

    def term(self) -> Poly:
        acc = self.unary()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "*":
                return acc
            self.take()
            acc = acc * self.unary()

    def unary(self) -> Poly:
        tok = self.peek()
        if tok is not None and tok.kind == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        tok = self.peek()
        if tok is None or tok.kind != "^":
            return base
        self.take()
        exp = self.take()
        if exp.kind != "num" or exp.value is None or exp.value.denominator != 1 or exp.value < 0:
            raise ParseError("exponents must be non-negative integers", exp.pos)
        return base ** int(exp.value)

    def atom(self) -> Poly:
        tok = self.take()
        if tok.kind == "num":
            assert tok.value is not None
            return Poly.constant(self.chart, tok.value)
        if tok.kind == "name":
            idx = self.names.get(tok.text)
            if idx is None:
                raise ParseError(f"unknown name {tok.text!r}", tok.pos)
            exps = [0] * self.chart.size
            exps[idx] = 1
            return Poly(self.chart, {tuple(exps): Fraction(1)})
        if tok.kind == "(":
            inner = self.expression()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)


def parse_polynomial(text: str, chart: Chart) -> Poly:
    """Parse a polynomial expression over the chart's variables."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    names = {v: k for k, v in enumerate(chart.variables)}
    return _Parser(tokens, chart, names, len(text)).parse()


def basis_names(chart: Chart) -> Tuple[str, ...]:
    """Canonical basis symbol for each coordinate: ``d`` + variable name."""
    return tuple("d" + v for v in chart.variables)


def _field_name_table(chart: Chart) -> Tuple[Chart, Dict[str, int]]:
    base = chart.variables
    canon = basis_names(chart)
    for b in canon:
        if b in base:
            raise ValueError(
                f"chart variable {b!r} collides with the basis symbol for {b[1:]!r}"
            )
    extended = Chart(base + canon)
    names: Dict[str, int] = {v: k for k, v in enumerate(base)}
    for k, b in enumerate(canon):
        names[b] = len(base) + k
    # positional aliases dx1 .. dxn
    for k in range(len(base)):
        alias = f"dx{k + 1}"
        target = len(base) + k
        if alias in names and names[alias] != target:
            raise ValueError(f"basis alias {alias!r} is ambiguous on chart {chart}")
        names[alias] = target
    return extended, names


def parse_field_coefficients(text: str, chart: Chart) -> Tuple[Poly, ...]:
    """Parse a vector-field expression, returning one coefficient per variable.

    Example: ``x*dx + (y^2 - 1)*dy`` on chart (x, y) gives (x, y^2 - 1).
    """
    extended, names = _field_name_table(chart)
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", 0)
    p = _Parser(tokens, extended, names, len(text)).parse()
    n = chart.size
    coeffs: List[Dict[Tuple[int, ...], Fraction]] = [dict() for _ in range(n)]
    for exps, coeff in p.terms.items():
        basis_part = exps[n:]
        weight = sum(basis_part)
        if weight == 0:
            raise ParseError("field term carries no basis factor (dx, dy, ...)", 0)
        if weight > 1:
            raise ParseError("field term multiplies two basis factors", 0)
        k = basis_part.index(1)
        coeffs[k][exps[:n]] = coeff
    return tuple(Poly(chart, c) for c in coeffs)


def format_field(coefficients: Sequence[Poly], chart: Chart) -> str:
    """Render coefficients as a field expression in the same grammar."""
    names = basis_names(chart)
    pieces = []
    for coeff, name in zip(coefficients, names):
        if coeff.is_zero():
            continue
        if coeff.is_one():
            pieces.append(name)
        else:
            pieces.append(f"({coeff})*{name}")
    if not pieces:
        return "0*" + names[0]
    return " + ".join(pieces)
