"""
Tokenizer and recursive-descent parsers shared by the KB and schema files.

Formulas: identifiers, `true`, `false`, `!`, `&`, `|`, `->`, parentheses;
precedence ! > & > | > ->, with -> associating to the right.
Intervals: `[a,b]`, `(a,b)`, `[a,b)`, `(a,b]`, `[a]`; endpoints are
rationals (`p/q` or decimals) or the signed `-inf` / `+inf`;
a bare `inf` is an ordinary identifier.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List
import re

from app.core.errors import ParseError
from app.models.formula import And, Atom, Bottom, BottomFormula, Formula, Not, Or, Top, TopFormula, implies
from app.models.time import Interval, NEG_INF, POS_INF, TimePoint

TOKEN_SPEC = [
    ("COMMENT", r"#[^\n]*"),
    ("NEWLINE", r"\n"),
    ("SPACE", r"[ \t\r]+"),
    ("ARROW", r"->"),
    ("INF", r"[+-]inf\b"),
    ("NUMBER", r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("SYMBOL", r"[!&|()\[\],:;{}]"),
]
TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, first_line: int = 1) -> List[Token]:
    tokens: List[Token] = []
    line, line_start, pos = first_line, 0, 0
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        if kind == "NEWLINE":
            line += 1
            line_start = match.end()
        elif kind not in ("SPACE", "COMMENT"):
            tokens.append(Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "EOF":
            self.index += 1
        return token

    def at(self, text: str) -> bool:
        return self.current.text == text and self.current.kind != "EOF"

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.advance()
            return True
        return False

    def expect(self, text: str, context: str = "") -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}{context} but found {self.describe()}")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            self.error(f"expected {what} but found {self.describe()}")
        return self.advance()

    def expect_end(self) -> None:
        if self.current.kind != "EOF":
            self.error(f"unexpected {self.describe()}")

    def describe(self) -> str:
        return "end of input" if self.current.kind == "EOF" else repr(self.current.text)

    def error(self, message: str):
        raise ParseError(message, self.current.line, self.current.column)


# formulas

def read_formula(stream: TokenStream) -> Formula:
    left = _read_disjunction(stream)
    if stream.accept("->"):
        return implies(left, read_formula(stream))
    return left


def _read_disjunction(stream: TokenStream) -> Formula:
    result = _read_conjunction(stream)
    while stream.accept("|"):
        result = Or(result, _read_conjunction(stream))
    return result


def _read_conjunction(stream: TokenStream) -> Formula:
    result = _read_unary(stream)
    while stream.accept("&"):
        result = And(result, _read_unary(stream))
    return result


def _read_unary(stream: TokenStream) -> Formula:
    if stream.accept("!"):
        return Not(_read_unary(stream))
    if stream.accept("("):
        inner = read_formula(stream)
        stream.expect(")")
        return inner
    token = stream.current
    if token.kind != "IDENT":
        stream.error(f"expected a formula but found {stream.describe()}")
    stream.advance()
    if token.text == "true":
        return Top
    if token.text == "false":
        return Bottom
    return Atom(token.text)


def parse_formula(text: str) -> Formula:
    stream = TokenStream(tokenize(text))
    formula = read_formula(stream)
    stream.expect_end()
    return formula


# numbers and intervals

def read_rational(stream: TokenStream, what: str = "a rational number") -> Fraction:
    token = stream.expect_kind("NUMBER", what)
    try:
        return Fraction(token.text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid number {token.text!r}", token.line, token.column) from None


def _read_endpoint(stream: TokenStream) -> TimePoint:
    token = stream.current
    if token.kind == "INF":
        stream.advance()
        return NEG_INF if token.text.startswith("-") else POS_INF
    return read_rational(stream, "a time point")


def read_interval(stream: TokenStream) -> Interval:
    opening = stream.current
    if opening.text not in ("[", "("):
        stream.error(f"expected '[' or '(' but found {stream.describe()}")
    stream.advance()
    lower = _read_endpoint(stream)
    if opening.text == "[" and stream.accept("]"):
        upper, closing = lower, "]"
    else:
        stream.expect(",", " in interval")
        upper = _read_endpoint(stream)
        closing = stream.current.text
        if closing not in ("]", ")"):
            stream.error(f"expected ']' or ')' but found {stream.describe()}")
        stream.advance()
    try:
        return Interval(lower, upper, opening.text == "[", closing == "]")
    except ValueError as exc:
        raise ParseError(str(exc), opening.line, opening.column) from None


def parse_interval(text: str) -> Interval:
    stream = TokenStream(tokenize(text))
    interval = read_interval(stream)
    stream.expect_end()
    return interval


def parse_time(text: str) -> TimePoint:
    stream = TokenStream(tokenize(text))
    t = _read_endpoint(stream)
    stream.expect_end()
    return t


# rendering

_PRECEDENCE = {Or: 1, And: 2, Not: 3}


def render_formula(phi: Formula, context: int = 0) -> str:
    """Concrete syntax for phi, with only the parentheses the grammar needs."""
    if isinstance(phi, TopFormula):
        return "true"
    if isinstance(phi, BottomFormula):
        return "false"
    if isinstance(phi, Atom):
        return phi.name
    own = _PRECEDENCE[type(phi)]
    if isinstance(phi, Not):
        text = "!" + render_formula(phi.operand, own)
    else:
        symbol = " & " if isinstance(phi, And) else " | "
        text = render_formula(phi.left, own) + symbol + render_formula(phi.right, own + 1)
    return f"({text})" if own < context else text
