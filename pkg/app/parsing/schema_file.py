"""
Persistence schema files, one block per fluent:

    fluent A {
      forward true: pw[(0,1),(8,1/5)];
      backward true: pw[(0,1),(10,0)];
      forward false: pw[(0,1),(2,0)];
      backward false: pw[(0,1),(2,0)];
      change_split: 1/2
    }

All four functions are required; change_split is optional.
"""

from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple, Union
import logging

from app.core.errors import ParseError, SchemaError
from app.models.formula import Atom
from app.parsing.grammar import Token, TokenStream, read_rational, tokenize
from app.persistence.piecewise import PiecewiseLinearFn
from app.persistence.schema import FUNCTION_FIELDS, FluentSchema, SchemaSet

logger = logging.getLogger(__name__)


def _read_pw(stream: TokenStream) -> Tuple[Tuple[Fraction, Fraction], ...]:
    stream.expect("pw", " (a piecewise-linear function)")
    stream.expect("[")
    points = []
    while True:
        stream.expect("(")
        offset = read_rational(stream, "an offset")
        stream.expect(",")
        value = read_rational(stream, "a degree")
        stream.expect(")")
        points.append((offset, value))
        if not stream.accept(","):
            break
    stream.expect("]")
    return tuple(points)


def _read_key(stream: TokenStream) -> Tuple[str, Token]:
    token = stream.expect_kind("IDENT", "a schema key")
    if token.text in ("forward", "backward"):
        polarity = stream.current
        if polarity.text not in ("true", "false"):
            stream.error(f"expected 'true' or 'false' after {token.text!r}")
        stream.advance()
        return f"{token.text}_{polarity.text}", token
    if token.text == "change_split":
        return token.text, token
    raise ParseError(f"unknown schema key {token.text!r}", token.line, token.column)


def _read_block(stream: TokenStream) -> FluentSchema:
    stream.expect("fluent", " at the start of a schema block")
    name = stream.expect_kind("IDENT", "a fluent name")
    stream.expect("{")
    fields: Dict[str, object] = {}
    while not stream.at("}"):
        key, token = _read_key(stream)
        if key in fields:
            raise ParseError(f"duplicate key {token.text!r} in block for {name.text}", token.line, token.column)
        stream.expect(":")
        if key == "change_split":
            fields[key] = read_rational(stream, "a change split")
        else:
            points = _read_pw(stream)
            try:
                fields[key] = PiecewiseLinearFn(points)
            except ValueError as exc:
                raise SchemaError(f"{name.text} {key.replace('_', ' ')}: {exc}") from None
        if not stream.accept(";"):
            break
    stream.expect("}")
    missing = [key for key in FUNCTION_FIELDS if key not in fields]
    if missing:
        raise SchemaError(
            f"schema for {name.text} lacks {', '.join(k.replace('_', ' ') for k in missing)}"
        )
    try:
        fluent = Atom(name.text)
    except ValueError as exc:
        raise ParseError(str(exc), name.line, name.column) from None
    return FluentSchema(fluent=fluent, **fields)


def parse_schema(text: str) -> SchemaSet:
    stream = TokenStream(tokenize(text))
    schemas: List[FluentSchema] = []
    while stream.current.kind != "EOF":
        schemas.append(_read_block(stream))
    logger.debug(f"parsed {len(schemas)} persistence schemata")
    return SchemaSet(schemas)


def load_schema(path: Union[str, Path]) -> SchemaSet:
    pers = parse_schema(Path(path).read_text(encoding="utf-8"))
    logger.info(f"Loaded {len(pers)} persistence schemata from {path}")
    return pers


def render_schema(pers: SchemaSet) -> str:
    blocks = []
    for schema in pers:
        lines = [f"fluent {schema.fluent.name} {{"]
        for key in FUNCTION_FIELDS:
            label = key.replace("_", " ")
            lines.append(f"  {label}: {getattr(schema, key)};")
        lines.append(f"  change_split: {schema.change_split}")
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")
