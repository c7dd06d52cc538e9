from fractions import Fraction

import pytest

from app.core.errors import ParseError, SchemaError
from app.models.formula import And, Atom, Bottom, Not, Or, Top, implies
from app.models.time import Interval, NEG_INF, POS_INF
from app.parsing.grammar import parse_formula, parse_interval, parse_time, render_formula
from app.parsing.kb_file import load_kb, parse_kb, render_kb
from app.parsing.schema_file import load_schema, parse_schema, render_schema

A, B, C, D, E = (Atom(n) for n in "ABCDE")

FLAT_REST = "backward true: pw[(0,1)]; forward false: pw[(0,1)]; backward false: pw[(0,1)]"


class TestFormulaSyntax:
    def test_precedence(self):
        assert parse_formula("A | B & !C") == Or(A, And(B, Not(C)))
        assert parse_formula("A -> B -> C") == implies(A, implies(B, C))
        assert parse_formula("(A | B) & C") == And(Or(A, B), C)

    def test_constants(self):
        assert parse_formula("true") == Top
        assert parse_formula("!false") == Not(Bottom)

    def test_render_uses_minimal_parentheses(self):
        assert render_formula(Or(A, And(B, Not(C)))) == "A | B & !C"
        assert render_formula(And(Or(A, B), C)) == "(A | B) & C"
        assert render_formula(Not(And(A, B))) == "!(A & B)"

    @pytest.mark.parametrize(
        "text", ["A | B & !C", "(A | B) & C", "A | (B | C)", "!(A & !B) | false", "A -> B -> (C & D) | E"]
    )
    def test_render_then_parse(self, text):
        phi = parse_formula(text)
        assert parse_formula(render_formula(phi)) == phi

    def test_atom_named_inf(self):
        inf = Atom("inf")
        assert parse_formula(render_formula(inf)) == inf
        assert parse_formula("inf -> !inf") == implies(inf, Not(inf))

    def test_errors_carry_positions(self):
        with pytest.raises(ParseError) as excinfo:
            parse_formula("A & (B | C")
        assert (excinfo.value.line, excinfo.value.column) == (1, 11)
        with pytest.raises(ParseError) as excinfo:
            parse_formula("A $ B")
        assert excinfo.value.column == 3


class TestIntervalsAndTimes:
    def test_intervals(self):
        assert parse_interval("[0,10]") == Interval.closed(0, 10)
        assert parse_interval("[15]") == Interval.point(15)
        assert parse_interval("(-inf,0)") == Interval.open(NEG_INF, 0)
        assert parse_interval("[1/2,2.5)") == Interval(Fraction(1, 2), Fraction(5, 2), True, False)

    def test_closed_infinite_endpoint(self):
        with pytest.raises(ParseError) as excinfo:
            parse_interval("[0,+inf]")
        assert excinfo.value.column == 1

    def test_times(self):
        assert parse_time("3/4") == Fraction(3, 4)
        assert parse_time("0.25") == Fraction(1, 4)
        assert parse_time("-inf") == NEG_INF
        assert parse_time("+inf") == POS_INF
        with pytest.raises(ParseError):
            parse_time("inf")


class TestKBFiles:
    def test_load_machines(self, data_dir, machines_kb):
        assert load_kb(data_dir / "machines.kb") == machines_kb

    def test_blank_and_comment_lines(self):
        kb = parse_kb("# header\n\nat [0,1] : A   # trailing\n")
        assert len(kb) == 1

    def test_atom_named_inf_in_a_base(self):
        kb = parse_kb("at (-inf,+inf) : inf\n")
        entry = kb.entries[0]
        assert entry.phi == Atom("inf")
        assert str(entry.tau) == "(-inf,+inf)"
        assert parse_kb(render_kb(kb)) == kb

    def test_missing_colon(self):
        with pytest.raises(ParseError) as excinfo:
            parse_kb("at [0,10] A")
        assert (excinfo.value.line, excinfo.value.column) == (1, 11)

    def test_error_on_a_later_line(self):
        with pytest.raises(ParseError) as excinfo:
            parse_kb("at [0,1] : A\nat [2,3] : A &")
        assert (excinfo.value.line, excinfo.value.column) == (2, 15)
        assert str(excinfo.value).startswith("line 2, column 15:")

    def test_render_roundtrip(self, data_dir):
        kb = load_kb(data_dir / "parking.kb")
        assert parse_kb(render_kb(kb)) == kb


class TestSchemaFiles:
    def test_load_machines(self, data_dir, machines_pers):
        assert load_schema(data_dir / "machines.schema") == machines_pers

    def test_change_split(self):
        text = f"fluent A {{ forward true: pw[(0,1)]; {FLAT_REST}; change_split: 1/4 }}"
        assert parse_schema(text).get(A).change_split == Fraction(1, 4)

    def test_rising_function_cites_D1(self):
        text = f"fluent A {{ forward true: pw[(0,1),(2,1/2),(4,3/4)]; {FLAT_REST} }}"
        with pytest.raises(SchemaError) as excinfo:
            parse_schema(text)
        assert excinfo.value.axiom == "D1"

    def test_missing_function(self):
        with pytest.raises(SchemaError):
            parse_schema("fluent A { forward true: pw[(0,1)] }")

    def test_unknown_key(self):
        with pytest.raises(ParseError) as excinfo:
            parse_schema("fluent A {\n  sideways true: pw[(0,1)]\n}")
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    def test_duplicate_key(self):
        text = f"fluent A {{ forward true: pw[(0,1)]; forward true: pw[(0,1)]; {FLAT_REST} }}"
        with pytest.raises(ParseError):
            parse_schema(text)

    def test_malformed_breakpoints(self):
        text = f"fluent A {{ forward true: pw[(1,1)]; {FLAT_REST} }}"
        with pytest.raises(SchemaError):
            parse_schema(text)

    def test_duplicate_fluent(self):
        block = f"fluent A {{ forward true: pw[(0,1)]; {FLAT_REST} }}"
        with pytest.raises(SchemaError):
            parse_schema(block + "\n" + block)

    def test_render_roundtrip(self, data_dir):
        pers = load_schema(data_dir / "parking.schema")
        assert parse_schema(render_schema(pers)) == pers
