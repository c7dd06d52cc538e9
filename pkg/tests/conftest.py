from fractions import Fraction
from pathlib import Path

import pytest

from app.logic.posslog import PossibilisticKB
from app.models.formula import Atom, Not, Or
from app.models.knowledge import TimedFormula, TimedKB
from app.models.time import Interval
from app.parsing.kb_file import load_kb
from app.parsing.schema_file import load_schema
from app.persistence.schema import SchemaSet, machine_schema

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

A, B = Atom("A"), Atom("B")


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def machines_kb():
    """Machine A works on [0,10], one machine works at 15, B works on [17,30]."""
    return TimedKB(
        [
            TimedFormula(Interval.closed(0, 10), A),
            TimedFormula(Interval.point(15), Or(Not(A), Not(B))),
            TimedFormula(Interval.closed(17, 30), B),
        ]
    )


@pytest.fixture
def machines_pers():
    return SchemaSet([machine_schema(A), machine_schema(B)])


@pytest.fixture
def k15():
    return PossibilisticKB.from_pairs((A, Fraction(1, 2)), (B, Fraction(4, 5)), (Or(Not(A), Not(B)), 1))


@pytest.fixture
def parking_kb():
    return load_kb(DATA_DIR / "parking.kb")


@pytest.fixture
def parking_pers():
    return load_schema(DATA_DIR / "parking.schema")
