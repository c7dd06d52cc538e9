"""
Decreasing persistence schemata: per-fluent certainty functions for the
forward and backward extrapolation of each truth value.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional
import logging

from app.core.config import settings
from app.core.errors import SchemaError
from app.models.degree import ONE, ZERO, as_rational
from app.models.formula import Atom
from app.persistence.piecewise import PiecewiseLinearFn

logger = logging.getLogger(__name__)

FUNCTION_FIELDS = ("forward_true", "backward_true", "forward_false", "backward_false")


def _default_split() -> Fraction:
    return settings.change_split


@dataclass(frozen=True)
class FluentSchema:
    """
    Persistence of one fluent. Every function maps the distance to the
    reference point to the necessity of the reference value; each starts at
    1 and never increases with distance (D1 forward, D2 backward).
    """

    fluent: Atom
    forward_true: PiecewiseLinearFn
    backward_true: PiecewiseLinearFn
    forward_false: PiecewiseLinearFn
    backward_false: PiecewiseLinearFn
    change_split: Fraction = field(default_factory=_default_split)

    def __post_init__(self):
        split = as_rational(self.change_split)
        if not ZERO < split < ONE:
            raise SchemaError(f"change_split of {self.fluent.name} must lie in (0, 1), got {split}")
        object.__setattr__(self, "change_split", split)
        for name in FUNCTION_FIELDS:
            fn = getattr(self, name)
            axiom = "D1" if name.startswith("forward") else "D2"
            if fn.breakpoints[0][1] != ONE:
                raise SchemaError(
                    f"{self.fluent.name} {name.replace('_', ' ')} must be 1 at offset 0, "
                    f"got {fn.breakpoints[0][1]}"
                )
            for (o1, v1), (o2, v2) in fn.segments():
                if v2 > v1:
                    raise SchemaError(
                        f"{self.fluent.name} {name.replace('_', ' ')} rises on [{o1},{o2}]",
                        axiom=axiom,
                    )

    def forward(self, value: bool) -> PiecewiseLinearFn:
        return self.forward_true if value else self.forward_false

    def backward(self, value: bool) -> PiecewiseLinearFn:
        return self.backward_true if value else self.backward_false

    def functions(self) -> Dict[str, PiecewiseLinearFn]:
        return {name: getattr(self, name) for name in FUNCTION_FIELDS}


class SchemaSet:
    """At most one persistence schema per fluent; other fluents are not extrapolated."""

    __slots__ = ("_schemas",)

    def __init__(self, schemas: Iterable[FluentSchema] = ()):
        self._schemas: Dict[Atom, FluentSchema] = {}
        for schema in schemas:
            if schema.fluent in self._schemas:
                raise SchemaError(f"duplicate schema for fluent {schema.fluent.name}")
            self._schemas[schema.fluent] = schema

    def get(self, fluent: Atom) -> Optional[FluentSchema]:
        return self._schemas.get(fluent)

    def __contains__(self, fluent: Atom) -> bool:
        return fluent in self._schemas

    def __iter__(self) -> Iterator[FluentSchema]:
        return iter(self._schemas.values())

    def __len__(self) -> int:
        return len(self._schemas)

    @property
    def fluents(self):
        return list(self._schemas)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchemaSet):
            return self._schemas == other._schemas
        return NotImplemented


def machine_schema(fluent: Atom) -> FluentSchema:
    """
    Persistence of a machine being in working order, the day as time unit:
    working decays by 1/10 a day towards a default certainty of 1/5 going
    forward and to 0 going backward; failure is forgotten within two days
    since failing machines get repaired quickly.
    """
    return FluentSchema(
        fluent=fluent,
        forward_true=PiecewiseLinearFn.of((0, 1), (8, "1/5")),
        backward_true=PiecewiseLinearFn.of((0, 1), (10, 0)),
        forward_false=PiecewiseLinearFn.of((0, 1), (2, 0)),
        backward_false=PiecewiseLinearFn.of((0, 1), (2, 0)),
    )
