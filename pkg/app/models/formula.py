"""
Propositional formulas over fluent atoms, and interpretations.

Formulas are immutable expression trees built from Top, Bottom, Atom, Not,
And and Or. Implication is not a node of its own: `implies` rewrites it to
a disjunction, so the semantics only ever sees negation and the two binary
connectives.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Mapping, Tuple
import re

from app.core.errors import VocabularyError

ATOM_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED_WORDS = frozenset({"true", "false"})


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()

    @property
    def is_atomic(self) -> bool:
        return False

    def atoms(self) -> FrozenSet["Atom"]:
        raise NotImplementedError

    def __invert__(self) -> "Formula":
        return Not(self)

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __rshift__(self, other: "Formula") -> "Formula":
        return implies(self, other)


@dataclass(frozen=True)
class TopFormula(Formula):
    def atoms(self) -> FrozenSet["Atom"]:
        return frozenset()

    def __repr__(self) -> str:
        return "Top"


@dataclass(frozen=True)
class BottomFormula(Formula):
    def atoms(self) -> FrozenSet["Atom"]:
        return frozenset()

    def __repr__(self) -> str:
        return "Bottom"


Top = TopFormula()
Bottom = BottomFormula()


@dataclass(frozen=True, order=True)
class Atom(Formula):
    """A propositional fluent, identified by its name."""

    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not ATOM_NAME.match(self.name):
            raise ValueError(f"invalid atom name: {self.name!r}")
        if self.name in RESERVED_WORDS:
            raise ValueError(f"{self.name!r} is reserved for a constant")

    @property
    def is_atomic(self) -> bool:
        return True

    def atoms(self) -> FrozenSet["Atom"]:
        return frozenset({self})

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula

    def atoms(self) -> FrozenSet[Atom]:
        return self.operand.atoms()

    def __repr__(self) -> str:
        return f"Not({self.operand!r})"


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> FrozenSet[Atom]:
        return self.left.atoms() | self.right.atoms()

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> FrozenSet[Atom]:
        return self.left.atoms() | self.right.atoms()

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


def implies(antecedent: Formula, consequent: Formula) -> Formula:
    """Material implication, normalized to `!antecedent | consequent`."""
    return Or(Not(antecedent), consequent)


class Interpretation(Mapping[Atom, bool]):
    """
    A total assignment of truth values to a finite atom vocabulary.

    Immutable and hashable; lookups outside the vocabulary raise
    VocabularyError.
    """

    __slots__ = ("_values", "_key")

    def __init__(self, values: Mapping[Atom, bool]):
        self._values: Dict[Atom, bool] = {atom: bool(v) for atom, v in values.items()}
        self._key: Tuple[Tuple[str, bool], ...] = tuple(
            sorted((atom.name, v) for atom, v in self._values.items())
        )

    @property
    def vocabulary(self) -> FrozenSet[Atom]:
        return frozenset(self._values)

    def __getitem__(self, atom: Atom) -> bool:
        try:
            return self._values[atom]
        except KeyError:
            raise VocabularyError(f"atom {atom!r} is outside the vocabulary") from None

    def __iter__(self) -> Iterator[Atom]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __hash__(self) -> int:
        return hash(self._key)

    def __eq__(self, other) -> bool:
        if isinstance(other, Interpretation):
            return self._key == other._key
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{name}={int(v)}" for name, v in self._key)
        return f"Interpretation({inner})"
