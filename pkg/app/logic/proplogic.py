"""
Classical propositional semantics over fluent atoms.

Entailment is decided by exhaustive model enumeration over the joint
vocabulary of the premises and the conclusion.
"""

import itertools
import logging
from typing import AbstractSet, FrozenSet, Iterable, Iterator

from app.core.config import settings
from app.core.errors import VocabularyError
from app.models.enums import BeliefStatus
from app.models.formula import (
    And,
    Atom,
    BottomFormula,
    Formula,
    Interpretation,
    Not,
    Or,
    TopFormula,
)

logger = logging.getLogger(__name__)


def vocabulary(formulas: Iterable[Formula]) -> FrozenSet[Atom]:
    """Return the set of atoms occurring in any of the formulas."""
    atoms: FrozenSet[Atom] = frozenset()
    for formula in formulas:
        atoms |= formula.atoms()
    return atoms


def evaluate(omega: Interpretation, phi: Formula) -> bool:
    """Classical truth value of phi under omega."""
    if isinstance(phi, Atom):
        return omega[phi]
    if isinstance(phi, TopFormula):
        return True
    if isinstance(phi, BottomFormula):
        return False
    if isinstance(phi, Not):
        return not evaluate(omega, phi.operand)
    if isinstance(phi, And):
        return evaluate(omega, phi.left) and evaluate(omega, phi.right)
    if isinstance(phi, Or):
        return evaluate(omega, phi.left) or evaluate(omega, phi.right)
    raise TypeError(f"not a formula: {phi!r}")


def interpretations(atoms: AbstractSet[Atom]) -> Iterator[Interpretation]:
    """
    Enumerate every interpretation of the given vocabulary.

    The empty vocabulary has exactly one (empty) interpretation.
    """
    ordered = sorted(atoms)
    if len(ordered) > settings.MAX_ENUMERATION_ATOMS:
        raise VocabularyError(
            f"vocabulary of {len(ordered)} atoms exceeds the enumeration limit "
            f"of {settings.MAX_ENUMERATION_ATOMS}"
        )
    for values in itertools.product((False, True), repeat=len(ordered)):
        yield Interpretation(dict(zip(ordered, values)))


def models(formulas: Iterable[Formula], atoms: AbstractSet[Atom] = frozenset()) -> Iterator[Interpretation]:
    """Interpretations over vocabulary(formulas) | atoms satisfying all formulas."""
    formulas = list(formulas)
    for omega in interpretations(vocabulary(formulas) | frozenset(atoms)):
        if all(evaluate(omega, gamma) for gamma in formulas):
            yield omega


def satisfiable(formulas: Iterable[Formula]) -> bool:
    return next(models(formulas), None) is not None


def entails(gamma: Iterable[Formula], phi: Formula) -> bool:
    """True iff every model of gamma satisfies phi (unsatisfiable gamma entails everything)."""
    gamma = list(gamma)
    for omega in models(gamma, phi.atoms()):
        if not evaluate(omega, phi):
            return False
    return True


def is_tautology(phi: Formula) -> bool:
    return entails((), phi)


def is_contradiction(phi: Formula) -> bool:
    return not satisfiable((phi,))


def belief_status(gamma: Iterable[Formula], phi: Formula) -> BeliefStatus:
    """Four-valued status of phi with respect to the classical base gamma."""
    gamma = list(gamma)
    if not satisfiable(gamma):
        return BeliefStatus.INCONSISTENT
    if entails(gamma, phi):
        return BeliefStatus.TRUE
    if entails(gamma, Not(phi)):
        return BeliefStatus.FALSE
    return BeliefStatus.UNKNOWN
