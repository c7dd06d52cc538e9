"""
Possibilistic knowledge bases and their least-specific semantics.

A base K = {(phi_i, alpha_i)} constrains N(phi_i) >= alpha_i. All measures
are computed from the least specific possibility distribution satisfying K,
by enumeration of the interpretations of the joint vocabulary.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Tuple
import logging

from app.logic.proplogic import evaluate, interpretations
from app.models.degree import ONE, ZERO, RationalLike, as_degree
from app.models.formula import Atom, Bottom, Formula, Interpretation, Not, Top, implies

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NecessityFormula:
    """A necessity-valued formula: N(formula) >= lower_bound."""

    formula: Formula
    lower_bound: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lower_bound", as_degree(self.lower_bound))
        if self.lower_bound == ZERO:
            raise ValueError("a necessity bound of 0 is vacuous")


class PossibilisticKB:
    """
    A finite set of necessity-valued formulas.

    Zero bounds are dropped; a formula given twice keeps its largest bound.
    """

    __slots__ = ("_bounds",)

    def __init__(self, entries: Iterable = ()):
        bounds: Dict[Formula, Fraction] = {}
        for entry in entries:
            if isinstance(entry, NecessityFormula):
                formula, alpha = entry.formula, entry.lower_bound
            else:
                formula, alpha = entry
                alpha = as_degree(alpha)
            if alpha == ZERO:
                continue
            bounds[formula] = max(alpha, bounds.get(formula, ZERO))
        self._bounds = bounds

    @classmethod
    def from_pairs(cls, *pairs: Tuple[Formula, RationalLike]) -> "PossibilisticKB":
        return cls(pairs)

    @property
    def entries(self) -> FrozenSet[NecessityFormula]:
        return frozenset(NecessityFormula(f, a) for f, a in self._bounds.items())

    def bound(self, formula: Formula) -> Fraction:
        return self._bounds.get(formula, ZERO)

    @property
    def vocabulary(self) -> FrozenSet[Atom]:
        atoms: FrozenSet[Atom] = frozenset()
        for formula in self._bounds:
            atoms |= formula.atoms()
        return atoms

    def items(self):
        return self._bounds.items()

    def __len__(self) -> int:
        return len(self._bounds)

    def __eq__(self, other) -> bool:
        if isinstance(other, PossibilisticKB):
            return self._bounds == other._bounds
        return NotImplemented

    def __repr__(self) -> str:
        inner = "; ".join(f"({f!r}, {a})" for f, a in self._bounds.items())
        return f"PossibilisticKB({inner})"


def least_specific_pi(K: PossibilisticKB, omega: Interpretation) -> Fraction:
    """pi*_K(omega): min of 1 - alpha_i over the entries omega falsifies (1 if none)."""
    degree = ONE
    for formula, alpha in K.items():
        if not evaluate(omega, formula):
            degree = min(degree, ONE - alpha)
    return degree


def _joint_interpretations(K: PossibilisticKB, *formulas: Formula):
    atoms = K.vocabulary
    for formula in formulas:
        atoms |= formula.atoms()
    return interpretations(atoms)


def necessity(K: PossibilisticKB, phi: Formula) -> Fraction:
    """N*_K(phi): inf of 1 - pi*(omega) over the countermodels of phi."""
    degree = ONE
    for omega in _joint_interpretations(K, phi):
        if not evaluate(omega, phi):
            degree = min(degree, ONE - least_specific_pi(K, omega))
    return degree


def possibility(K: PossibilisticKB, phi: Formula) -> Fraction:
    """Pi*_K(phi): sup of pi*(omega) over the models of phi (0 if none)."""
    degree = ZERO
    for omega in _joint_interpretations(K, phi):
        if evaluate(omega, phi):
            degree = max(degree, least_specific_pi(K, omega))
    return degree


def inconsistency_degree(K: PossibilisticKB) -> Fraction:
    """Incons(K) = N*_K(Bottom) = 1 - sup pi*_K."""
    return necessity(K, Bottom)


def nm_entails(K: PossibilisticKB, phi: Formula, psi: Formula) -> bool:
    """phi |~_K psi iff N*(phi -> psi) > N*(!phi)."""
    return necessity(K, implies(phi, psi)) > necessity(K, Not(phi))


def nm_accepts(K: PossibilisticKB, psi: Formula) -> bool:
    """|~_K psi iff N*(psi) > Incons(K)."""
    return necessity(K, psi) > inconsistency_degree(K)


def is_normalized(K: PossibilisticKB) -> bool:
    return possibility(K, Top) == ONE
