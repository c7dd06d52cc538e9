"""Random formulas, possibilistic bases and schemata for property tests."""

import random
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence

from app.logic.posslog import PossibilisticKB
from app.models.formula import And, Atom, Bottom, Formula, Not, Or, Top
from app.persistence.piecewise import PiecewiseLinearFn
from app.persistence.schema import FluentSchema

ATOMS = [Atom(name) for name in "ABCD"]
DEGREES = [Fraction(k, 10) for k in range(1, 11)]


def random_formula(rng: random.Random, atoms: Sequence[Atom], depth: int = 3) -> Formula:
    if depth == 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.05:
            return Top
        if roll < 0.1:
            return Bottom
        return rng.choice(list(atoms))
    kind = rng.choice(("not", "and", "or"))
    if kind == "not":
        return Not(random_formula(rng, atoms, depth - 1))
    left = random_formula(rng, atoms, depth - 1)
    right = random_formula(rng, atoms, depth - 1)
    return And(left, right) if kind == "and" else Or(left, right)


def mask_models(phi: Formula, atoms: Sequence[Atom]) -> FrozenSet[int]:
    """Set-algebra semantics: the bitmasks (bit i = atoms[i]) satisfying phi."""
    universe = frozenset(range(2 ** len(atoms)))
    if phi == Top:
        return universe
    if phi == Bottom:
        return frozenset()
    if isinstance(phi, Atom):
        bit = 1 << list(atoms).index(phi)
        return frozenset(m for m in universe if m & bit)
    if isinstance(phi, Not):
        return universe - mask_models(phi.operand, atoms)
    if isinstance(phi, And):
        return mask_models(phi.left, atoms) & mask_models(phi.right, atoms)
    return mask_models(phi.left, atoms) | mask_models(phi.right, atoms)


def random_kb(rng: random.Random, atoms: Sequence[Atom], size: int) -> PossibilisticKB:
    return PossibilisticKB(
        (random_formula(rng, atoms, 2), rng.choice(DEGREES)) for _ in range(size)
    )


def random_decreasing_fn(rng: random.Random) -> PiecewiseLinearFn:
    points = [(Fraction(0), Fraction(1))]
    offset, value = Fraction(0), Fraction(1)
    for _ in range(rng.randint(0, 3)):
        offset += Fraction(rng.randint(1, 12), rng.randint(1, 3))
        value -= value * Fraction(rng.randint(0, 4), 4)
        points.append((offset, value))
    return PiecewiseLinearFn(tuple(points))


def random_schema(rng: random.Random, fluent: Atom = Atom("f")) -> FluentSchema:
    return FluentSchema(
        fluent=fluent,
        forward_true=random_decreasing_fn(rng),
        backward_true=random_decreasing_fn(rng),
        forward_false=random_decreasing_fn(rng),
        backward_false=random_decreasing_fn(rng),
        change_split=Fraction(rng.randint(1, 7), 8),
    )


def random_length(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 60), rng.randint(1, 4))


def pi_necessity(pi: Dict, phi_models: FrozenSet[int]) -> Fraction:
    """N_pi(phi) for a distribution given as {bitmask: degree}."""
    return min((1 - pi[m] for m in pi if m not in phi_models), default=Fraction(1))


def all_masks(atoms: Sequence[Atom]) -> List[int]:
    return list(range(2 ** len(atoms)))
