"""
Piecewise-linear certainty functions of a non-negative offset.

Breakpoints are (offset, value) pairs with strictly increasing offsets, the
first at offset 0. Values are interpolated linearly between breakpoints and
held at the last value (the asymptote) beyond the final breakpoint.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from app.models.degree import ONE, ZERO, RationalLike, as_degree, as_rational
from app.models.enums import DecayKind

Breakpoint = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PiecewiseLinearFn:
    breakpoints: Tuple[Breakpoint, ...]

    def __post_init__(self):
        points = tuple((as_rational(o), as_degree(v)) for o, v in self.breakpoints)
        if not points:
            raise ValueError("a piecewise-linear function needs at least one breakpoint")
        if points[0][0] != ZERO:
            raise ValueError(f"first breakpoint must be at offset 0, got {points[0][0]}")
        for (o1, _), (o2, _) in zip(points, points[1:]):
            if o2 <= o1:
                raise ValueError(f"breakpoint offsets must strictly increase ({o1} then {o2})")
        object.__setattr__(self, "breakpoints", points)

    @classmethod
    def of(cls, *points: Tuple[RationalLike, RationalLike]) -> "PiecewiseLinearFn":
        return cls(tuple(points))

    @classmethod
    def constant(cls, value: RationalLike) -> "PiecewiseLinearFn":
        return cls(((0, value),))

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(v for _, v in self.breakpoints)

    @property
    def last_offset(self) -> Fraction:
        return self.breakpoints[-1][0]

    @property
    def asymptote(self) -> Fraction:
        return self.breakpoints[-1][1]

    def segments(self) -> Iterable[Tuple[Breakpoint, Breakpoint]]:
        return zip(self.breakpoints, self.breakpoints[1:])

    def __call__(self, offset: RationalLike) -> Fraction:
        return eval_pl(self, offset)

    def normalized(self) -> "PiecewiseLinearFn":
        """Equal function with collinear and trailing redundant breakpoints removed."""
        points = list(self.breakpoints)
        while len(points) > 1 and points[-1][1] == points[-2][1]:
            points.pop()
        kept = [points[0]]
        for index in range(1, len(points) - 1):
            (o0, v0), (o1, v1), (o2, v2) = kept[-1], points[index], points[index + 1]
            if (v1 - v0) * (o2 - o1) != (v2 - v1) * (o1 - o0):
                kept.append(points[index])
        if len(points) > 1:
            kept.append(points[-1])
        return PiecewiseLinearFn(tuple(kept))

    def __str__(self) -> str:
        inner = ",".join(f"({o},{v})" for o, v in self.breakpoints)
        return f"pw[{inner}]"


def eval_pl(fn: PiecewiseLinearFn, offset: RationalLike) -> Fraction:
    """Exact value of fn at a non-negative offset."""
    offset = as_rational(offset)
    if offset < ZERO:
        raise ValueError(f"offset must be non-negative, got {offset}")
    for (o1, v1), (o2, v2) in fn.segments():
        if offset <= o2:
            return v1 + (v2 - v1) * (offset - o1) / (o2 - o1)
    return fn.asymptote


def classify_persistence(fn: PiecewiseLinearFn) -> DecayKind:
    """
    Kind of a non-increasing schema function: constantly 1, reaching 0 at a
    finite offset, or levelling off at a default certainty in (0, 1).
    """
    if fn.asymptote == ONE and all(v == ONE for v in fn.values):
        return DecayKind.FULL
    if fn.asymptote == ZERO:
        return DecayKind.LIMITED
    return DecayKind.DEFAULT_CERTAINTY
