"""
Solving extrapolation problems with persistence schemata, and building the
possibilistic knowledge base Apply(Pers, H)_t at a time point.

Constructions by problem class, v being the known value at the reference
end(s), x = t - t0 and y = t1 - t:

- forward:   N(v) = forward_v(x)
- backward:  N(v) = backward_v(y)
- no change: N(v) = max(forward_v(x), backward_v(y))
- change:    N(v) = forward_v(x) * max(0, 1 - x / (s * d)),
             N(!v) = backward_!v(y) * max(0, 1 - y / ((1 - s) * d))
             with d = t1 - t0 and s the schema's change split.

The degree of the opposite polarity is 0 except in the change class.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple
import logging

from app.core.errors import SchemaError, TimePointError
from app.logic.posslog import PossibilisticKB
from app.models.degree import ONE, ZERO
from app.models.enums import ProblemClass
from app.models.formula import Formula, Not
from app.models.knowledge import TimedKB
from app.models.problem import ExtrapolationProblem
from app.models.time import TimePoint, require_finite, render_time
from app.persistence.piecewise import eval_pl
from app.persistence.profile import CertaintyProfile
from app.persistence.schema import FluentSchema, SchemaSet
from app.temporal.timeline import cut, extrapolation_problems, itp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtrapolatedDegrees:
    """N_t(f) and N_t(!f); extrapolation never makes a time point partially inconsistent."""

    n_true: Fraction
    n_false: Fraction

    def __post_init__(self):
        if min(self.n_true, self.n_false) != ZERO:
            raise ValueError(
                f"extrapolated degrees {self.n_true} and {self.n_false} are both positive"
            )

    @classmethod
    def for_value(cls, value: bool, known: Fraction, opposite: Fraction = ZERO) -> "ExtrapolatedDegrees":
        if value:
            return cls(known, opposite)
        return cls(opposite, known)


def _taper(distance: Fraction, span: Fraction) -> Fraction:
    return max(ZERO, ONE - distance / span)


def extrapolate(problem: ExtrapolationProblem, schema: Optional[FluentSchema], t: TimePoint) -> ExtrapolatedDegrees:
    """Certainty about the fluent of `problem` at t, strictly inside its interval."""
    if schema is None:
        raise SchemaError(f"no persistence schema for fluent {problem.fluent.name}")
    if schema.fluent != problem.fluent:
        raise SchemaError(
            f"schema for {schema.fluent.name} cannot solve a problem about {problem.fluent.name}"
        )
    t = require_finite(t)
    if t not in problem.interval:
        raise TimePointError(f"t={render_time(t)} is outside {problem.interval}")

    interval = problem.interval
    kind = problem.problem_class
    if kind is ProblemClass.FORWARD_UNBOUNDED:
        v = problem.left_value
        degrees = ExtrapolatedDegrees.for_value(v, eval_pl(schema.forward(v), t - interval.lower))
    elif kind is ProblemClass.BACKWARD_UNBOUNDED:
        v = problem.right_value
        degrees = ExtrapolatedDegrees.for_value(v, eval_pl(schema.backward(v), interval.upper - t))
    elif kind is ProblemClass.BOUNDED_NO_CHANGE:
        v = problem.left_value
        known = max(
            eval_pl(schema.forward(v), t - interval.lower),
            eval_pl(schema.backward(v), interval.upper - t),
        )
        degrees = ExtrapolatedDegrees.for_value(v, known)
    else:
        v = problem.left_value
        x, y, d = t - interval.lower, interval.upper - t, interval.length
        split = schema.change_split
        known = eval_pl(schema.forward(v), x) * _taper(x, split * d)
        opposite = eval_pl(schema.backward(not v), y) * _taper(y, (ONE - split) * d)
        degrees = ExtrapolatedDegrees.for_value(v, known, opposite)
    logger.debug(
        f"{problem.fluent.name} at t={t} ({kind.value}): "
        f"N(f)={degrees.n_true}, N(!f)={degrees.n_false}"
    )
    return degrees


def instantiate(schema: FluentSchema, kind: ProblemClass, value: bool, length: Fraction) -> Tuple[CertaintyProfile, CertaintyProfile]:
    """
    Profiles (N(v), N(!v)) of a class construction over an interval of the
    given length, x measured from the left end. For the unbounded classes
    the length is a horizon and the reference point is the finite end
    (left for forward, right for backward); v is the reference value (the
    left value for bounded classes).
    """
    length = Fraction(length)
    if length <= ZERO:
        raise ValueError(f"interval length must be positive, got {length}")
    zero = CertaintyProfile.from_function(lambda x: ZERO, (), length)
    forward = CertaintyProfile.from_pl(schema.forward(value), length)
    backward = CertaintyProfile.from_pl(schema.backward(value), length).reflect()
    if kind is ProblemClass.FORWARD_UNBOUNDED:
        return forward, zero
    if kind is ProblemClass.BACKWARD_UNBOUNDED:
        return backward, zero
    if kind is ProblemClass.BOUNDED_NO_CHANGE:
        return forward.maximum(backward), zero
    turning = schema.change_split * length
    known = forward * CertaintyProfile.linear_ramp(length, turning, turning, descending=True)
    arriving = CertaintyProfile.from_pl(schema.backward(not value), length).reflect()
    opposite = arriving * CertaintyProfile.linear_ramp(length, turning, turning, descending=False)
    return known, opposite


def apply_at(K: TimedKB, pers: SchemaSet, t: TimePoint) -> PossibilisticKB:
    """
    Apply(Pers, H)_t: the cut at t with degree 1, plus the extrapolated
    literals of every schema-bearing fluent that is not informative at t.
    """
    t = require_finite(t)
    entries: List[Tuple[Formula, Fraction]] = [(phi, ONE) for phi in cut(K, t)]
    vocabulary = K.vocabulary
    for schema in pers:
        f = schema.fluent
        if f not in vocabulary:
            continue
        informative = itp(K, f)
        if not informative or t in informative:
            continue
        for problem in extrapolation_problems(K, f):
            if t in problem.interval:
                degrees = extrapolate(problem, schema, t)
                entries.append((f, degrees.n_true))
                entries.append((Not(f), degrees.n_false))
                break
    kb = PossibilisticKB(entries)
    logger.debug(f"Apply(Pers, H) at t={t}: {kb}")
    return kb
