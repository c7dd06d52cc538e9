"""
Nonmonotonic queries at a time point.

Apply(Pers, H) is never materialized: the possibilistic base is built for
each queried instant only.
"""

from fractions import Fraction
from typing import List, Optional
import logging

from pydantic import BaseModel, ConfigDict

from app.core.errors import TimePointError
from app.logic.posslog import inconsistency_degree, necessity
from app.models.enums import BeliefStatus
from app.models.formula import Atom, Formula, Not, implies
from app.models.knowledge import TimedKB
from app.models.time import Interval, TimePoint, as_time_point, require_finite
from app.persistence.extrapolation import apply_at
from app.persistence.schema import SchemaSet
from app.temporal.timeline import history_status

logger = logging.getLogger(__name__)


class QueryVerdict(BaseModel):
    """
    Outcome of |~_t. `inconsistency` is the degree the necessity must
    strictly exceed: Incons of the base for plain queries, N*(!given) for
    conditional ones.
    """

    formula: Formula
    time: Fraction
    necessity: Fraction
    inconsistency: Fraction
    accepted: bool
    given: Optional[Formula] = None

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class TimelineRow(BaseModel):
    t: Fraction
    n_true: Fraction
    n_false: Fraction
    status: BeliefStatus

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


def nm_query_at(K: TimedKB, pers: SchemaSet, t: TimePoint, psi: Formula) -> QueryVerdict:
    """|~_t psi iff N*_t(psi) > Incons(Apply(Pers, H)_t)."""
    t = require_finite(as_time_point(t))
    kb = apply_at(K, pers, t)
    degree = necessity(kb, psi)
    incons = inconsistency_degree(kb)
    verdict = QueryVerdict(
        formula=psi, time=t, necessity=degree, inconsistency=incons, accepted=degree > incons
    )
    logger.debug(f"query at t={t}: N={degree}, Incons={incons}, accepted={verdict.accepted}")
    return verdict


def conditional_query_at(K: TimedKB, pers: SchemaSet, t: TimePoint, phi: Formula, psi: Formula) -> QueryVerdict:
    """phi |~_t psi iff N*_t(phi -> psi) > N*_t(!phi)."""
    t = require_finite(as_time_point(t))
    kb = apply_at(K, pers, t)
    degree = necessity(kb, implies(phi, psi))
    bound = necessity(kb, Not(phi))
    return QueryVerdict(
        formula=psi, time=t, necessity=degree, inconsistency=bound, accepted=degree > bound, given=phi
    )


def timeline(K: TimedKB, pers: SchemaSet, f: Atom, time_range: Interval, step) -> List[TimelineRow]:
    """
    Certainty about f and !f from the lower end of the range in steps of
    `step`, always ending with a row at the upper end.
    """
    step = Fraction(step)
    if step <= 0:
        raise ValueError(f"timeline step must be positive, got {step}")
    if not time_range.is_bounded:
        raise TimePointError(f"timeline range {time_range} must have finite endpoints")
    times = []
    t = time_range.lower
    while t < time_range.upper:
        times.append(t)
        t += step
    times.append(time_range.upper)

    rows = []
    for t in times:
        kb = apply_at(K, pers, t)
        rows.append(
            TimelineRow(
                t=t,
                n_true=necessity(kb, f),
                n_false=necessity(kb, Not(f)),
                status=history_status(K, t, f),
            )
        )
    logger.info(f"timeline for {f.name} over {time_range}: {len(rows)} rows")
    return rows
