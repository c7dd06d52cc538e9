"""
Partial histories of a timed knowledge base.

The status of any formula can only change at an endpoint of some interval
of the base, so the time line is partitioned into breakpoints and the open
gaps between them; each piece is evaluated once, exactly.
"""

import logging
from typing import FrozenSet, Iterator, List, Tuple

from app.core.errors import ClosedHistoryViolation, EmptyITP
from app.logic.proplogic import belief_status, is_contradiction, is_tautology, satisfiable
from app.models.enums import BeliefStatus
from app.models.formula import Atom, Formula
from app.models.knowledge import TimedKB
from app.models.problem import ExtrapolationProblem, classify
from app.models.time import (
    ITPSet,
    Interval,
    IntervalSet,
    NEG_INF,
    POS_INF,
    TimePoint,
    is_finite,
    require_finite,
)

logger = logging.getLogger(__name__)


def cut(K: TimedKB, t: TimePoint) -> FrozenSet[Formula]:
    """K_t: the formulas of every entry whose time set contains t."""
    t = require_finite(t)
    return frozenset(entry.phi for entry in K if t in entry.tau)


def _resolve_inconsistent(status: BeliefStatus, phi: Formula) -> BeliefStatus:
    if status is not BeliefStatus.INCONSISTENT:
        return status
    if is_tautology(phi):
        return BeliefStatus.TRUE
    if is_contradiction(phi):
        return BeliefStatus.FALSE
    return BeliefStatus.UNKNOWN


def history_status(K: TimedKB, t: TimePoint, phi: Formula) -> BeliefStatus:
    """
    H_t(phi). At a time point whose cut is inconsistent every contingent
    formula is Unknown. Tautologies stay True and contradictions stay False
    there, where belief_status on the cut alone would say Inconsistent.
    """
    return _resolve_inconsistent(belief_status(cut(K, t), phi), phi)


def partition(K: TimedKB) -> Iterator[Tuple[Interval, TimePoint]]:
    """
    Pieces of the time line on which every cut is constant, each with a
    representative time point: breakpoints as point intervals, gaps as open
    intervals represented by their midpoint (or a point one unit inside an
    unbounded gap).
    """
    points = K.breakpoints()
    if not points:
        whole = Interval.whole_line()
        yield whole, whole.interior_point()
        return
    previous: TimePoint = NEG_INF
    for point in points:
        gap = Interval.open(previous, point)
        if not gap.is_empty:
            yield gap, gap.interior_point()
        yield Interval.point(point), point
        previous = point
    gap = Interval.open(previous, POS_INF)
    yield gap, gap.interior_point()


def inconsistent_pieces(K: TimedKB) -> IntervalSet:
    """Time points whose cut is unsatisfiable."""
    return IntervalSet(piece for piece, t in partition(K) if not satisfiable(cut(K, t)))


def itp(K: TimedKB, f: Atom) -> ITPSet:
    """
    Informative time points of fluent f: where its history status is True
    or False. Raises ClosedHistoryViolation when the set is not closed.
    """
    if f not in K.vocabulary:
        return ITPSet()
    informative = [
        piece for piece, t in partition(K) if history_status(K, t, f).is_informative
    ]
    union = IntervalSet(informative)
    for component in union:
        if not component.is_closed_set:
            raise ClosedHistoryViolation(f.name, str(component))
    logger.debug(f"ITP({f.name}) = {union}")
    return ITPSet(union)


def _known_value(K: TimedKB, t: TimePoint, f: Atom) -> bool:
    return history_status(K, t, f) is BeliefStatus.TRUE


def extrapolation_problems(K: TimedKB, f: Atom) -> List[ExtrapolationProblem]:
    """The maximal non-informative intervals of f, in time order, classified."""
    informative = itp(K, f)
    if not informative:
        raise EmptyITP(f.name)

    gaps: List[Interval] = []
    components = informative.components
    if is_finite(components[0].lower):
        gaps.append(Interval.open(NEG_INF, components[0].lower))
    for left, right in zip(components, components[1:]):
        gaps.append(Interval.open(left.upper, right.lower))
    if is_finite(components[-1].upper):
        gaps.append(Interval.open(components[-1].upper, POS_INF))

    problems = []
    for gap in gaps:
        if gap.is_empty:
            continue
        left_value = _known_value(K, gap.lower, f) if is_finite(gap.lower) else None
        right_value = _known_value(K, gap.upper, f) if is_finite(gap.upper) else None
        problem_class = classify(is_finite(gap.lower), is_finite(gap.upper), left_value, right_value)
        problems.append(ExtrapolationProblem(f, gap, problem_class, left_value, right_value))
    logger.debug(f"extrapolation problems for {f.name}: {[str(p) for p in problems]}")
    return problems


def problem_at(K: TimedKB, f: Atom, t: TimePoint) -> ExtrapolationProblem:
    """The extrapolation problem of f whose interval contains t."""
    for problem in extrapolation_problems(K, f):
        if t in problem.interval:
            return problem
    raise ValueError(f"t={t} is informative for {f.name}")
