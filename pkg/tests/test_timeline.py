import random
from fractions import Fraction

import pytest

from app.core.errors import ClosedHistoryViolation, EmptyITP, TimePointError
from app.models.enums import BeliefStatus, ProblemClass
from app.models.formula import And, Atom, Not, Or
from app.models.knowledge import TimedFormula, TimedKB
from app.models.problem import ExtrapolationProblem
from app.models.time import ITPSet, Interval, IntervalSet, NEG_INF, POS_INF, is_finite
from app.temporal.timeline import (
    cut,
    extrapolation_problems,
    history_status,
    inconsistent_pieces,
    itp,
    partition,
    problem_at,
)
from generators import random_formula

A, B, FREE = Atom("A"), Atom("B"), Atom("free")


class TestIntervals:
    def test_infinite_endpoints_must_be_open(self):
        with pytest.raises(ValueError):
            Interval(NEG_INF, 0, True, True)

    def test_point_interval(self):
        point = Interval.point(15)
        assert point.is_point
        assert 15 in point
        assert str(point) == "[15]"

    def test_open_degenerate_interval_is_empty(self):
        assert Interval.open(3, 3).is_empty

    def test_membership_respects_boundaries(self):
        interval = Interval(0, 10, False, True)
        assert 0 not in interval
        assert 10 in interval
        assert Fraction(1, 3) in interval

    def test_interval_set_merges_touching_components(self):
        merged = IntervalSet([Interval.closed(0, 5), Interval(5, 8, False, True), Interval.closed(10, 12)])
        assert [str(c) for c in merged] == ["[0,8]", "[10,12]"]

    def test_itp_set_rejects_open_components(self):
        with pytest.raises(ValueError):
            ITPSet([Interval.open(0, 1)])

    def test_length_of_unbounded_interval(self):
        with pytest.raises(TimePointError):
            Interval.open(0, POS_INF).length


class TestCut:
    def test_cut_examples(self, machines_kb):
        assert cut(machines_kb, 5) == {A}
        assert cut(machines_kb, 10) == {A}
        assert cut(machines_kb, 15) == {Or(Not(A), Not(B))}
        assert cut(machines_kb, 16) == frozenset()

    def test_cut_needs_a_finite_time(self, machines_kb):
        with pytest.raises(TimePointError):
            cut(machines_kb, POS_INF)

    def test_cut_contains_every_covering_entry(self, machines_kb):
        for entry in machines_kb:
            for component in entry.tau:
                assert entry.phi in cut(machines_kb, component.lower)
                assert entry.phi in cut(machines_kb, component.upper)

    def test_breakpoints(self, machines_kb):
        assert machines_kb.breakpoints() == [0, 10, 15, 17, 30]


class TestHistoryStatus:
    def test_statuses(self, machines_kb):
        assert history_status(machines_kb, 5, A) is BeliefStatus.TRUE
        assert history_status(machines_kb, 15, A) is BeliefStatus.UNKNOWN
        assert history_status(machines_kb, 20, B) is BeliefStatus.TRUE
        assert history_status(machines_kb, 20, Not(B)) is BeliefStatus.FALSE

    def test_inconsistent_cut(self):
        kb = TimedKB([TimedFormula(Interval.closed(0, 5), A), TimedFormula(Interval.point(3), Not(A))])
        assert history_status(kb, 3, A) is BeliefStatus.UNKNOWN
        assert history_status(kb, 3, Or(A, Not(A))) is BeliefStatus.TRUE
        assert history_status(kb, 3, And(A, Not(A))) is BeliefStatus.FALSE

    def test_inconsistent_cut_is_not_logged_per_call(self, caplog):
        kb = TimedKB([TimedFormula(Interval.closed(0, 5), A), TimedFormula(Interval.point(10), And(B, Not(B)))])
        with caplog.at_level("WARNING"):
            for _ in range(5):
                assert history_status(kb, 10, A) is BeliefStatus.UNKNOWN
            assert str(itp(kb, A)) == "[0,5]"
        assert not caplog.records

    def test_inconsistent_pieces(self, machines_kb):
        kb = machines_kb.with_entry(TimedFormula(Interval.point(20), Not(B)))
        assert str(inconsistent_pieces(kb)) == "[20]"
        assert not inconsistent_pieces(machines_kb)


class TestPartition:
    def test_empty_base_is_one_piece(self):
        pieces = list(partition(TimedKB()))
        assert len(pieces) == 1
        assert pieces[0][0] == Interval.whole_line()

    def test_pieces_cover_the_breakpoints(self, machines_kb):
        pieces = [piece for piece, _ in partition(machines_kb)]
        points = [p.lower for p in pieces if p.is_point]
        assert points == machines_kb.breakpoints()
        assert len(pieces) == 2 * len(points) + 1

    def test_cut_is_constant_on_each_piece(self, machines_kb):
        for piece, representative in partition(machines_kb):
            assert representative in piece
            expected = cut(machines_kb, representative)
            if piece.is_point:
                continue
            if piece.is_bounded:
                samples = [piece.lower + piece.length * Fraction(k, 5) for k in range(1, 5)]
            elif is_finite(piece.lower):
                samples = [piece.lower + Fraction(1, 7), piece.lower + 1000]
            else:
                samples = [piece.upper - Fraction(1, 7), piece.upper - 1000]
            for t in samples:
                assert cut(machines_kb, t) == expected


class TestITP:
    def test_machines(self, machines_kb):
        assert str(itp(machines_kb, A)) == "[0,10]"
        assert str(itp(machines_kb, B)) == "[17,30]"

    def test_parking(self, parking_kb):
        assert str(itp(parking_kb, FREE)) == "[-30,0] u [30,45] u [60,90]"

    def test_fluent_outside_vocabulary(self, machines_kb):
        assert not itp(machines_kb, Atom("C"))

    def test_open_informative_set_is_rejected(self):
        kb = TimedKB([TimedFormula(Interval(0, 10, False, True), A)])
        with pytest.raises(ClosedHistoryViolation) as excinfo:
            itp(kb, A)
        assert excinfo.value.component == "(0,10]"
        assert excinfo.value.exit_code == 4

    def test_hole_from_inconsistency_is_rejected(self):
        kb = TimedKB([TimedFormula(Interval.closed(0, 5), A), TimedFormula(Interval.closed(3, 4), Not(A))])
        with pytest.raises(ClosedHistoryViolation):
            itp(kb, A)


class TestExtrapolationProblems:
    def test_machines(self, machines_kb):
        problems = extrapolation_problems(machines_kb, A)
        assert [str(p) for p in problems] == [
            "BackwardUnbounded (-inf,0) right=True",
            "ForwardUnbounded (10,+inf) left=True",
        ]
        assert [str(p) for p in extrapolation_problems(machines_kb, B)] == [
            "BackwardUnbounded (-inf,17) right=True",
            "ForwardUnbounded (30,+inf) left=True",
        ]

    def test_parking_covers_every_class(self, parking_kb):
        problems = extrapolation_problems(parking_kb, FREE)
        assert [p.problem_class for p in problems] == [
            ProblemClass.BACKWARD_UNBOUNDED,
            ProblemClass.BOUNDED_NO_CHANGE,
            ProblemClass.BOUNDED_WITH_CHANGE,
            ProblemClass.FORWARD_UNBOUNDED,
        ]
        change = problems[2]
        assert change.interval == Interval.open(45, 60)
        assert change.left_value is True and change.right_value is False

    def test_reference_values_match_history(self, parking_kb):
        for problem in extrapolation_problems(parking_kb, FREE):
            interval = problem.interval
            if is_finite(interval.lower):
                status = history_status(parking_kb, interval.lower, FREE)
                assert status is (BeliefStatus.TRUE if problem.left_value else BeliefStatus.FALSE)
            if is_finite(interval.upper):
                status = history_status(parking_kb, interval.upper, FREE)
                assert status is (BeliefStatus.TRUE if problem.right_value else BeliefStatus.FALSE)

    def test_problems_and_itp_partition_the_line(self, parking_kb):
        informative = itp(parking_kb, FREE)
        problems = extrapolation_problems(parking_kb, FREE)
        for t in range(-60, 120, 5):
            inside = [p for p in problems if t in p.interval]
            assert len(inside) + (t in informative) == 1

    def test_empty_itp(self, machines_kb):
        with pytest.raises(EmptyITP):
            extrapolation_problems(machines_kb, Atom("C"))

    def test_adjacent_components_leave_no_gap(self):
        kb = TimedKB([TimedFormula(Interval.closed(0, 5), A), TimedFormula(Interval.closed(5, 9), A)])
        assert [p.problem_class for p in extrapolation_problems(kb, A)] == [
            ProblemClass.BACKWARD_UNBOUNDED,
            ProblemClass.FORWARD_UNBOUNDED,
        ]

    def test_problem_at(self, machines_kb):
        assert problem_at(machines_kb, A, 15).problem_class is ProblemClass.FORWARD_UNBOUNDED
        with pytest.raises(ValueError):
            problem_at(machines_kb, A, 5)

    def test_problem_validation(self):
        with pytest.raises(ValueError):
            ExtrapolationProblem(A, Interval.closed(0, 1), ProblemClass.BOUNDED_NO_CHANGE, True, True)
        with pytest.raises(ValueError):
            ExtrapolationProblem(A, Interval.open(0, 1), ProblemClass.BOUNDED_WITH_CHANGE, True, True)
        with pytest.raises(ValueError):
            ExtrapolationProblem(A, Interval.open(0, POS_INF), ProblemClass.FORWARD_UNBOUNDED)


SAMPLE_TIMES = [Fraction(k, 2) for k in range(-4, 56)]


def _random_interval(rng):
    lower = rng.randint(0, 20)
    return Interval.closed(lower, lower + rng.randint(0, 6))


def _random_history(rng):
    entries = [TimedFormula(_random_interval(rng), rng.choice((A, Not(A))))]
    for _ in range(rng.randint(0, 3)):
        entries.append(TimedFormula(_random_interval(rng), random_formula(rng, (A, B), 2)))
    return TimedKB(entries)


class TestRandomHistories:
    """Seeded bases of closed intervals over two atoms."""

    @pytest.mark.parametrize("seed", range(3))
    def test_cut_monotone_in_the_base(self, seed):
        rng = random.Random(seed)
        for _ in range(30):
            kb = _random_history(rng)
            extra = TimedFormula(_random_interval(rng), random_formula(rng, (A, B), 2))
            larger = kb.with_entry(extra)
            assert len(larger) == len(kb) + 1
            for t in SAMPLE_TIMES:
                assert cut(kb, t) <= cut(larger, t)
                assert cut(larger, t) - cut(kb, t) <= {extra.phi}

    @pytest.mark.parametrize("seed", range(3))
    def test_status_is_constant_on_pieces(self, seed):
        rng = random.Random(50 + seed)
        for _ in range(20):
            kb = _random_history(rng)
            pieces = list(partition(kb))
            for t in SAMPLE_TIMES:
                representative = next(r for p, r in pieces if t in p)
                for phi in (A, Or(A, B), And(A, Not(B))):
                    assert history_status(kb, t, phi) is history_status(kb, representative, phi)

    @pytest.mark.parametrize("seed", range(3))
    def test_itp_and_problems_partition_the_line(self, seed):
        rng = random.Random(100 + seed)
        checked = 0
        for _ in range(30):
            kb = _random_history(rng)
            try:
                informative = itp(kb, A)
                problems = extrapolation_problems(kb, A)
            except (ClosedHistoryViolation, EmptyITP):
                continue
            checked += 1
            for t in SAMPLE_TIMES:
                status = history_status(kb, t, A)
                containing = [p for p in problems if t in p.interval]
                if t in informative:
                    assert status.is_informative
                    assert not containing
                else:
                    assert status is BeliefStatus.UNKNOWN
                    assert len(containing) == 1
        assert checked
