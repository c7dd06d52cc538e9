"""
Executable checks of the persistence axioms.

D1/D2 look at a single schema function (distance-to-reference form, so D2's
"non-decreasing towards the reference point" is again non-increasing in
the offset). D3/D4 look at bounded-interval profiles. H1-H3 compare the
class constructions a schema induces on intervals of two lengths; they use
the direction of the prose statement of homogeneity unless `displayed` is
set, in which case the inequalities are checked exactly as written in their
symbolic form (the two disagree for H1 and H3).
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional
import logging

from pydantic import BaseModel, ConfigDict, Field

from app.models.degree import ONE, ZERO
from app.models.enums import PersistenceKind, ProblemClass
from app.persistence.extrapolation import instantiate
from app.persistence.piecewise import PiecewiseLinearFn
from app.persistence.profile import DECREASING, INCREASING, CertaintyProfile
from app.persistence.schema import FUNCTION_FIELDS, FluentSchema

logger = logging.getLogger(__name__)


class ValidationReport(BaseModel):
    check: str
    subject: str = ""
    passed: bool = True
    violations: List[str] = Field(default_factory=list)
    witnesses: Dict[str, Fraction] = Field(default_factory=dict)
    flags: Dict[str, bool] = Field(default_factory=dict)
    classification: Optional[str] = None

    model_config = ConfigDict(arbitrary_types_allowed=True)

    def fail(self, message: str) -> None:
        self.passed = False
        self.violations.append(message)

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        text = f"{self.check} {self.subject}: {verdict}".replace("  ", " ")
        if self.witnesses:
            text += " (" + ", ".join(f"{k}={v}" for k, v in self.witnesses.items()) + ")"
        if self.classification:
            text += f" [{self.classification}]"
        if self.flags:
            text += " " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in self.flags.items())
        for violation in self.violations:
            text += f"\n    - {violation}"
        return text


def _check_non_increasing(check: str, fn: PiecewiseLinearFn, subject: str) -> ValidationReport:
    report = ValidationReport(check=check, subject=subject)
    for (o1, v1), (o2, v2) in fn.segments():
        if v2 > v1:
            report.fail(f"rises from {v1} to {v2} on segment [{o1},{o2}]")
    segments = list(fn.segments())
    report.flags["strictly_decreasing"] = bool(segments) and all(v2 < v1 for (_, v1), (_, v2) in segments)
    report.flags["strict_near_reference"] = bool(segments) and segments[0][1][1] < segments[0][0][1]
    return report


def check_D1(fn: PiecewiseLinearFn, subject: str = "") -> ValidationReport:
    """Forward function never increases with the distance to the reference point."""
    return _check_non_increasing("D1", fn, subject)


def check_D2(fn: PiecewiseLinearFn, subject: str = "") -> ValidationReport:
    """Backward function, in distance form, never increases with the distance."""
    return _check_non_increasing("D2", fn, subject)


def _kind_of(minimum: Fraction) -> PersistenceKind:
    if minimum == ONE:
        return PersistenceKind.FULL
    if minimum == ZERO:
        return PersistenceKind.PARTIALLY_ELASTIC
    return PersistenceKind.ELASTIC


def check_D3(profile: CertaintyProfile, subject: str = "") -> ValidationReport:
    """Valley shape: non-increasing up to some t*, non-decreasing after it."""
    report = ValidationReport(check="D3", subject=subject)
    seen_rise = None
    for a, b, direction in profile.monotone_runs():
        if direction == INCREASING and seen_rise is None:
            seen_rise = (a, b)
        elif direction == DECREASING and seen_rise is not None:
            report.fail(f"decreases on [{a},{b}] after increasing on [{seen_rise[0]},{seen_rise[1]}]")
    minimum, t_star = profile.minimum()
    report.witnesses["t*"] = t_star
    report.classification = _kind_of(minimum).value
    runs = profile.monotone_runs()
    report.flags["strict_at_ends"] = runs[0][2] == DECREASING and runs[-1][2] == INCREASING
    return report


def check_D4(f_profile: CertaintyProfile, not_f_profile: CertaintyProfile, subject: str = "") -> ValidationReport:
    """
    N(f) non-increasing then 0 from t', N(!f) 0 up to t'' then
    non-decreasing, with t' <= t''.
    """
    report = ValidationReport(check="D4", subject=subject)
    t_prime = f_profile.zero_tail_start()
    t_second = not_f_profile.zero_head_end()
    if t_prime is None:
        report.fail(f"N(f) is still positive at the right end ({f_profile(f_profile.length)})")
    if t_second is None:
        report.fail(f"N(!f) is already positive at the left end ({not_f_profile(ZERO)})")
    if not report.passed:
        return report
    report.witnesses["t'"] = t_prime
    report.witnesses["t''"] = t_second
    if t_prime > t_second:
        report.fail(f"t'={t_prime} exceeds t''={t_second}: N(f) and N(!f) overlap")
    for a, b in f_profile.direction_violations(ZERO, t_prime, INCREASING):
        report.fail(f"N(f) increases on [{a},{b}]")
    for a, b in not_f_profile.direction_violations(t_second, not_f_profile.length, DECREASING):
        report.fail(f"N(!f) decreases on [{a},{b}]")
    overlap = f_profile.combine(not_f_profile, lambda p, q: p * q)
    if any(not s.poly.is_zero for s in overlap.segments):
        report.fail("min(N(f), N(!f)) is not 0 throughout")
    return report


def _require_lengths(delta1: Fraction, delta2: Fraction) -> None:
    if not ZERO < delta1 <= delta2:
        raise ValueError(f"expected 0 < delta1 <= delta2, got {delta1} and {delta2}")


def _compare(report: ValidationReport, label: str, greater: CertaintyProfile, smaller: CertaintyProfile, upto: Fraction) -> None:
    x = greater.dominance_violation(smaller, upto)
    if x is not None:
        report.fail(f"{label}: fails at offset {x} ({greater(x)} < {smaller(x)})")


def _equal_length_corollary(report: ValidationReport, first: CertaintyProfile, second: CertaintyProfile, label: str) -> None:
    if first != second:
        report.fail(f"{label}: intervals of equal length give different functions")


def check_H1(schema: FluentSchema, delta1, delta2, displayed: bool = False) -> ValidationReport:
    """
    Two bounded-no-change problems: the shorter interval is at least as
    certain at equal offsets from either end (prose); `displayed` checks
    the reverse inequalities.
    """
    delta1, delta2 = Fraction(delta1), Fraction(delta2)
    _require_lengths(delta1, delta2)
    report = ValidationReport(check="H1", subject=f"{schema.fluent.name} {delta1}<={delta2}")
    for value in (True, False):
        short, _ = instantiate(schema, ProblemClass.BOUNDED_NO_CHANGE, value, delta1)
        long, _ = instantiate(schema, ProblemClass.BOUNDED_NO_CHANGE, value, delta2)
        pairs = [("from left", short, long), ("from right", short.reflect(), long.reflect())]
        for side, s, l in pairs:
            label = f"value={value} {side}"
            if displayed:
                _compare(report, label, l, s, delta1)
            else:
                _compare(report, label, s, l, delta1)
        if delta1 == delta2:
            _equal_length_corollary(report, short, long, f"value={value}")
    return report


def check_H2(schema: FluentSchema, delta) -> ValidationReport:
    """
    A bounded-no-change interval is at least as certain as forward
    extrapolation at equal offsets from the left end, and as backward
    extrapolation at equal offsets from the right end.
    """
    delta = Fraction(delta)
    report = ValidationReport(check="H2", subject=f"{schema.fluent.name} {delta}")
    for value in (True, False):
        bounded, _ = instantiate(schema, ProblemClass.BOUNDED_NO_CHANGE, value, delta)
        forward, _ = instantiate(schema, ProblemClass.FORWARD_UNBOUNDED, value, delta)
        backward, _ = instantiate(schema, ProblemClass.BACKWARD_UNBOUNDED, value, delta)
        _compare(report, f"value={value} vs forward", bounded, forward, delta)
        _compare(report, f"value={value} vs backward", bounded, backward, delta)
    return report


def check_H3(schema: FluentSchema, delta1, delta2, displayed: bool = False) -> ValidationReport:
    """
    Two bounded-with-change problems with the same left value: in the
    shorter interval N(f) is never above, and N(!f) never below, the longer
    interval's at equal offsets from the left end (prose). `displayed`
    checks N(f) never below from the left and N(!f) never above from the
    right.
    """
    delta1, delta2 = Fraction(delta1), Fraction(delta2)
    _require_lengths(delta1, delta2)
    report = ValidationReport(check="H3", subject=f"{schema.fluent.name} {delta1}<={delta2}")
    for value in (True, False):
        short_f, short_nf = instantiate(schema, ProblemClass.BOUNDED_WITH_CHANGE, value, delta1)
        long_f, long_nf = instantiate(schema, ProblemClass.BOUNDED_WITH_CHANGE, value, delta2)
        if displayed:
            _compare(report, f"value={value} N(f) from left", short_f, long_f, delta1)
            _compare(report, f"value={value} N(!f) from right", long_nf.reflect(), short_nf.reflect(), delta1)
        else:
            _compare(report, f"value={value} N(f) from left", long_f, short_f, delta1)
            _compare(report, f"value={value} N(!f) from left", short_nf, long_nf, delta1)
        if delta1 == delta2:
            _equal_length_corollary(report, short_f, long_f, f"value={value} N(f)")
            _equal_length_corollary(report, short_nf, long_nf, f"value={value} N(!f)")
    return report


def check_fb_symmetry(schema: FluentSchema, lengths: Iterable = ()) -> ValidationReport:
    """
    Forward and backward functions coincide for both values; with
    symmetry every no-change instantiation is symmetric about its midpoint.
    """
    report = ValidationReport(check="forward/backward symmetry", subject=schema.fluent.name)
    for value, label in ((True, "true"), (False, "false")):
        if schema.forward(value).normalized() != schema.backward(value).normalized():
            report.fail(f"forward {label} {schema.forward(value)} != backward {label} {schema.backward(value)}")
    if report.passed:
        for length in lengths:
            for value in (True, False):
                profile, _ = instantiate(schema, ProblemClass.BOUNDED_NO_CHANGE, value, Fraction(length))
                if profile != profile.reflect():
                    report.fail(f"no-change function over length {length} is not symmetric")
    return report


def check_negation_symmetry(schema: FluentSchema) -> ValidationReport:
    """'true' persists exactly the way 'false' does, in both directions."""
    report = ValidationReport(check="negation symmetry", subject=schema.fluent.name)
    if schema.forward_true.normalized() != schema.forward_false.normalized():
        report.fail(f"forward true {schema.forward_true} != forward false {schema.forward_false}")
    if schema.backward_true.normalized() != schema.backward_false.normalized():
        report.fail(f"backward true {schema.backward_true} != backward false {schema.backward_false}")
    return report


def validate_schema(schema: FluentSchema, lengths: Iterable, displayed: bool = False) -> List[ValidationReport]:
    """Every axiom check for one schema over the given interval lengths."""
    lengths = sorted({Fraction(length) for length in lengths})
    name = schema.fluent.name
    reports: List[ValidationReport] = []
    for field_name in FUNCTION_FIELDS:
        fn = getattr(schema, field_name)
        check = check_D1 if field_name.startswith("forward") else check_D2
        reports.append(check(fn, f"{name} {field_name.replace('_', ' ')}"))
    for length in lengths:
        for value in (True, False):
            profile, _ = instantiate(schema, ProblemClass.BOUNDED_NO_CHANGE, value, length)
            reports.append(check_D3(profile, f"{name}={value} length {length}"))
            f_profile, nf_profile = instantiate(schema, ProblemClass.BOUNDED_WITH_CHANGE, value, length)
            reports.append(check_D4(f_profile, nf_profile, f"{name}={value}->{not value} length {length}"))
        reports.append(check_H2(schema, length))
    for i, short in enumerate(lengths):
        for long in lengths[i:]:
            reports.append(check_H1(schema, short, long, displayed=displayed))
            reports.append(check_H3(schema, short, long, displayed=displayed))
    reports.append(check_fb_symmetry(schema, lengths))
    reports.append(check_negation_symmetry(schema))
    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"validated schema for {name}: {len(reports)} checks, {failed} failed")
    return reports
