"""
Time points and intervals over the continuous time scale (-inf, +inf).

A finite time point is an exact Fraction; the two infinities are the float
constants NEG_INF and POS_INF, which compare correctly against Fractions.
Arithmetic is only ever done on finite points.
"""

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Iterable, Iterator, List, Tuple, Union

from app.core.errors import TimePointError
from app.models.degree import RationalLike, as_rational

TimePoint = Union[Fraction, float]

NEG_INF: float = -math.inf
POS_INF: float = math.inf


def is_finite(t: TimePoint) -> bool:
    return not (isinstance(t, float) and math.isinf(t))


def as_time_point(value: Union[RationalLike, float]) -> TimePoint:
    if isinstance(value, float):
        if math.isinf(value):
            return value
        raise TypeError(f"finite time points must be exact rationals, got {value!r}")
    if isinstance(value, str):
        text = value.strip()
        if text in ("-inf", "-∞"):
            return NEG_INF
        if text in ("+inf", "inf", "+∞", "∞"):
            return POS_INF
    return as_rational(value)


def require_finite(t: TimePoint) -> Fraction:
    if not is_finite(t):
        raise TimePointError(f"a finite time point is required, got {render_time(t)}")
    return t


def render_time(t: TimePoint) -> str:
    if t == NEG_INF:
        return "-inf"
    if t == POS_INF:
        return "+inf"
    return str(t)


@dataclass(frozen=True)
class Interval:
    """
    An interval of the time scale with open or closed boundaries.

    lower <= upper; a degenerate interval is a closed point; infinite
    endpoints are always open. Open intervals (a, a) are allowed only as the
    empty result of a complement and are reported by `is_empty`.
    """

    lower: TimePoint
    upper: TimePoint
    lower_closed: bool = True
    upper_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lower", as_time_point(self.lower))
        object.__setattr__(self, "upper", as_time_point(self.upper))
        if self.lower > self.upper:
            raise ValueError(f"interval lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.lower == POS_INF or self.upper == NEG_INF:
            raise ValueError("an interval cannot start at +inf or end at -inf")
        if not is_finite(self.lower) and self.lower_closed:
            raise ValueError("infinite endpoints must be open")
        if not is_finite(self.upper) and self.upper_closed:
            raise ValueError("infinite endpoints must be open")
        if self.lower == self.upper and self.lower_closed != self.upper_closed:
            raise ValueError("a point interval must be closed on both sides")

    @classmethod
    def closed(cls, lower, upper) -> "Interval":
        return cls(lower, upper, True, True)

    @classmethod
    def open(cls, lower, upper) -> "Interval":
        return cls(lower, upper, False, False)

    @classmethod
    def point(cls, t) -> "Interval":
        return cls(t, t, True, True)

    @classmethod
    def whole_line(cls) -> "Interval":
        return cls(NEG_INF, POS_INF, False, False)

    @property
    def is_empty(self) -> bool:
        return self.lower == self.upper and not (self.lower_closed and self.upper_closed)

    @property
    def is_point(self) -> bool:
        return self.lower == self.upper and self.lower_closed

    @property
    def is_closed_set(self) -> bool:
        """Closed as a subset of the time scale: every finite endpoint belongs to it."""
        lower_ok = self.lower_closed or not is_finite(self.lower)
        upper_ok = self.upper_closed or not is_finite(self.upper)
        return lower_ok and upper_ok

    @property
    def is_open_set(self) -> bool:
        return not self.lower_closed and not self.upper_closed

    @property
    def is_bounded(self) -> bool:
        return is_finite(self.lower) and is_finite(self.upper)

    @property
    def length(self) -> Fraction:
        if not self.is_bounded:
            raise TimePointError(f"interval {self} has no finite length")
        return self.upper - self.lower

    def __contains__(self, t: TimePoint) -> bool:
        if t < self.lower or t > self.upper:
            return False
        if t == self.lower and not self.lower_closed:
            return False
        if t == self.upper and not self.upper_closed:
            return False
        return True

    def interior_point(self) -> Fraction:
        """A finite representative strictly inside a non-point interval."""
        if is_finite(self.lower) and is_finite(self.upper):
            return (self.lower + self.upper) / 2
        if is_finite(self.upper):
            return self.upper - 1
        if is_finite(self.lower):
            return self.lower + 1
        return Fraction(0)

    def __str__(self) -> str:
        if self.is_point:
            return f"[{render_time(self.lower)}]"
        left = "[" if self.lower_closed else "("
        right = "]" if self.upper_closed else ")"
        return f"{left}{render_time(self.lower)},{render_time(self.upper)}{right}"


def _touches(first: Interval, second: Interval) -> bool:
    """first starts no later than second; True if their union is one interval."""
    if first.upper > second.lower:
        return True
    if first.upper == second.lower:
        return first.upper_closed or second.lower_closed
    return False


def _merge(first: Interval, second: Interval) -> Interval:
    if second.upper > first.upper:
        upper, upper_closed = second.upper, second.upper_closed
    elif second.upper == first.upper:
        upper, upper_closed = first.upper, first.upper_closed or second.upper_closed
    else:
        upper, upper_closed = first.upper, first.upper_closed
    lower_closed = first.lower_closed
    if first.lower == second.lower:
        lower_closed = first.lower_closed or second.lower_closed
    return Interval(first.lower, upper, lower_closed, upper_closed)


def _start_key(interval: Interval) -> Tuple[TimePoint, int]:
    # a closed start precedes an open start at the same point
    return (interval.lower, 0 if interval.lower_closed else 1)


class IntervalSet:
    """A finite union of intervals, normalized to disjoint, sorted, unmergeable components."""

    __slots__ = ("components",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        ordered = sorted((i for i in intervals if not i.is_empty), key=_start_key)
        merged: List[Interval] = []
        for interval in ordered:
            if merged and _touches(merged[-1], interval):
                merged[-1] = _merge(merged[-1], interval)
            else:
                merged.append(interval)
        self.components: Tuple[Interval, ...] = tuple(merged)

    def __contains__(self, t: TimePoint) -> bool:
        return any(t in component for component in self.components)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __bool__(self) -> bool:
        return bool(self.components)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntervalSet):
            return self.components == other.components
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.components)

    def endpoints(self) -> List[Fraction]:
        points = []
        for component in self.components:
            for t in (component.lower, component.upper):
                if is_finite(t):
                    points.append(t)
        return points

    @property
    def is_closed_set(self) -> bool:
        return all(component.is_closed_set for component in self.components)

    def __str__(self) -> str:
        if not self.components:
            return "{}"
        return " u ".join(str(c) for c in self.components)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class ITPSet(IntervalSet):
    """Informative time points of a fluent: a union of closed intervals."""

    __slots__ = ()

    def __init__(self, intervals: Iterable[Interval] = ()):
        super().__init__(intervals)
        for component in self.components:
            if not component.is_closed_set:
                raise ValueError(f"component {component} of an informative set is not closed")
