"""
Certainty profiles: continuous piecewise-polynomial functions on [0, length].

A profile is how a persistence construction looks over one bounded
interval, with x the offset from the interval's left end. Pieces are
polynomials with Fraction coefficients of degree at most 2 (a linear taper
times a linear schema piece), so monotonicity, minima and pointwise
comparisons are all decided exactly from endpoint and vertex values.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from app.models.degree import ZERO
from app.persistence.piecewise import PiecewiseLinearFn, eval_pl

DECREASING, FLAT, INCREASING = -1, 0, 1


class Polynomial:
    """Polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @classmethod
    def linear(cls, intercept, slope) -> "Polynomial":
        return cls((intercept, slope))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        return self.coeffs[power] if power < len(self.coeffs) else ZERO

    def __call__(self, x: Fraction) -> Fraction:
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        product = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Polynomial(product)

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def compose_affine(self, a: Fraction, b: Fraction) -> "Polynomial":
        """x -> self(a + b*x)."""
        result = Polynomial()
        inner = Polynomial.linear(a, b)
        for c in reversed(self.coeffs):
            result = result * inner + Polynomial.constant(c)
        return result

    def vertex(self) -> Optional[Fraction]:
        if self.degree == 2:
            return -self.coefficient(1) / (2 * self.coefficient(2))
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial{tuple(str(c) for c in self.coeffs)}"


@dataclass(frozen=True)
class Segment:
    start: Fraction
    end: Fraction
    poly: Polynomial

    def critical_points(self) -> List[Fraction]:
        points = [self.start, self.end]
        vertex = self.poly.vertex()
        if vertex is not None and self.start < vertex < self.end:
            points.insert(1, vertex)
        return points

    def monotone_runs(self) -> List[Tuple[Fraction, Fraction, int]]:
        runs = []
        bounds = self.critical_points()
        slope = self.poly.derivative()
        for a, b in zip(bounds, bounds[1:]):
            d = slope((a + b) / 2)
            direction = INCREASING if d > 0 else DECREASING if d < 0 else FLAT
            runs.append((a, b, direction))
        return runs


class CertaintyProfile:
    """A continuous piecewise polynomial on [0, length]."""

    __slots__ = ("segments",)

    def __init__(self, segments: Sequence[Segment]):
        segments = tuple(segments)
        if not segments:
            raise ValueError("a profile needs at least one segment")
        if segments[0].start != ZERO:
            raise ValueError("a profile starts at offset 0")
        for segment in segments:
            if segment.end <= segment.start:
                raise ValueError(f"empty segment [{segment.start},{segment.end}]")
            if segment.poly.degree > 2:
                raise ValueError("profile pieces are at most quadratic")
        for left, right in zip(segments, segments[1:]):
            if left.end != right.start:
                raise ValueError("profile segments must be contiguous")
        self.segments: Tuple[Segment, ...] = segments

    @property
    def length(self) -> Fraction:
        return self.segments[-1].end

    @classmethod
    def from_function(cls, fn: Callable[[Fraction], Fraction], breaks: Iterable[Fraction], length: Fraction) -> "CertaintyProfile":
        """Profile of a function known to be linear between the given breaks."""
        grid = sorted({ZERO, length} | {b for b in breaks if ZERO < b < length})
        segments = []
        for a, b in zip(grid, grid[1:]):
            va, vb = fn(a), fn(b)
            slope = (vb - va) / (b - a)
            segments.append(Segment(a, b, Polynomial.linear(va - slope * a, slope)))
        return cls(segments)

    @classmethod
    def from_pl(cls, fn: PiecewiseLinearFn, length: Fraction) -> "CertaintyProfile":
        return cls.from_function(lambda x: eval_pl(fn, x), (o for o, _ in fn.breakpoints), length)

    @classmethod
    def linear_ramp(cls, length: Fraction, start: Fraction, end: Fraction, descending: bool) -> "CertaintyProfile":
        """
        1 -> 0 linear on [0, end] then 0 (descending), or 0 on [0, start]
        then 0 -> 1 linear on [start, length] (ascending).
        """
        if descending:
            return cls.from_function(lambda x: max(ZERO, 1 - x / end), (end,), length)
        return cls.from_function(
            lambda x: max(ZERO, (x - start) / (length - start)), (start,), length
        )

    def breaks(self) -> List[Fraction]:
        return [s.start for s in self.segments] + [self.length]

    def segment_at(self, x: Fraction) -> Segment:
        if x < ZERO or x > self.length:
            raise ValueError(f"offset {x} is outside [0, {self.length}]")
        for segment in self.segments:
            if x <= segment.end:
                return segment
        return self.segments[-1]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        return self.segment_at(x).poly(x)

    def _refined(self, grid: Sequence[Fraction]) -> List[Segment]:
        points = sorted(set(grid) | set(self.breaks()))
        return [
            Segment(a, b, self.segment_at((a + b) / 2).poly)
            for a, b in zip(points, points[1:])
        ]

    def combine(self, other: "CertaintyProfile", op: Callable[[Polynomial, Polynomial], Polynomial]) -> "CertaintyProfile":
        if self.length != other.length:
            raise ValueError("profiles of different lengths cannot be combined")
        mine = self._refined(other.breaks())
        theirs = other._refined(self.breaks())
        return CertaintyProfile(
            [Segment(a.start, a.end, op(a.poly, b.poly)) for a, b in zip(mine, theirs)]
        )

    def __mul__(self, other: "CertaintyProfile") -> "CertaintyProfile":
        return self.combine(other, lambda p, q: p * q)

    def __sub__(self, other: "CertaintyProfile") -> "CertaintyProfile":
        return self.combine(other, lambda p, q: p - q)

    def maximum(self, other: "CertaintyProfile") -> "CertaintyProfile":
        """Pointwise max of two piecewise-linear profiles."""
        if self.length != other.length:
            raise ValueError("profiles of different lengths cannot be combined")
        mine = self._refined(other.breaks())
        theirs = other._refined(self.breaks())
        segments = []
        for a, b in zip(mine, theirs):
            if a.poly.degree > 1 or b.poly.degree > 1:
                raise ValueError("maximum is only defined for piecewise-linear profiles")
            diff = a.poly - b.poly
            bounds = [a.start, a.end]
            slope = diff.coefficient(1)
            if slope != 0:
                root = -diff.coefficient(0) / slope
                if a.start < root < a.end:
                    bounds.insert(1, root)
            for lo, hi in zip(bounds, bounds[1:]):
                upper = a.poly if diff((lo + hi) / 2) >= 0 else b.poly
                segments.append(Segment(lo, hi, upper))
        return CertaintyProfile(segments)

    def reflect(self) -> "CertaintyProfile":
        """x -> self(length - x)."""
        length = self.length
        return CertaintyProfile(
            [
                Segment(length - s.end, length - s.start, s.poly.compose_affine(length, Fraction(-1)))
                for s in reversed(self.segments)
            ]
        )

    def monotone_runs(self) -> List[Tuple[Fraction, Fraction, int]]:
        runs: List[Tuple[Fraction, Fraction, int]] = []
        for segment in self.segments:
            for a, b, direction in segment.monotone_runs():
                if runs and runs[-1][2] == direction:
                    runs[-1] = (runs[-1][0], b, direction)
                else:
                    runs.append((a, b, direction))
        return runs

    def direction_violations(self, lo: Fraction, hi: Fraction, forbidden: int) -> List[Tuple[Fraction, Fraction]]:
        """Sub-intervals of [lo, hi] on which the profile moves in the forbidden direction."""
        found = []
        for a, b, direction in self.monotone_runs():
            a, b = max(a, lo), min(b, hi)
            if a < b and direction == forbidden:
                found.append((a, b))
        return found

    def minimum(self) -> Tuple[Fraction, Fraction]:
        """(minimum value, first offset where it is attained)."""
        best: Optional[Tuple[Fraction, Fraction]] = None
        for segment in self.segments:
            for x in segment.critical_points():
                value = segment.poly(x)
                if best is None or value < best[0]:
                    best = (value, x)
        return best

    def first_below(self, floor: Fraction = ZERO) -> Optional[Fraction]:
        """First critical offset where the profile is strictly below floor, if any."""
        for segment in self.segments:
            for x in segment.critical_points():
                if segment.poly(x) < floor:
                    return x
        return None

    def dominance_violation(self, other: "CertaintyProfile", upto: Optional[Fraction] = None) -> Optional[Fraction]:
        """First offset in [0, upto] where self < other, or None if self >= other there."""
        upto = min(self.length, other.length) if upto is None else upto
        return (self.restrict(upto) - other.restrict(upto)).first_below(ZERO)

    def restrict(self, upto: Fraction) -> "CertaintyProfile":
        """The same profile on [0, upto]."""
        if upto == self.length:
            return self
        if not ZERO < upto < self.length:
            raise ValueError(f"cannot restrict a profile of length {self.length} to {upto}")
        segments = []
        for segment in self.segments:
            if segment.start >= upto:
                break
            segments.append(Segment(segment.start, min(segment.end, upto), segment.poly))
        return CertaintyProfile(segments)

    def zero_tail_start(self) -> Optional[Fraction]:
        """Smallest x with the profile identically 0 on [x, length]; None if it ends positive."""
        start = None
        for segment in reversed(self.segments):
            if segment.poly.is_zero:
                start = segment.start
                continue
            if start is None:
                return segment.end if segment.poly(segment.end) == ZERO else None
            return start
        return start

    def zero_head_end(self) -> Optional[Fraction]:
        """Largest x with the profile identically 0 on [0, x]; None if it starts positive."""
        end = None
        for segment in self.segments:
            if segment.poly.is_zero:
                end = segment.end
                continue
            if end is None:
                return segment.start if segment.poly(segment.start) == ZERO else None
            return end
        return end

    def __eq__(self, other) -> bool:
        if not isinstance(other, CertaintyProfile):
            return NotImplemented
        if self.length != other.length:
            return False
        return all(s.poly.is_zero for s in (self - other).segments)

    def __repr__(self) -> str:
        return f"CertaintyProfile(length={self.length}, pieces={len(self.segments)})"
