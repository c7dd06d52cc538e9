"""Timed factual knowledge: formulas holding over sets of time points."""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Tuple

from app.models.formula import Atom, Formula
from app.models.time import Interval, IntervalSet


@dataclass(frozen=True)
class TimedFormula:
    """tau : phi -- phi holds at every time point of tau."""

    tau: IntervalSet
    phi: Formula

    def __post_init__(self):
        tau = self.tau
        if isinstance(tau, Interval):
            tau = IntervalSet([tau])
        elif not isinstance(tau, IntervalSet):
            tau = IntervalSet(tau)
        object.__setattr__(self, "tau", tau)


class TimedKB:
    """A finite sequence of timed formulas."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[TimedFormula] = ()):
        self.entries: Tuple[TimedFormula, ...] = tuple(entries)

    def with_entry(self, entry: TimedFormula) -> "TimedKB":
        return TimedKB(self.entries + (entry,))

    def breakpoints(self) -> List[Fraction]:
        """Sorted distinct finite endpoints of every interval in the base."""
        points = set()
        for entry in self.entries:
            points.update(entry.tau.endpoints())
        return sorted(points)

    @property
    def vocabulary(self) -> FrozenSet[Atom]:
        atoms: FrozenSet[Atom] = frozenset()
        for entry in self.entries:
            atoms |= entry.phi.atoms()
        return atoms

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, TimedKB):
            return self.entries == other.entries
        return NotImplemented

    def __repr__(self) -> str:
        return f"TimedKB({len(self.entries)} entries)"
