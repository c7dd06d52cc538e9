from dataclasses import dataclass
from typing import Optional

from app.models.enums import ProblemClass
from app.models.formula import Atom
from app.models.time import Interval, is_finite


@dataclass(frozen=True)
class ExtrapolationProblem:
    """
    A maximal non-informative open interval of a fluent, with its class and
    the truth value of the fluent at each finite reference endpoint.
    """

    fluent: Atom
    interval: Interval
    problem_class: ProblemClass
    left_value: Optional[bool] = None
    right_value: Optional[bool] = None

    def __post_init__(self):
        if not self.interval.is_open_set or self.interval.is_empty:
            raise ValueError(f"extrapolation interval {self.interval} must be a non-empty open interval")
        lower_finite = is_finite(self.interval.lower)
        upper_finite = is_finite(self.interval.upper)
        if lower_finite != (self.left_value is not None):
            raise ValueError("left_value is required exactly when the lower endpoint is finite")
        if upper_finite != (self.right_value is not None):
            raise ValueError("right_value is required exactly when the upper endpoint is finite")
        if self.problem_class is not classify(lower_finite, upper_finite, self.left_value, self.right_value):
            raise ValueError(f"{self.problem_class.value} does not match interval {self.interval}")

    def __str__(self) -> str:
        parts = [f"{self.problem_class.value} {self.interval}"]
        if self.left_value is not None:
            parts.append(f"left={self.left_value}")
        if self.right_value is not None:
            parts.append(f"right={self.right_value}")
        return " ".join(parts)


def classify(lower_finite: bool, upper_finite: bool, left_value: Optional[bool], right_value: Optional[bool]) -> ProblemClass:
    if lower_finite and not upper_finite:
        return ProblemClass.FORWARD_UNBOUNDED
    if upper_finite and not lower_finite:
        return ProblemClass.BACKWARD_UNBOUNDED
    if lower_finite and upper_finite:
        if left_value == right_value:
            return ProblemClass.BOUNDED_NO_CHANGE
        return ProblemClass.BOUNDED_WITH_CHANGE
    raise ValueError("the whole time line is not an extrapolation problem")
