import enum


class BeliefStatus(str, enum.Enum):
    """
    Four-valued belief status of a formula with respect to a classical base.
    The string values are the spelling used in every output.
    """

    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"
    INCONSISTENT = "Inconsistent"

    @property
    def is_informative(self) -> bool:
        return self in (BeliefStatus.TRUE, BeliefStatus.FALSE)


class ProblemClass(str, enum.Enum):
    """Classes of maximal non-informative intervals."""

    FORWARD_UNBOUNDED = "ForwardUnbounded"
    BACKWARD_UNBOUNDED = "BackwardUnbounded"
    BOUNDED_NO_CHANGE = "BoundedNoChange"
    BOUNDED_WITH_CHANGE = "BoundedWithChange"


class PersistenceKind(str, enum.Enum):
    """Trichotomy of bounded-no-change functions by their minimum value."""

    FULL = "full persistence"
    ELASTIC = "elastic persistence"
    PARTIALLY_ELASTIC = "partially elastic persistence"


class DecayKind(str, enum.Enum):
    """Shape of a single forward or backward persistence function."""

    FULL = "full persistence"
    LIMITED = "limited persistence"
    DEFAULT_CERTAINTY = "persistence with default certainty"
