"""
Exception hierarchy for the reasoner.

Every error carries the exit code the command-line tool maps it to, so the
CLI can translate any library failure without a lookup table.
"""

from typing import Optional


class ReasonerError(Exception):
    """Base class for all reasoner errors (semantic errors by default)."""

    exit_code = 3


class ParseError(ReasonerError):
    """Syntax error in a formula, interval, KB file or schema file."""

    exit_code = 2

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class VocabularyError(ReasonerError):
    """An atom lies outside the vocabulary of an interpretation."""


class TimePointError(ReasonerError):
    """A time point is infinite where a finite one is needed, or out of range."""


class SchemaError(ReasonerError):
    """Malformed, duplicate or axiom-violating persistence schema."""

    def __init__(self, message: str, axiom: Optional[str] = None):
        self.axiom = axiom
        if axiom:
            message = f"{message} (violates {axiom})"
        super().__init__(message)


class ValidationFailure(ReasonerError):
    """One or more persistence axiom checks failed."""


class EmptyITP(ReasonerError):
    """The fluent has no informative time point, so nothing can be extrapolated."""

    def __init__(self, fluent: str):
        self.fluent = fluent
        super().__init__(f"fluent {fluent} has no informative time point")


class ClosedHistoryViolation(ReasonerError):
    """The informative set of a fluent has an open or half-open component."""

    exit_code = 4

    def __init__(self, fluent: str, component: str):
        self.fluent = fluent
        self.component = component
        super().__init__(
            f"informative set of {fluent} is not closed: offending component {component}"
        )
