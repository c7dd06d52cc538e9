#!/usr/bin/env python3
"""
Persistence reasoning service.
This service will:
1. Load a timed knowledge base and a set of persistence schemata
2. Report belief statuses and extrapolation problems of fluents
3. Answer nonmonotonic queries and produce certainty timelines at time points
4. Validate the schemata against the persistence axioms
"""

import logging
from fractions import Fraction
from typing import Iterable, List, Optional

from app.core.config import settings
from app.engine.queries import (
    QueryVerdict,
    TimelineRow,
    conditional_query_at,
    nm_query_at,
    timeline,
)
from app.models.enums import BeliefStatus, ProblemClass
from app.models.formula import Atom, Formula
from app.models.knowledge import TimedKB
from app.models.problem import ExtrapolationProblem
from app.models.time import Interval, TimePoint
from app.parsing.kb_file import load_kb
from app.parsing.schema_file import load_schema
from app.persistence.extrapolation import instantiate
from app.persistence.schema import SchemaSet
from app.persistence.validators import ValidationReport, check_D3, validate_schema
from app.temporal.timeline import extrapolation_problems, history_status, inconsistent_pieces

logger = logging.getLogger("persistence_service")


def configure_logging(level: Optional[str] = None) -> None:
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format=settings.LOG_FORMAT,
    )


class PersistenceReasoner:
    """
    Reasoner over one timed knowledge base and one schema set.
    """

    def __init__(self, kb: TimedKB, pers: SchemaSet):
        self.kb = kb
        self.pers = pers
        unknown = [f.name for f in pers.fluents if f not in kb.vocabulary]
        if unknown:
            logger.warning(f"Schemata for fluents absent from the KB: {', '.join(unknown)}")
        inconsistent = inconsistent_pieces(kb)
        if inconsistent:
            logger.warning(f"Inconsistent facts on {inconsistent}: every contingent formula is Unknown there")
        logger.info(
            f"Persistence reasoner initialized: {len(kb)} declarations, {len(pers)} schemata"
        )

    @classmethod
    def from_files(cls, kb_path: Optional[str] = None, schema_path: Optional[str] = None) -> "PersistenceReasoner":
        """Load the KB and schema files, falling back to the configured paths."""
        kb = load_kb(kb_path or settings.KB_PATH)
        pers = load_schema(schema_path or settings.SCHEMA_PATH)
        return cls(kb, pers)

    def status(self, t: TimePoint, phi: Formula) -> BeliefStatus:
        return history_status(self.kb, t, phi)

    def query(self, t: TimePoint, psi: Formula, given: Optional[Formula] = None) -> QueryVerdict:
        if given is None:
            return nm_query_at(self.kb, self.pers, t, psi)
        return conditional_query_at(self.kb, self.pers, t, given, psi)

    def problems(self, fluent: Atom) -> List[ExtrapolationProblem]:
        return extrapolation_problems(self.kb, fluent)

    def persistence_kind(self, problem: ExtrapolationProblem) -> Optional[str]:
        """D3 classification of a bounded-no-change problem under the fluent's schema."""
        schema = self.pers.get(problem.fluent)
        if schema is None or problem.problem_class is not ProblemClass.BOUNDED_NO_CHANGE:
            return None
        profile, _ = instantiate(
            schema, problem.problem_class, problem.left_value, problem.interval.length
        )
        return check_D3(profile).classification

    def timeline(self, fluent: Atom, time_range: Interval, step: Fraction) -> List[TimelineRow]:
        return timeline(self.kb, self.pers, fluent, time_range, step)

    def validate(self, lengths: Optional[Iterable[Fraction]] = None, displayed: bool = False) -> List[ValidationReport]:
        lengths = list(lengths) if lengths else settings.validation_lengths
        reports: List[ValidationReport] = []
        for schema in self.pers:
            reports.extend(validate_schema(schema, lengths, displayed=displayed))
        return reports

