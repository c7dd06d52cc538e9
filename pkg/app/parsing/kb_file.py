"""
Timed knowledge base files: one `at <interval> : <formula>` declaration per
line, `#` starting a comment.
"""

from pathlib import Path
from typing import List, Union
import logging

from app.models.knowledge import TimedFormula, TimedKB
from app.parsing.grammar import (
    TokenStream,
    read_formula,
    read_interval,
    render_formula,
    tokenize,
)

logger = logging.getLogger(__name__)


def parse_kb(text: str) -> TimedKB:
    entries: List[TimedFormula] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stream = TokenStream(tokenize(line, first_line=number))
        if stream.current.kind == "EOF":
            continue
        stream.expect("at", " at the start of a declaration")
        interval = read_interval(stream)
        stream.expect(":", " after the interval")
        phi = read_formula(stream)
        stream.expect_end()
        entries.append(TimedFormula(interval, phi))
    logger.debug(f"parsed {len(entries)} timed formulas")
    return TimedKB(entries)


def load_kb(path: Union[str, Path]) -> TimedKB:
    kb = parse_kb(Path(path).read_text(encoding="utf-8"))
    logger.info(f"Loaded timed KB from {path}: {len(kb)} declarations")
    return kb


def render_kb(kb: TimedKB) -> str:
    """One declaration per interval component, in order."""
    lines = []
    for entry in kb:
        for component in entry.tau:
            lines.append(f"at {component} : {render_formula(entry.phi)}")
    return "\n".join(lines) + ("\n" if lines else "")
