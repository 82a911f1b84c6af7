"""Knot-table ingestion and the bridge/crossing bound check over a table."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .codecs import parse_diagram
from .diagram import Diagram
from .errors import BoundViolation, DiagramError, TooLarge
from .invariants import normalized_jones
from .passes import BoundsReport, RuleReport, check_bounds, check_rules, decompose, is_alternating

__all__ = ["CorpusRecord", "ingest_corpus", "verify_corpus", "bundled_table", "record_for", "report"]

log = logging.getLogger(__name__)

CODE_COLUMNS = ("pd_notation", "pd", "code", "gauss")


@dataclass(frozen=True)
class CorpusRecord:
    name: str
    diagram: Diagram
    b: int
    c: int
    alternating: bool
    bounds: BoundsReport
    rules: RuleReport | None

    @property
    def nontrivial(self) -> bool:
        return self.c > 0


def record_for(name: str, d: Diagram) -> CorpusRecord:
    """Table diagrams are taken to be minimal, so the bounds are evaluated."""
    return CorpusRecord(
        name=name,
        diagram=d,
        b=decompose(d).k,
        c=d.c,
        alternating=is_alternating(d),
        bounds=check_bounds(d, assume_minimal=True),
        rules=check_rules(d) if d.c else None,
    )


def _code_column(fieldnames):
    for col in CODE_COLUMNS:
        if col in fieldnames:
            return col
    return fieldnames[1] if len(fieldnames) > 1 else fieldnames[0]


def ingest_corpus(path, errors: list | None = None) -> list[CorpusRecord]:
    """One record per parsable CSV row (``name`` plus a PD or Gauss column).

    Rows that fail to parse are skipped with a warning and appended to
    ``errors`` as ``(row_number, name, message)`` when a list is given.
    """
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        return []
    reader = csv.DictReader(text.splitlines())
    col = _code_column(reader.fieldnames)
    records = []
    for rownum, row in enumerate(reader, start=2):
        name = row.get("name") or f"row{rownum}"
        try:
            d = parse_diagram(row[col] or "")
        except DiagramError as exc:
            log.warning("%s (row %d): %s", name, rownum, exc)
            if errors is not None:
                errors.append((rownum, name, str(exc)))
            continue
        records.append(record_for(name, d))
    return records


def bundled_table() -> Path:
    """Path of the shipped table of prime knots up to nine crossings."""
    return Path(str(resources.files("bridgepass") / "data" / "knots.csv"))


def verify_corpus(records) -> int:
    """Check the minimal-diagram inequalities on every nontrivial record.

    Returns the number of records checked; raises BoundViolation naming the
    first record that breaks ``b <= c <= b(b-2)`` or ``1 + sqrt(1 + c) <= b``.
    """
    checked = 0
    for rec in records:
        if not rec.nontrivial:
            continue
        bounds = rec.bounds
        failed = [
            name
            for name, ok in (
                ("b<=c", bounds.b_le_c),
                ("c<=b(b-2)", bounds.upper_ok),
                ("1+sqrt(1+c)<=b", bounds.lower_ok),
            )
            if not ok
        ]
        if failed:
            raise BoundViolation(f"{rec.name}: b={rec.b}, c={rec.c} violates {', '.join(failed)}", rec)
        checked += 1
    return checked


def report(rec: CorpusRecord, cap: int | None = None) -> dict:
    """The JSON-ready summary of one record."""
    try:
        jones = str(normalized_jones(rec.diagram, cap))
    except TooLarge:
        jones = None
    rules = rec.rules
    return {
        "name": rec.name,
        "b": rec.b,
        "c": rec.c,
        "alternating": rec.alternating,
        "rules": {
            "r1": rules.rule1_ok if rules else True,
            "r2": rules.rule2_ok if rules else True,
            "r3": rules.rule3_ok if rules else False,
        },
        "bounds": {
            "b_le_c": rec.bounds.b_le_c,
            "lower_ok": rec.bounds.lower_ok,
            "upper_ok": rec.bounds.upper_ok,
        },
        "jones": jones,
    }
