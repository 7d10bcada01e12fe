"""Structured results of verification and exploration runs."""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .rules import Position

# counterexample lists are truncated to this many entries; the total is kept
MAX_COUNTEREXAMPLES = 50


class Status(str, enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIPPED = "Skipped"


@dataclass(frozen=True)
class Counterexample:
    position: Position
    detail: str = ""

    def to_dict(self) -> dict:
        return {"a": self.position.low, "b": self.position.high, "detail": self.detail}


@dataclass
class VerificationReport:
    claim_id: str
    rule: str
    bounds: dict[str, int]
    status: Status = Status.PASS
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    total_counterexamples: int = 0

    kind = "verification"

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "claim_id": self.claim_id,
            "rule": self.rule,
            "bounds": dict(self.bounds),
            "status": self.status.value,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "total_counterexamples": self.total_counterexamples,
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "notes": list(self.notes),
            "details": self.details,
        }

    def summary(self) -> str:
        bounds = " ".join(f"{k}={v}" for k, v in self.bounds.items())
        lines = [f"{self.status.value.upper():7} {self.claim_id:14} {self.rule:12} {bounds}  ({self.elapsed * 1000:.1f} ms)"]
        for c in self.counterexamples[:10]:
            lines.append(f"        counterexample {c.position!r}: {c.detail}")
        if self.total_counterexamples > 10:
            lines.append(f"        ... {self.total_counterexamples} counterexamples in total")
        lines += [f"        note: {n}" for n in self.notes]
        return "\n".join(lines)


class Checker:
    """Collects counterexamples and notes, then settles the status.

    ``Fail`` iff a counterexample was recorded; otherwise ``Skipped`` if the
    check was marked skipped (or budget-limited), else ``Pass``.
    """

    def __init__(self, claim_id: str, rule, **bounds: int):
        self.report = VerificationReport(claim_id, str(rule), {k: int(v) for k, v in bounds.items()})
        self.skipped = False
        self._t0 = time.perf_counter()

    def fail(self, p, detail: str = "") -> None:
        r = self.report
        r.total_counterexamples += 1
        if len(r.counterexamples) < MAX_COUNTEREXAMPLES:
            if not isinstance(p, Position):
                p = Position(*p)
            r.counterexamples.append(Counterexample(p, detail))

    def note(self, text: str) -> None:
        self.report.notes.append(text)

    def skip(self, reason: str) -> None:
        self.skipped = True
        self.note(reason)

    def done(self, **details) -> VerificationReport:
        r = self.report
        r.details.update(details)
        if r.total_counterexamples:
            r.status = Status.FAIL
            if r.total_counterexamples > len(r.counterexamples):
                r.notes.append(f"only the first {len(r.counterexamples)} of {r.total_counterexamples} counterexamples are listed")
        elif self.skipped:
            r.status = Status.SKIPPED
        else:
            r.status = Status.PASS
        r.elapsed = time.perf_counter() - self._t0
        return r


@dataclass
class PeriodReport:
    rule: str
    row: int
    period: Optional[int]
    preperiod: Optional[int]
    checked_to: int
    stable_under_doubling: bool
    elapsed: float = 0.0

    kind = "period"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rule": self.rule,
            "row": self.row,
            "period": self.period,
            "preperiod": self.preperiod,
            "checked_to": self.checked_to,
            "stable_under_doubling": self.stable_under_doubling,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def summary(self) -> str:
        if self.period is None:
            found = "no period observed"
        else:
            found = f"p={self.period} n0={self.preperiod}"
        stable = "stable" if self.stable_under_doubling else "not stable"
        return f"PERIOD  {self.rule:12} row={self.row:<4} {found}  (b<={self.checked_to}, {stable} under doubling)"


@dataclass
class SurveyReport:
    bound: int
    entries: list[dict]
    elapsed: float = 0.0

    kind = "survey"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "bound": self.bound, "entries": self.entries, "elapsed_ms": round(self.elapsed * 1000, 3)}

    def summary(self) -> str:
        lines = [f"SURVEY  value-1 sets vs (a(n)-1, b(n)-1), positions with high <= {self.bound}"]
        for e in self.entries:
            keeps = "keeps" if e["preserves_p_positions"] else "changes"
            lines.append(
                f"        {e['rule']:14} {keeps} Wythoff P-positions; extra {_fmt(e['extra'])}; missing {_fmt(e['missing'])}"
            )
        return "\n".join(lines)


def _fmt(ps: list) -> str:
    if not ps:
        return "{}"
    shown = ", ".join(f"({a},{b})" for a, b in ps[:8])
    return "{" + shown + (", ..." if len(ps) > 8 else "") + "}"


Report = Union[VerificationReport, PeriodReport, SurveyReport]


def to_json(reports: list[Report]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False)


def to_text(reports: list[Report]) -> str:
    return "\n".join(r.summary() for r in reports)


def any_failed(reports: list[Report]) -> bool:
    return any(isinstance(r, VerificationReport) and r.failed for r in reports)
