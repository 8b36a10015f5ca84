"""Verification report models and their text / JSON-lines rendering."""

import json
import logging
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from srreg.algebra.complexes import SimplicialComplex, girth as complex_girth
from srreg.algebra.graphs import girth_class_of

logger = logging.getLogger(__name__)


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


class VerificationReport(BaseModel):
    """Outcome of one check on one instance.

    A FAIL must carry a ``reproduction`` payload (input, seed, field, flags)
    that is enough to rerun the check on its own.
    """

    suite: str
    instance: Dict[str, Any] = {}
    expected: Optional[Any] = None
    provenance: str = ""
    computed: Optional[Any] = None
    status: Status = Status.PASS
    reason: Optional[str] = None
    seconds: float = 0.0
    reproduction: Optional[Dict[str, Any]] = None

    @model_validator(mode="after")
    def _fail_needs_payload(self) -> "VerificationReport":
        if self.status == Status.FAIL and not self.reproduction:
            raise ValueError(f"FAIL report for {self.suite} has no reproduction payload")
        return self

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    def to_text(self) -> str:
        name = self.instance.get("name", "")
        line = f"[{self.status.value}] {self.suite} {name}".rstrip()
        if "s" in self.instance:
            line += f" s={self.instance['s']}"
        if self.expected is not None or self.computed is not None:
            line += f": expected {self.expected} ({self.provenance}), computed {self.computed}"
        if self.reason:
            line += f" - {self.reason}"
        return line + f" [{self.seconds:.2f}s]"


class ClassTiming(BaseModel):
    instances: int = 0
    seconds: float = 0.0


class SuiteSummary(BaseModel):
    """Counts, per-class timing and failures for one suite run."""

    suite: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    seconds: float = 0.0
    per_class: Dict[str, ClassTiming] = {}
    failures: List[VerificationReport] = []

    @classmethod
    def from_reports(cls, suite: str, reports: Iterable[VerificationReport], class_key: str = "class") -> "SuiteSummary":
        summary = cls(suite=suite)
        for report in reports:
            summary.total += 1
            summary.seconds += report.seconds
            if report.status == Status.PASS:
                summary.passed += 1
            elif report.status == Status.FAIL:
                summary.failed += 1
                summary.failures.append(report)
            else:
                summary.skipped += 1
            key = str(report.instance.get(class_key, "all"))
            timing = summary.per_class.setdefault(key, ClassTiming())
            timing.instances += 1
            timing.seconds += report.seconds
        return summary

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_text(self) -> str:
        lines = [
            f"{self.suite}: {self.passed} passed, {self.failed} failed, {self.skipped} skipped "
            f"of {self.total} [{self.seconds:.2f}s]"
        ]
        for key in sorted(self.per_class):
            timing = self.per_class[key]
            lines.append(f"  {key}: {timing.instances} instances, {timing.seconds:.2f}s")
        for failure in self.failures:
            lines.append("  " + failure.to_text())
            lines.append("    reproduce: " + json.dumps(failure.reproduction, sort_keys=True))
        return "\n".join(lines)


class TheoremCase(BaseModel):
    """Girth class of a one-dimensional complex and the regularity it predicts for J.

    Forests (girth INFINITY) get the 2s prediction but keep their own class
    so a deviation reads as a case outside the stated hypothesis.
    """

    model_config = ConfigDict(frozen=True)

    girth_class: str
    s: int

    @classmethod
    def for_complex(cls, delta: SimplicialComplex, s: int) -> "TheoremCase":
        return cls(girth_class=girth_class_of(complex_girth(delta)), s=s)

    @property
    def predicted(self) -> int:
        if self.girth_class == "3":
            return 3 * self.s
        if self.girth_class == "4":
            return 2 * self.s + 1
        return 2 * self.s

    @property
    def provenance(self) -> str:
        return {
            "3": "girth 3: 3s",
            "4": "girth 4: 2s+1",
            "5+": "girth >= 5: 2s",
            "inf": "acyclic, outside the girth hypothesis: 2s",
        }[self.girth_class]


def render_text(reports: Iterable[VerificationReport]) -> str:
    return "\n".join(r.to_text() for r in reports)


def render_json_lines(reports: Iterable[BaseModel]) -> str:
    return "\n".join(r.model_dump_json() for r in reports)


def log_failures(reports: Iterable[VerificationReport]) -> None:
    for report in reports:
        if report.status == Status.FAIL:
            logger.error(f"{report.to_text()} reproduce={json.dumps(report.reproduction, sort_keys=True)}")


def exit_code(reports: Iterable[VerificationReport]) -> int:
    return 1 if any(r.status == Status.FAIL for r in reports) else 0
