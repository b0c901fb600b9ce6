"""Verification reports: ordered lists of named checks with witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

PASS, FAIL, VACUOUS, FLAGGED = "pass", "fail", "vacuous", "flagged"
STATUSES = (PASS, FAIL, VACUOUS, FLAGGED)


def jsonable(x: Any) -> Any:
    """Convert witnesses (tuples, numpy ints, elements) to plain JSON data."""
    from .fpmod import Element  # local import to avoid a cycle

    if isinstance(x, Element):
        return [int(v) for v in x.vector]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    try:
        return int(x)
    except (TypeError, ValueError):
        return str(x)


@dataclass
class Check:
    name: str
    status: str
    witness: Any = None
    note: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = jsonable(self.witness)
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    """Outcome of a verification; falsy iff some check failed."""

    title: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    timing: Optional[float] = None

    def add(self, name: str, ok: bool, witness: Any = None, note: str = "") -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, None if ok else witness, note))
        return ok

    def vacuous(self, name: str, note: str = ""):
        self.checks.append(Check(name, VACUOUS, None, note))

    def flag(self, name: str, note: str = "", witness: Any = None):
        self.checks.append(Check(name, FLAGGED, witness, note))

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.note))

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def status_of(self, name: str) -> str:
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {"title": self.title, "passed": self.passed,
             "checks": [c.to_dict() for c in self.checks]}
        if self.data:
            d["data"] = jsonable(self.data)
        if include_timing and self.timing is not None:
            d["timing_seconds"] = round(self.timing, 6)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        checks = [Check(c["name"], c["status"], c.get("witness"), c.get("note", "")) for c in d["checks"]]
        if any(c.status not in STATUSES for c in checks):
            raise ValueError("unknown check status")
        return cls(d["title"], checks, dict(d.get("data", {})), d.get("timing_seconds"))

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{c.status}] {c.name}"
            if c.note:
                line += f" -- {c.note}"
            if c.witness is not None:
                line += f" witness={json.dumps(jsonable(c.witness))}"
            lines.append(line)
        for k, v in self.data.items():
            lines.append(f"  {k}: {json.dumps(jsonable(v))}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()
