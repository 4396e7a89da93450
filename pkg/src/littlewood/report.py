"""Verification reports shared by the sweep functions and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    inputs: Any
    expected: Any
    actual: Any

    def to_doc(self) -> dict:
        return {"inputs": self.inputs, "expected": self.expected, "actual": self.actual}


@dataclass
class Report:
    suite: str
    cases: int
    violations: list = field(default_factory=list)
    wall_time: float = field(default=0.0, compare=False)

    def __post_init__(self):
        self.violations = sorted(self.violations, key=lambda v: json.dumps(v.to_doc(), sort_keys=True))

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_doc(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "violations": [v.to_doc() for v in self.violations],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "Report":
        return cls(
            doc["suite"],
            doc["cases"],
            [Violation(v["inputs"], v["expected"], v["actual"]) for v in doc["violations"]],
        )
