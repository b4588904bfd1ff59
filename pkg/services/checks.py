"""
services/checks.py
~~~~~~~~~~~~~~~~~~
Structured pass/fail records shared by every verification suite.

A failed check is data, not an exception: suites always return a full
report and the CLI decides the exit code from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"
    INFO = "INFO"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    margin: float | None = None   # distance from the threshold, positive when passing
    detail: str = ""

    @classmethod
    def judge(cls, name: str, ok: bool, margin: float | None = None, detail: str = "") -> "CheckResult":
        return cls(name, Status.PASS if ok else Status.FAIL, margin, detail)

    @classmethod
    def skipped(cls, name: str, detail: str = "") -> "CheckResult":
        return cls(name, Status.SKIP, None, detail)

    def line(self) -> str:
        margin = "-" if self.margin is None or math.isnan(self.margin) else f"{self.margin:.6g}"
        return f"{self.status.value} {self.name} {margin}"

    def to_dict(self) -> dict:
        margin = self.margin
        if margin is not None and not math.isfinite(margin):
            margin = None
        return {"name": self.name, "status": self.status.value, "margin": margin, "detail": self.detail}


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    @property
    def passed(self) -> bool:
        return all(c.status is not Status.FAIL for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status is Status.FAIL]

    def by_name(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "suite":  self.suite,
            "params": self.params,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
