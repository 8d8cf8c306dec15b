"""Check records shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Check:
    name: str
    status: str
    expected: Any = None
    actual: Any = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.expected is not None:
            out["expected"] = self.expected
        if self.actual is not None:
            out["actual"] = self.actual
        if self.detail:
            out["detail"] = self.detail
        return out


def compare(name: str, expected, actual, detail: str = "") -> Check:
    return Check(name, PASS if expected == actual else FAIL, expected, actual, detail)


def assertion(name: str, condition: bool, detail: str = "", **values) -> Check:
    c = Check(name, PASS if condition else FAIL, detail=detail)
    if values:
        c.actual = values
    return c


@dataclass
class CheckList:
    checks: list = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks):
        for c in checks:
            self.add(c)

    @property
    def overall(self) -> str:
        return PASS if all(c.ok for c in self.checks) else FAIL

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.ok]
