from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    check: str
    label: str
    expected: Any
    got: Any
    passed: bool

    def to_json(self) -> dict:
        return {"check": self.check, "lambda": self.label, "expected": _jsonable(self.expected),
                "got": _jsonable(self.got), "pass": bool(self.passed)}


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, check: str, label, expected, got, passed=None) -> Check:
        if passed is None:
            passed = expected == got
        c = Check(check, str(label), expected, got, bool(passed))
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]


def _jsonable(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, float):
        return x if x != float("inf") else "inf"
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)
