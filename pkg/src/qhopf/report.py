"""Pass/fail bookkeeping for axiom checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass
class Check:
    passed: bool
    residual: Any = None  # difference of the two sides when failing
    detail: str = ""

    def __bool__(self):
        return self.passed


@dataclass
class AxiomReport:
    checks: dict[str, Check] = field(default_factory=dict)

    def add(self, name: str, passed: bool, residual=None, detail: str = "") -> Check:
        c = Check(bool(passed), None if passed else residual, detail)
        self.checks[name] = c
        return c

    def merge(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for k, v in other.checks.items():
            self.checks[prefix + k] = v
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def __bool__(self):
        return self.passed

    def __getitem__(self, name):
        return self.checks[name]

    def __iter__(self):
        return iter(self.checks.items())

    def failures(self) -> list[str]:
        return [k for k, c in self.checks.items() if not c.passed]

    def __repr__(self):
        body = ", ".join(f"{k}={'pass' if c.passed else 'fail'}" for k, c in self.checks.items())
        return f"AxiomReport({body})"


def format_value(v) -> str:
    if isinstance(v, Check):
        return "pass" if v.passed else "fail"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple, np.ndarray)):
        return "[" + ",".join(format_value(x) for x in np.asarray(v).reshape(-1).tolist()) + "]"
    return str(v)


class Report:
    """Ordered key=value records; entries added through check() decide the exit status."""

    def __init__(self):
        self.items: list[tuple[str, Any]] = []

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def check(self, key: str, passed) -> bool:
        self.add(key, Check(bool(passed)))
        return bool(passed)

    def add_axioms(self, rep: AxiomReport, prefix: str = "check.") -> None:
        for name, c in rep:
            self.check(prefix + name, c.passed)

    @property
    def passed(self) -> bool:
        return all(v.passed for _, v in self.items if isinstance(v, Check))

    def __getitem__(self, key):
        for k, v in self.items:
            if k == key:
                return v
        raise KeyError(key)

    def text(self) -> str:
        return "".join(f"{k}={format_value(v)}\n" for k, v in self.items)

    def json(self) -> str:
        import json

        return json.dumps({k: format_value(v) for k, v in self.items}, indent=1, ensure_ascii=False) + "\n"
