"""Named pass/fail verdicts shared by every verification operation."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class CheckResult:
    """One exact check. A failed check always carries a concrete ``witness``."""

    name: str
    passed: bool
    witness: Optional[Any] = None
    detail: Optional[str] = None

    def to_dict(self) -> dict:
        out = {'name': self.name, 'passed': self.passed}
        if self.witness is not None:
            out['witness'] = self.witness
        if self.detail:
            out['detail'] = self.detail
        return out


@dataclass(frozen=True)
class CheckReport:
    checks: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __iter__(self):
        return iter(self.checks)

    def to_dict(self) -> dict:
        return {'passed': self.passed, 'checks': [c.to_dict() for c in self.checks]}
