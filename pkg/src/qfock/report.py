from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    label: str
    passed: bool | None  # None: not applicable for these parameters
    detail: str = ""


@dataclass
class Report:
    """Pass/fail record of a verification suite."""

    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, label: str, passed: bool | None, detail: str = "") -> bool | None:
        self.checks.append(Check(label, None if passed is None else bool(passed), detail))
        return passed

    def extend(self, other: "Report") -> None:
        for c in other.checks:
            self.checks.append(Check(f"{other.name}: {c.label}", c.passed, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tag = {True: "PASS", False: "FAIL", None: "SKIP"}[c.passed]
            out.append(f"{tag}  {self.name}: {c.label}" + (f"  [{c.detail}]" if c.detail else ""))
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }
