from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple


@dataclass(frozen=True)
class Violation:
    kind: str
    elements: Tuple
    words: Tuple[str, ...]
    message: str = ""

    def to_json(self) -> Dict[str, Any]:
        out = {"kind": self.kind, "witness": list(self.words)}
        if self.message:
            out["message"] = self.message
        return out


@dataclass
class Report:
    """Outcome of an exhaustive check.  Violations are data, not exceptions."""

    check: str
    ok: bool = True
    checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def add(self, violation: Violation) -> None:
        self.violations.append(violation)
        self.ok = False

    def to_json(self) -> Dict[str, Any]:
        out = {
            "check": self.check,
            "ok": self.ok,
            "checked": self.checked,
            "violations": [v.to_json() for v in self.violations],
        }
        out.update(self.details)
        return out
