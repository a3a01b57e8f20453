"""Check results shared by the verification routines and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS, FAIL = "pass", "fail"
VERDICTS = ("verified", "refuted", "inconclusive")


@dataclass
class Check:
    name: str
    status: str
    detail: Any = None

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class Report:
    """Named checks for one pair; ``ok`` is False iff some proven check failed."""

    pair: Any
    checks: list[Check] = field(default_factory=list)
    timing: float | None = None

    def add(self, name: str, status: str, detail: Any = None) -> Check:
        c = Check(name, status, detail)
        self.checks.append(c)
        return c

    def fail(self, name: str, detail: Any) -> None:
        self.add(name, FAIL, detail)

    def expect(self, name: str, cond: bool, detail_on_fail: Any = None, detail: Any = None) -> bool:
        self.add(name, PASS if cond else FAIL, detail if cond else detail_on_fail)
        return cond

    def expect_equal(self, name: str, got, want) -> bool:
        if got == want:
            return self.expect(name, True)
        if isinstance(got, (tuple, list)) and isinstance(want, (tuple, list)) and len(got) == len(want):
            idx = next(i for i, (x, y) in enumerate(zip(got, want)) if x != y)
            msg = f"index {idx}: got {got[idx]}, expected {want[idx]} ({list(got)} vs {list(want)})"
        elif isinstance(got, dict) and isinstance(want, dict):
            keys = sorted(k for k in set(got) | set(want) if got.get(k) != want.get(k))
            msg = f"index {keys[0]}: got {got.get(keys[0])}, expected {want.get(keys[0])}"
        else:
            msg = f"got {got!r}, expected {want!r}"
        return self.expect(name, False, msg)

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict:
        a, b = self.pair
        out = {"pair": [a, b], "checks": [c.to_dict() for c in self.checks]}
        if self.timing is not None:
            out["timing"] = round(self.timing, 6)
        return out


@dataclass
class Verdict:
    """Outcome of a conjecture probe: verified, refuted or inconclusive."""

    status: str
    witness: Any = None

    def __post_init__(self):
        if self.status not in VERDICTS:
            raise ValueError(f"unknown verdict {self.status!r}")

    def to_dict(self) -> dict:
        return {"status": self.status, "witness": self.witness}
