"""Structured pass/fail reports with explicit witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Report:
    """Outcome of a check: ``fail`` always carries at least one witness."""

    check: str
    verdict: str  # "pass" | "fail"
    witnesses: tuple = ()
    counts: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in ("pass", "fail"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fail" and not self.witnesses:
            raise ValueError("fail report without witnesses")
        if self.verdict == "pass" and self.witnesses:
            raise ValueError("pass report with witnesses")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_obj(self) -> dict:
        return {
            "check": self.check,
            "verdict": self.verdict,
            "witnesses": [dict(w) for w in self.witnesses],
            "counts": dict(self.counts),
        }


def passing(check: str, counts: dict | None = None) -> Report:
    return Report(check=check, verdict="pass", counts=counts or {})


def failing(check: str, witnesses, counts: dict | None = None) -> Report:
    return Report(
        check=check,
        verdict="fail",
        witnesses=tuple(witnesses),
        counts=counts or {},
    )
