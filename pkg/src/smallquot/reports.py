"""Structured results shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

VERDICTS = ("pass", "fail", "exempt")


@dataclass
class CheckReport:
    """Outcome of one check.

    ``verdict`` is ``"pass"``, ``"fail"`` or ``"exempt"`` (a failure the
    check is allowed to have, reported with its witnesses).  A failing report
    always carries at least one witness.  ``columns``/``rows`` form the counts
    table; ``extra`` holds any further JSON-ready data.
    """

    name: str
    params: dict[str, Any]
    verdict: str
    witnesses: list[Any] = field(default_factory=list)
    columns: tuple[str, ...] = ()
    rows: list[tuple] = field(default_factory=list)
    extra: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}, got {self.verdict!r}")
        if self.verdict != "pass" and not self.witnesses:
            raise ValueError(f"a {self.verdict!r} report needs a witness")
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(f"row {row!r} does not match columns {self.columns!r}")

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.name,
            "params": self.params,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
            **({"extra": self.extra} if self.extra else {}),
        }


def combine(name: str, params: dict, parts: list[CheckReport]) -> CheckReport:
    """One report summarising several; fails if any part fails."""
    failing = [p for p in parts if p.failed]
    return CheckReport(
        name=name,
        params=params,
        verdict="fail" if failing else "pass",
        witnesses=[{"check": p.name, "witnesses": p.witnesses} for p in failing],
        columns=("check", "verdict"),
        rows=[(p.name, p.verdict) for p in parts],
        extra={"parts": [p.to_dict() for p in parts]},
    )
