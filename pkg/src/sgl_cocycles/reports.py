"""Reports produced by the CLI and the verification sweeps.

Every rational is serialized as an exact ``"p"`` or ``"p/q"`` string.
"""
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

import tablib

from .base import format_rational
from .constants import FORMATS

__license__ = "MIT"
__all__ = (
    "Report",
    "ReportEntry",
    "Violation",
)

LOGGER = logging.getLogger(__name__)

ENTRY_HEADERS = ("lhs", "rhs", "value")
VIOLATION_HEADERS = ("check", "lhs", "rhs", "expected", "actual")


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


@dataclass(frozen=True)
class ReportEntry:
    """One reported value: a rational, or the text of an expression."""

    lhs: str
    rhs: str
    value: Union[Fraction, str]

    @property
    def text(self: "ReportEntry") -> str:
        if isinstance(self.value, Fraction):
            return format_rational(self.value)
        return self.value

    def as_dict(self: "ReportEntry") -> Dict[str, str]:
        return {"lhs": self.lhs, "rhs": self.rhs, "value": self.text}


@dataclass(frozen=True)
class Violation:
    """A pair (or triple) on which a checked identity fails."""

    check: str
    lhs: str
    rhs: str
    expected: Fraction
    actual: Fraction

    def as_dict(self: "Violation") -> Dict[str, str]:
        return {
            "check": self.check,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "expected": format_rational(self.expected),
            "actual": format_rational(self.actual),
        }


@dataclass
class Report:
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    entries: List[ReportEntry] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    checked: int = 0
    timing: Optional[float] = None

    @property
    def passed(self: "Report") -> bool:
        return not self.violations

    @property
    def status(self: "Report") -> str:
        return "pass" if self.passed else "fail"

    @property
    def exit_code(self: "Report") -> int:
        return 0 if self.passed else 1

    def add_entry(self: "Report", lhs: str, rhs: str, value: object) -> None:
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            self.entries.append(ReportEntry(lhs, rhs, Fraction(value)))
        else:
            self.entries.append(ReportEntry(lhs, rhs, str(value)))

    def add_violation(
        self: "Report",
        check: str,
        lhs: str,
        rhs: str,
        expected: Fraction,
        actual: Fraction,
    ) -> None:
        violation = Violation(
            check, lhs, rhs, Fraction(expected), Fraction(actual)
        )
        LOGGER.warning(
            f"{self.command}: {check} fails on ({lhs}, {rhs}): "
            f"expected {format_rational(violation.expected)}, "
            f"got {format_rational(violation.actual)}"
        )
        self.violations.append(violation)

    def add_note(self: "Report", note: str) -> None:
        self.notes.append(note)

    def extend(self: "Report", other: "Report") -> "Report":
        """Merge another report's findings into this one."""
        self.entries.extend(other.entries)
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)
        self.checked += other.checked
        return self

    def to_dict(
        self: "Report", include_timing: bool = False
    ) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "command": self.command,
            "params": _plain(self.params),
            "status": self.status,
            "checked": self.checked,
            "entries": [entry.as_dict() for entry in self.entries],
            "violations": [item.as_dict() for item in self.violations],
            "notes": list(self.notes),
        }
        if include_timing and self.timing is not None:
            data["timing"] = f"{self.timing:.3f}s"
        return data

    def to_json(self: "Report", include_timing: bool = False) -> str:
        return json.dumps(
            self.to_dict(include_timing=include_timing),
            indent=2,
            ensure_ascii=False,
        )

    def entries_dataset(self: "Report") -> tablib.Dataset:
        dataset = tablib.Dataset(headers=list(ENTRY_HEADERS))
        dataset.title = self.command
        for entry in self.entries:
            dataset.append([entry.lhs, entry.rhs, entry.text])
        return dataset

    def violations_dataset(self: "Report") -> tablib.Dataset:
        dataset = tablib.Dataset(headers=list(VIOLATION_HEADERS))
        dataset.title = "violations"
        for violation in self.violations:
            item = violation.as_dict()
            dataset.append([item[key] for key in VIOLATION_HEADERS])
        return dataset

    def to_csv(self: "Report") -> str:
        """Entries as CSV; violations follow after a blank line."""
        text = self.entries_dataset().export("csv")
        if self.violations:
            text += "\r\n" + self.violations_dataset().export("csv")
        return text

    def to_markdown(self: "Report", include_timing: bool = False) -> str:
        lines = [f"## {self.command}", ""]
        for key, value in self.to_dict()["params"].items():
            lines.append(f"- {key}: {value}")
        lines.append(f"- status: {self.status}")
        lines.append(f"- checked: {self.checked}")
        if include_timing and self.timing is not None:
            lines.append(f"- timing: {self.timing:.3f}s")
        if self.entries:
            lines.extend(
                ["", self.entries_dataset().export("cli", tablefmt="github")]
            )
        if self.violations:
            lines.extend(
                [
                    "",
                    "### violations",
                    "",
                    self.violations_dataset().export(
                        "cli", tablefmt="github"
                    ),
                ]
            )
        if self.notes:
            lines.append("")
            lines.extend(f"> {note}" for note in self.notes)
        return "\n".join(lines) + "\n"

    def render(
        self: "Report", fmt: str = "json", include_timing: bool = False
    ) -> str:
        if fmt not in FORMATS:
            raise ValueError(f"Unsupported format {fmt!r}")
        if fmt == "json":
            return self.to_json(include_timing=include_timing) + "\n"
        if fmt == "csv":
            return self.to_csv()
        return self.to_markdown(include_timing=include_timing)
