"""Report records shared by the verification registry, library checks and CLI."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identified verification check.

    A report passes iff the printable forms of expected and actual agree,
    so every check states up front what it must see.
    """

    check_id: str
    description: str
    expected: str
    actual: str
    passed: bool
    elapsed: float = 0.0


def make_report(check_id: str, description: str, expected: object, actual: object) -> CheckReport:
    exp, act = str(expected), str(actual)
    return CheckReport(check_id, description, exp, act, exp == act)


@dataclass(frozen=True)
class SuiteResult:
    """Ordered collection of check reports; passes iff every member passes."""

    reports: tuple[CheckReport, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)
