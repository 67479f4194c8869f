"""Small pass/fail report used by every verify_* function."""

from __future__ import annotations

from dataclasses import dataclass, field


class ReportFailure(Exception):
    def __init__(self, report: "Report", line: "Line"):
        self.report = report
        self.line = line
        super().__init__(f"{report.title}: {line.text()}")

    @property
    def degree(self):
        return self.line.fields.get("d")

    @property
    def witness(self):
        return self.line.witness


@dataclass
class Line:
    passed: bool
    fields: dict
    detail: str = ""
    witness: object = None

    def text(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        parts = [head] + [f"{k}={v}" for k, v in self.fields.items()]
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)


@dataclass
class Report:
    title: str
    lines: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def check(self, passed: bool, detail: str = "", witness=None, **fields) -> bool:
        self.lines.append(Line(bool(passed), fields, detail, witness))
        return bool(passed)

    def note(self, text: str):
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(l.passed for l in self.lines)

    def first_failure(self):
        for l in self.lines:
            if not l.passed:
                return l
        return None

    def raise_if_failed(self):
        bad = self.first_failure()
        if bad is not None:
            raise ReportFailure(self, bad)
        return self

    def text(self) -> str:
        out = [self.title]
        out += [l.text() for l in self.lines]
        out += self.notes
        out.append(("PASSED" if self.passed else "FAILED") + f" ({sum(l.passed for l in self.lines)}/{len(self.lines)} checks)")
        return "\n".join(out)

    def __str__(self):
        return self.text()
