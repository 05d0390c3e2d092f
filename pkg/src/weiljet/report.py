"""Pass/fail records shared by the checkers and the command line."""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import Polynomial, mono_str


@dataclass
class CheckEntry:
    name: str
    passed: bool
    witness: str | None = None
    detail: dict | None = None

    def to_json(self) -> dict:
        d = {"name": self.name, "verdict": "pass" if self.passed else "fail"}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    title: str
    entries: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def add(self, name: str, passed: bool, witness=None, detail=None) -> CheckEntry:
        entry = CheckEntry(name, bool(passed), witness, detail)
        self.entries.append(entry)
        return entry

    def extend(self, other: "Report", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(CheckEntry(prefix + e.name, e.passed, e.witness, e.detail))

    def failed(self) -> list[str]:
        return [e.name for e in self.entries if not e.passed]

    def entry(self, name: str) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "overall": "pass" if self.passed else "fail",
            "entries": [e.to_json() for e in self.entries],
        }

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            line = f"{mark}  {e.name}"
            if e.witness:
                line += f"  [{e.witness}]"
            out.append(line)
        out.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return out


def short(value, limit: int = 3) -> str:
    """A compact rendering of a possibly long difference polynomial."""
    if isinstance(value, Polynomial) and len(value.terms) > limit:
        head = Polynomial(dict(value.sorted_terms()[:limit]), value.nvars)
        return f"{head} + ... ({len(value.terms)} terms)"
    return str(value)


def describe_difference(diff, names=None) -> str | None:
    """Witness text for ``ProlongedPoint.first_difference`` output."""
    if diff is None:
        return None
    k, m, d = diff
    coord = names[k] if names else f"coordinate {k + 1}"
    return f"{coord}, coefficient of {mono_str(m)}: difference {short(d)}"
