"""Law reports: one verdict per axiom, with counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def show(value: Any) -> Any:
    """JSON-friendly rendering of elements, morphisms and set descriptions."""
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, frozenset):
        from .sets import canon_sorted
        return {"set": [show(v) for v in canon_sorted(value)]}
    if isinstance(value, (tuple, list)):
        return [show(v) for v in value]
    if isinstance(value, dict):
        return {str(k): show(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return repr(value)


@dataclass
class Violation:
    axiom: str
    witness: dict
    lhs: Any
    rhs: Any

    def to_json(self):
        return {"axiom": self.axiom, "witness": show(self.witness),
                "lhs": show(self.lhs), "rhs": show(self.rhs)}


@dataclass
class AxiomStat:
    checked: int = 0
    skipped: int | None = 0  # instances left out by sampling; None if unknown
    failed: int = 0

    @property
    def total(self):
        return None if self.skipped is None else self.checked + self.skipped

    @property
    def sampled(self):
        return self.skipped != 0


@dataclass
class LawReport:
    subject: str
    axioms: dict[str, AxiomStat] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    max_witnesses: int = 5

    @property
    def verdict(self) -> str:
        return "pass" if not self.violations else "fail"

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def partial(self) -> bool:
        return bool(self.notes) or any(s.sampled for s in self.axioms.values())

    def __bool__(self):
        return self.passed

    def stat(self, axiom: str) -> AxiomStat:
        if axiom not in self.axioms:
            self.axioms[axiom] = AxiomStat()
        return self.axioms[axiom]

    def declare(self, axiom: str, total: int | None = None, checked: int | None = None):
        """Announce that ``checked`` of ``total`` instances will be recorded."""
        s = self.stat(axiom)
        if total is None:
            s.skipped = None
        elif s.skipped is not None and checked is not None:
            s.skipped += total - checked

    def record(self, axiom, ok, witness=None, lhs=None, rhs=None) -> bool:
        s = self.stat(axiom)
        s.checked += 1
        if not ok:
            s.failed += 1
            if s.failed <= self.max_witnesses:
                self.violations.append(Violation(axiom, dict(witness or {}), lhs, rhs))
        return ok

    def expect_equal(self, cat, axiom, lhs, rhs, **witness) -> bool:
        """Record ``lhs == rhs`` as morphisms of ``cat``, with an element witness."""
        diff = cat.mor_diff(lhs, rhs)
        if diff is None:
            return self.record(axiom, True)
        where, lv, rv = diff
        w = dict(witness)
        if where is not None:
            w["element"] = where
        return self.record(axiom, False, w, lv, rv)

    def note(self, text: str):
        if text not in self.notes:
            self.notes.append(text)

    def failed_axioms(self) -> list[str]:
        return [a for a, s in self.axioms.items() if s.failed]

    def witnesses(self, axiom: str) -> list[Violation]:
        return [v for v in self.violations if v.axiom == axiom]

    def merge(self, other: "LawReport", prefix: str = "") -> "LawReport":
        for a, s in other.axioms.items():
            mine = self.stat(prefix + a)
            mine.checked += s.checked
            mine.failed += s.failed
            if s.skipped is None or mine.skipped is None:
                mine.skipped = None
            else:
                mine.skipped += s.skipped
        for v in other.violations:
            self.violations.append(Violation(prefix + v.axiom, v.witness, v.lhs, v.rhs))
        for n in other.notes:
            self.note(n)
        return self

    def to_json(self):
        axioms = []
        for a, s in self.axioms.items():
            entry = {"id": a, "verdict": "fail" if s.failed else "pass",
                     "checked": s.checked, "total": s.total}
            if s.sampled:
                entry["sampled"] = True
            ws = [v.to_json() for v in self.violations if v.axiom == a]
            if ws:
                entry["witness"] = ws[0]
                entry["failures"] = s.failed
            axioms.append(entry)
        out = {"subject": self.subject, "verdict": self.verdict, "axioms": axioms}
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def format_text(self) -> str:
        lines = [f"{self.subject}: {self.verdict.upper()}"]
        for a, s in self.axioms.items():
            mark = "FAIL" if s.failed else "ok"
            cov = f"{s.checked}" + (f"/{s.total}" if s.total is not None else "")
            if s.sampled:
                cov += " sampled"
            lines.append(f"  [{mark:>4}] {a} ({cov})")
            for v in self.violations:
                if v.axiom == a:
                    lines.append(f"         witness {show(v.witness)}: "
                                 f"lhs={show(v.lhs)} rhs={show(v.rhs)}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)

    def __str__(self):
        return self.format_text()
