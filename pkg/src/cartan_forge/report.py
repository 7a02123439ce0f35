"""Deterministic report objects with text and JSON renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .forms import DForm
from .expr import Expr


def render(value):
    """Canonical JSON-friendly rendering of engine values."""
    if isinstance(value, (DForm, Expr)):
        return value.to_text()
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    return value


def residue_terms(w: DForm | None) -> list[str]:
    if w is None or w.is_zero():
        return []
    return [DForm(w.space, {b: c}).to_text() for b, c in _sorted_terms(w)]


def _sorted_terms(w: DForm):
    from .printer import basis_sort_key

    return sorted(w.terms.items(), key=lambda item: basis_sort_key(item[0]))


@dataclass
class Check:
    name: str
    ok: bool
    residue: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "verdict": "PASS" if self.ok else "FAIL",
            "residue_terms": list(self.residue),
            "certificates": render(self.certificates),
            "witnesses": render(self.witnesses),
        }


@dataclass
class Report:
    command: str
    subject: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    error: str | None = None
    error_terms: list = field(default_factory=list)
    timing: dict | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(c.ok for c in self.checks)

    def check(self, name: str, ok: bool, residue=None, certificates=(), witnesses=()) -> Check:
        if isinstance(residue, DForm):
            residue = residue_terms(residue)
        c = Check(name, bool(ok), list(residue or []), list(certificates), list(witnesses))
        self.checks.append(c)
        return c

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "subject": self.subject,
            "status": "PASS" if self.ok else "FAIL",
            "inputs": render(self.inputs),
            "outputs": render(self.outputs),
            "checks": [c.to_json() for c in self.checks],
        }
        if self.error is not None:
            out["error"] = {"message": self.error, "terms": list(self.error_terms)}
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    def to_text(self) -> str:
        lines = [f"== {self.command}: {self.subject} [{'PASS' if self.ok else 'FAIL'}]"]
        for key, value in self.inputs.items():
            lines.extend(_block(key, render(value)))
        for key, value in self.outputs.items():
            lines.extend(_block(key, render(value)))
        for c in self.checks:
            lines.append(f"  [{'PASS' if c.ok else 'FAIL'}] {c.name}")
            for term in c.residue:
                lines.append(f"      residue: {term}")
        if self.error is not None:
            lines.append(f"  error: {self.error}")
            for term in self.error_terms:
                lines.append(f"      {term}")
        if self.timing is not None:
            for key, value in self.timing.items():
                lines.append(f"  time {key}: {value:.3f}s")
        return "\n".join(lines)


def _block(key: str, value) -> list[str]:
    if isinstance(value, list):
        if not value:
            return [f"  {key}: []"]
        out = [f"  {key}:"]
        for item in value:
            out.append(f"    {json.dumps(item, sort_keys=True) if isinstance(item, dict) else item}")
        return out
    if isinstance(value, dict):
        out = [f"  {key}:"]
        for k, v in value.items():
            out.append(f"    {k}: {v}")
        return out
    return [f"  {key}: {value}"]


def dump_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, ensure_ascii=False) + "\n"


def dump_text(reports) -> str:
    body = "\n".join(r.to_text() for r in reports)
    if len(reports) > 1:
        width = max(len(r.subject) for r in reports)
        table = ["", "summary:"]
        for r in reports:
            passed = sum(c.ok for c in r.checks)
            table.append(f"  {r.subject.ljust(width)}  {'PASS' if r.ok else 'FAIL'}  "
                         f"{passed}/{len(r.checks)} checks")
        body += "\n" + "\n".join(table)
    return body + "\n"


__all__ = ["Check", "Report", "render", "residue_terms", "dump_json", "dump_text"]
