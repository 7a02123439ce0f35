"""Line-oriented problem files.

::

    [vars]
    independent = x, t
    dependent = u

    [equations]
    u_tt = u_xx

    [lagrangian]
    1/2*u_t^2 - 1/2*u_x^2

    [form l]
    u_t*th[u]&dx

    [options]
    max_order = 12

A ``[lagrangian]`` that is a function is read as the density of the volume
form; any section body may span several lines.  ``#`` starts a comment.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

from .equations import DEFAULT_MAX_ORDER, EqSystem
from .forms import DForm
from .jet import JetSpace
from .parser import ParseError, check_names, parse, parse_form

ENV_MAX_ORDER = "CARTAN_FORGE_MAX_ORDER"
_SECTION = re.compile(r"^\[\s*([A-Za-z]+)(?:\s+([A-Za-z][A-Za-z0-9_]*))?\s*\]$")
_KNOWN = {"vars", "equations", "lagrangian", "form", "options"}
_OPTIONS = {"max_order", "format"}


class ProblemError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass
class Problem:
    space: JetSpace
    name: str = "problem"
    equations: list = field(default_factory=list)   # (line, text)
    lagrangian: DForm | None = None
    forms: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)
    max_order: int = DEFAULT_MAX_ORDER
    _system: EqSystem | None = None

    @property
    def system(self) -> EqSystem | None:
        if not self.equations:
            return None
        if self._system is None:
            self._system = build_system(self.space, self.equations, self.max_order)
        return self._system

    def form(self, name: str | None = None) -> DForm:
        if not self.forms:
            raise ProblemError("no [form] section")
        if name is None:
            name = sorted(self.forms)[0]
        if name not in self.forms:
            raise ProblemError(f"no form named {name!r}")
        return self.forms[name]


def build_system(space, equations, max_order) -> EqSystem:
    rels = []
    for line, text in equations:
        if text.count("=") != 1:
            raise ProblemError("an equation needs exactly one '='", line)
        lhs, rhs = text.split("=")
        try:
            rels.append((parse(space, lhs, line), parse(space, rhs, line)))
        except ParseError as exc:
            raise ProblemError(exc.message, exc.line) from exc
    try:
        return EqSystem(space, rels, max_order)
    except ValueError as exc:
        raise ProblemError(str(exc), equations[0][0]) from exc


def resolve_max_order(flag: int | None, file_value=None) -> int:
    """Command-line flag, then environment, then problem file, then default."""
    if flag is not None:
        return _positive(flag, "--max-order")
    env = os.environ.get(ENV_MAX_ORDER)
    if env:
        return _positive(env, ENV_MAX_ORDER)
    if file_value is not None:
        return _positive(file_value, "max_order")
    return DEFAULT_MAX_ORDER


def _positive(value, source) -> int:
    try:
        v = int(value)
    except (TypeError, ValueError):
        raise ProblemError(f"{source} must be a positive integer, got {value!r}") from None
    if v < 1:
        raise ProblemError(f"{source} must be a positive integer, got {value!r}")
    return v


def _split_sections(text: str):
    sections = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            m = _SECTION.match(line)
            if not m or m.group(1) not in _KNOWN:
                raise ProblemError(f"unknown section header {line!r}", lineno)
            kind, name = m.group(1), m.group(2)
            if (kind == "form") != (name is not None):
                raise ProblemError("[form NAME] needs a name; other sections take none", lineno)
            current = (kind, name, lineno, [])
            sections.append(current)
            continue
        if current is None:
            raise ProblemError("content before the first section", lineno)
        current[3].append((lineno, line))
    return sections


def _names(value: str, lineno: int) -> tuple:
    names = tuple(p.strip() for p in value.split(",") if p.strip())
    if not names:
        raise ProblemError("empty variable list", lineno)
    if len(set(names)) != len(names):
        raise ProblemError("duplicate variable names", lineno)
    return names


def loads(text: str, name: str = "problem", max_order: int | None = None) -> Problem:
    sections = _split_sections(text)
    seen = set()
    for kind, fname, lineno, _ in sections:
        key = (kind, fname)
        if key in seen:
            raise ProblemError(f"duplicate section [{kind}{' ' + fname if fname else ''}]", lineno)
        seen.add(key)
    by_kind = {}
    for sec in sections:
        by_kind.setdefault(sec[0], []).append(sec)
    if "vars" not in by_kind:
        raise ProblemError("missing [vars] section")
    indep = dep = None
    for lineno, line in by_kind["vars"][0][3]:
        if "=" not in line:
            raise ProblemError("expected 'independent = ...' or 'dependent = ...'", lineno)
        key, value = (p.strip() for p in line.split("=", 1))
        if key == "independent":
            indep = _names(value, lineno)
        elif key == "dependent":
            dep = _names(value, lineno)
        else:
            raise ProblemError(f"unknown [vars] key {key!r}", lineno)
    if not indep or not dep:
        raise ProblemError("[vars] needs both 'independent' and 'dependent'", by_kind["vars"][0][2])
    if set(indep) & set(dep):
        raise ProblemError("a name is both independent and dependent", by_kind["vars"][0][2])
    space = JetSpace(indep, dep)
    try:
        check_names(space)
    except ValueError as exc:
        raise ProblemError(str(exc), by_kind["vars"][0][2]) from exc

    options = {}
    for sec in by_kind.get("options", []):
        for lineno, line in sec[3]:
            if "=" not in line:
                raise ProblemError("expected 'key = value'", lineno)
            key, value = (p.strip() for p in line.split("=", 1))
            if key not in _OPTIONS:
                raise ProblemError(f"unknown option {key!r}", lineno)
            options[key] = value
    if options.get("format", "text") not in ("text", "json"):
        raise ProblemError("format must be 'text' or 'json'")

    prob = Problem(space, name, options=options,
                   max_order=resolve_max_order(max_order, options.get("max_order")))
    for sec in by_kind.get("equations", []):
        prob.equations.extend(sec[3])
    if "lagrangian" in by_kind:
        prob.lagrangian = _read_form(space, by_kind["lagrangian"][0], volume=True)
    for sec in by_kind.get("form", []):
        prob.forms[sec[1]] = _read_form(space, sec, volume=False)
    prob.system  # validate equations now so errors carry their line
    return prob


def _read_form(space, sec, volume: bool) -> DForm:
    _, _, header, lines = sec
    if not lines:
        raise ProblemError("empty section", header)
    text = "\n".join(l for _, l in lines)
    try:
        w = parse_form(space, text, lines[0][0])
    except ParseError as exc:
        raise ProblemError(exc.message, exc.line) from exc
    if volume and not (w.degrees() - {0}):
        w = DForm.volume(space, w.coefficient(()))
    if volume and w.degrees() - {space.n}:
        raise ProblemError(f"a Lagrangian must have degree {space.n}", header)
    return w


def load(path: str, max_order: int | None = None) -> Problem:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    stem = os.path.splitext(os.path.basename(path))[0]
    return loads(text, stem, max_order)


__all__ = ["Problem", "ProblemError", "load", "loads", "resolve_max_order", "ENV_MAX_ORDER"]
