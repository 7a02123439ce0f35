"""Command pipelines producing ``Report`` objects."""

from __future__ import annotations

import time
from contextlib import contextmanager

from . import corpus
from .equations import HypothesisError, NonTerminationError
from .forms import DForm
from .lagrangian import (action_from_internal, euler_on_equation, internal_of_lagrangian,
                         is_internal_lagrangian, presymplectic_cocycle_check, presymplectic_of,
                         hidden_status, LagrangianClass)
from .problem import Problem, ProblemError
from .report import Report, residue_terms
from .variational import (SourceForm, adjoint_operator, euler, correction_residual, linearization,
                          noether_form, noether_identity_check)


class InputError(ValueError):
    """Problem file lacks what the command needs (exit status 2)."""


class _Timer:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.data = {} if enabled else None

    @contextmanager
    def stage(self, name):
        t0 = time.perf_counter()
        yield
        if self.enabled:
            self.data[name] = time.perf_counter() - t0


def _need(problem: Problem, lagrangian=False, equations=False):
    if lagrangian and problem.lagrangian is None:
        raise InputError("the problem has no [lagrangian] section")
    if equations and not problem.equations:
        raise InputError("the problem has no [equations] section")


def _euler_text(E: SourceForm) -> list[str]:
    names = E.space.dependent
    return [f"E[{names[j]}] = {c.to_text()}" for j, c in enumerate(E.components)]


def _fail(report: Report, exc: Exception):
    report.error = str(exc)
    report.error_terms = residue_terms(getattr(exc, "residue", None))


def _inputs(problem: Problem) -> dict:
    sp = problem.space
    out = {"independent": ", ".join(sp.independent), "dependent": ", ".join(sp.dependent)}
    if problem.equations:
        out["equations"] = problem.system.describe()
    if problem.lagrangian is not None:
        out["lagrangian"] = problem.lagrangian
    return out


def _helmholtz(report: Report, E: SourceForm):
    lin = linearization(E.components)
    report.check("linearized Euler operator is self-adjoint", adjoint_operator(lin) == lin)


# -- commands -------------------------------------------------------------------------

def cmd_euler(problem: Problem, timing=False) -> Report:
    _need(problem, lagrangian=True)
    report = Report("euler", problem.name, _inputs(problem))
    timer = _Timer(timing)
    with timer.stage("euler"):
        E = euler(problem.lagrangian)
    report.outputs["euler"] = _euler_text(E)
    _helmholtz(report, E)
    report.timing = timer.data
    return report


def cmd_internal(problem: Problem, timing=False) -> Report:
    _need(problem, lagrangian=True, equations=True)
    report = Report("internal", problem.name, _inputs(problem))
    timer = _Timer(timing)
    S = problem.system
    L = problem.lagrangian
    try:
        with timer.stage("internal"):
            lc = internal_of_lagrangian(L, S)
    except (HypothesisError, NonTerminationError) as exc:
        _fail(report, exc)
        return report
    with timer.stage("presymplectic"):
        nf = noether_form(L)
        check = is_internal_lagrangian(lc.representative, S)
        rep = presymplectic_of(lc)
        cocycle = presymplectic_cocycle_check(rep)
    report.outputs["omega_L"] = nf.omega
    report.outputs["l"] = lc.representative
    report.outputs["presymplectic"] = rep.omega
    report.outputs["hidden"] = hidden_status(rep)
    report.check("Euler-Lagrange expressions vanish on the equation", True)
    report.check("Noether identity", noether_identity_check(L, nf.omega).ok)
    report.check("correction form identity", nf.residual.is_zero(), nf.residual)
    report.check("internal Lagrangian", check.ok, check.residue)
    report.check("presymplectic cocycle", cocycle.ok, cocycle.residue)
    report.timing = timer.data
    return report


def _pick_internal(problem: Problem, form_name: str | None):
    S = problem.system
    if problem.forms:
        return problem.form(form_name), "form"
    if problem.lagrangian is None:
        raise InputError("the problem needs a [form NAME] or a [lagrangian] section")
    return internal_of_lagrangian(problem.lagrangian, S).representative, "lagrangian"


def cmd_roundtrip(problem: Problem, form_name=None, timing=False) -> Report:
    _need(problem, equations=True)
    report = Report("roundtrip", problem.name, _inputs(problem))
    timer = _Timer(timing)
    S = problem.system
    try:
        with timer.stage("internal"):
            l, origin = _pick_internal(problem, form_name)
        report.inputs["l"] = l
        report.inputs["l from"] = origin
        with timer.stage("action"):
            res = action_from_internal(l, S)
    except (HypothesisError, NonTerminationError) as exc:
        _fail(report, exc)
        return report
    report.outputs["L"] = res.lagrangian
    report.outputs["omega_L"] = res.omega
    report.outputs["source operator"] = res.source_operator.describe()
    certs = res.certificates
    report.check("(a) Euler(L) = source_operator(F)", certs["a"])
    report.check("(b) Euler(L) vanishes on the equation", certs["b"])
    report.check("(c) L + omega_L restricts to l", certs["c"],
                 witnesses=[{"c": res.witness.c, "rho": res.witness.rho, "sigma": res.witness.sigma}])
    report.check("correction form identity", certs["noether"])
    report.check("extension certificate", certs["extension"],
                 certificates=[{"f": t.function, "rho": t.form} for t in res.extension.ideal_terms])
    report.timing = timer.data
    return report


def cmd_reduce(problem: Problem, timing=False) -> Report:
    _need(problem, equations=True)
    report = Report("reduce", problem.name, _inputs(problem))
    timer = _Timer(timing)
    S = problem.system
    targets = dict(sorted(problem.forms.items()))
    if problem.lagrangian is not None:
        targets.setdefault("lagrangian", problem.lagrangian)
    if not targets:
        raise InputError("the problem has nothing to reduce: add [form NAME] or [lagrangian]")
    try:
        with timer.stage("confluence"):
            conflicts = S.check_confluence()
        report.check("rewrite routes agree", not conflicts,
                     [f"{v.to_text()} via D_{S.space.independent[k]}: {d.to_text()}"
                      for v, k, d in conflicts])
        with timer.stage("reduce"):
            for name, w in targets.items():
                red = S.reduce_form(w)
                report.outputs[name] = red
                sound = True
                for basis, poly in w.terms.items():
                    f = DForm(S.space, {basis: poly}).coefficient(basis)
                    nf, wit = S.reduce(f)
                    sound = sound and wit.verify(f - nf)
                report.check(f"{name}: witnesses expand exactly", sound)
                report.check(f"{name}: reduction is idempotent", S.reduce_form(red) == red)
    except NonTerminationError as exc:
        _fail(report, exc)
    report.timing = timer.data
    return report


def cmd_presymplectic(problem: Problem, form_name=None, timing=False) -> Report:
    _need(problem, equations=True)
    report = Report("presymplectic", problem.name, _inputs(problem))
    timer = _Timer(timing)
    S = problem.system
    n = S.space.n
    try:
        with timer.stage("presymplectic"):
            if problem.forms and form_name is None:
                items = sorted(problem.forms.items())
            elif problem.forms:
                items = [(form_name, problem.form(form_name))]
            else:
                items = [("l", _pick_internal(problem, None)[0])]
            for name, w in items:
                degs = w.degrees() or {n}
                if degs == {n + 1}:
                    report.inputs[name] = w
                    cocycle = presymplectic_cocycle_check(w, S)
                    report.check(f"{name}: cocycle", cocycle.ok, cocycle.residue)
                    continue
                if degs != {n}:
                    raise InputError(f"form {name!r} must have degree {n} or {n + 1}")
                internal = is_internal_lagrangian(w, S)
                report.check(f"{name}: internal Lagrangian", internal.ok, internal.residue)
                if not internal:
                    continue
                rep = presymplectic_of(LagrangianClass(w, S))
                cocycle = presymplectic_cocycle_check(rep)
                report.outputs[f"{name}: presymplectic"] = rep.omega
                report.outputs[f"{name}: hidden"] = hidden_status(rep)
                report.check(f"{name}: cocycle", cocycle.ok, cocycle.residue)
    except (HypothesisError, NonTerminationError) as exc:
        _fail(report, exc)
    report.timing = timer.data
    return report


def corpus_report(problem: Problem, timing=False) -> Report:
    """Full pipeline plus invariant checks for one corpus problem."""
    report = Report("corpus", problem.name, _inputs(problem))
    timer = _Timer(timing)
    S = problem.system
    L = problem.lagrangian
    try:
        with timer.stage("confluence"):
            report.check("rewrite routes agree", not S.check_confluence())
        with timer.stage("euler"):
            E = euler(L)
            report.outputs["euler"] = _euler_text(E)
            _helmholtz(report, E)
            on_eq = euler_on_equation(L, S)
            report.check("Euler-Lagrange expressions vanish on the equation",
                         all(e.is_zero() for e in on_eq))
        with timer.stage("noether"):
            nf = noether_form(L)
            report.check("Noether identity", noether_identity_check(L, nf.omega).ok)
            report.check("correction form identity", correction_residual(L, nf.omega).is_zero())
        with timer.stage("internal"):
            lc = internal_of_lagrangian(L, S)
            internal = is_internal_lagrangian(lc.representative, S)
            report.outputs["l"] = lc.representative
            report.check("internal Lagrangian", internal.ok, internal.residue)
        with timer.stage("presymplectic"):
            rep = presymplectic_of(lc)
            cocycle = presymplectic_cocycle_check(rep)
            report.outputs["presymplectic"] = rep.omega
            report.check("presymplectic cocycle", cocycle.ok, cocycle.residue)
            report.check("presymplectic form is non-zero", not rep.is_zero())
        with timer.stage("roundtrip"):
            res = action_from_internal(lc.representative, S)
            report.outputs["L"] = res.lagrangian
            for key, label in (("a", "(a) Euler(L) = source_operator(F)"),
                               ("b", "(b) Euler(L) vanishes on the equation"),
                               ("c", "(c) L + omega_L restricts to l"),
                               ("noether", "round-trip correction form identity"),
                               ("extension", "extension certificate")):
                report.check(label, res.certificates[key])
    except (HypothesisError, NonTerminationError) as exc:
        _fail(report, exc)
    report.timing = timer.data
    return report


def cmd_corpus(name: str, max_order=None, timing=False) -> list[Report]:
    names = corpus.names() if name == "all" else [name]
    for n in names:
        if n not in corpus.ENTRIES:
            raise InputError(f"unknown corpus entry {n!r}; available: "
                             f"{', '.join(corpus.names())}, all")
    reports = []
    for n in names:
        for problem in corpus.problems(n, max_order):
            reports.append(corpus_report(problem, timing))
    return reports


__all__ = ["InputError", "cmd_euler", "cmd_internal", "cmd_roundtrip", "cmd_reduce",
           "cmd_presymplectic", "cmd_corpus", "corpus_report", "ProblemError"]
