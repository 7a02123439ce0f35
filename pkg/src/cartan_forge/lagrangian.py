"""Internal Lagrangians of a solved-form system, the reconstruction of an
action from an internal Lagrangian, and presymplectic representatives."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels as K
from .equations import EqSystem, Extension, HypothesisError, extend_form
from .expr import Expr, total_derivative_multi
from .forms import (DForm, EvolutionaryField, contact_below, de_rham, horizontal_part,
                    in_CpLambda, interior_evolutionary)
from .jet import AUX_G, AUX_PHI, TABLE
from .variational import (HFORM, CDiffOp, SourceForm, compose_dh, euler, horizontal_primitive,
                          ibp_operator, correction_residual, noether_form, operator_of_cartan_form)


@dataclass(frozen=True, eq=False)
class Verdict:
    """A boolean outcome with the terms that caused a failure."""

    ok: bool
    residue: DForm | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_internal_lagrangian(l: DForm, system: EqSystem) -> Verdict:
    """dl restricted to the equation must have contact degree >= 2 throughout."""
    sp = system.space
    if l.degrees() - {sp.n}:
        raise ValueError(f"an internal Lagrangian is an n-form (n={sp.n})")
    low = contact_below(system.reduce_form(de_rham(system.reduce_form(l))), 2)
    return Verdict(low.is_zero(), low)


@dataclass(frozen=True, eq=False)
class GaugeWitness:
    """l1 - l2 = c + d(rho) + d(sigma) with c in C^2, rho in C^1."""

    c: DForm
    rho: DForm
    sigma: DForm


@dataclass(frozen=True, eq=False)
class LagrangianClass:
    representative: DForm
    system: EqSystem
    witnesses: tuple = ()

    def __post_init__(self):
        check = is_internal_lagrangian(self.representative, self.system)
        if not check:
            raise HypothesisError("representative is not an internal Lagrangian", check.residue)


def euler_on_equation(L: DForm, system: EqSystem) -> list:
    return [system.normal_form(c) for c in euler(horizontal_part(L)).components]


def internal_of_lagrangian(L: DForm, system: EqSystem) -> LagrangianClass:
    """l = L + omega_L restricted to the equation."""
    residue = euler_on_equation(L, system)
    if any(not e.is_zero() for e in residue):
        sp = system.space
        bad = SourceForm(sp, tuple(residue)).as_form()
        raise HypothesisError("Euler-Lagrange expressions do not vanish on the equation", bad)
    nf = noether_form(L)
    return LagrangianClass(system.reduce_form(L + nf.omega), system)


def shift_witness(L: DForm, eta: DForm, system: EqSystem) -> GaugeWitness:
    """Witness that the internal Lagrangians of L + d_h(eta) and L agree modulo
    C^2 + d(C^1) + d(eta)."""
    sp = system.space
    if not eta.is_horizontal() or eta.degrees() - {sp.n - 1}:
        raise ValueError("eta must be a horizontal (n-1)-form")
    from .forms import horizontal_diff

    dh_eta = horizontal_diff(eta)
    kappa = noether_form(dh_eta).omega - (de_rham(eta) - dh_eta)
    op = operator_of_cartan_form(kappa)
    if sp.n == 1:
        if not op.is_zero():
            raise ArithmeticError("shift form is not closed")
        rho = DForm(sp)
    else:
        op = CDiffOp(sp, op.rows, op.n_cols, op.entries, HFORM, op.family)
        rho = horizontal_primitive(-op).to_cartan_form() if not op.is_zero() else DForm(sp)
    c = kappa - de_rham(rho)
    if not in_CpLambda(c, 2):
        raise ArithmeticError("shift witness left contact degree below 2")
    return GaugeWitness(c, rho, eta)


@dataclass(frozen=True, eq=False)
class GaugeComparison:
    ok: bool
    residual: DForm
    checks: dict

    def __bool__(self) -> bool:
        return self.ok


def gauge_compare(l1: DForm, l2: DForm, system: EqSystem, c: DForm | None = None,
                  rho: DForm | None = None, sigma: DForm | None = None) -> GaugeComparison:
    """Verify l1 - l2 = c + d rho + d sigma on the equation."""
    sp = system.space
    c = c if c is not None else DForm(sp)
    rho = rho if rho is not None else DForm(sp)
    sigma = sigma if sigma is not None else DForm(sp)
    residual = system.reduce_form(l1 - l2 - c - de_rham(rho) - de_rham(sigma))
    checks = {
        "c in C^2": in_CpLambda(system.reduce_form(c), 2),
        "rho in C^1": in_CpLambda(system.reduce_form(rho), 1),
        "residual vanishes": residual.is_zero(),
    }
    return GaugeComparison(all(checks.values()), residual, checks)


# -- action from an internal Lagrangian ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class ActionResult:
    lagrangian: DForm       # horizontal action L'
    omega: DForm            # omega_L' with coefficients in the ideal
    extension: Extension
    source_operator: CDiffOp  # Euler(L') = source_operator(F)
    boundary: CDiffOp
    certificates: dict
    witness: GaugeWitness


def _substitute_relations(poly: dict, system: EqSystem) -> dict:
    """G^r_delta -> D_delta F_r."""
    keys = TABLE.keys
    values = {}
    for v in K.poly_vars(poly):
        kind, r, _, delta = keys[v]
        if kind == AUX_G:
            values[v] = total_derivative_multi(system.residuals[r].poly, delta)
    return K.poly_substitute(poly, values) if values else dict(poly)


def action_from_internal(l: DForm, system: EqSystem) -> ActionResult:
    sp = system.space
    check = is_internal_lagrangian(l, system)
    if not check:
        raise HypothesisError("form is not an internal Lagrangian", check.residue)
    ext = extend_form(l, system)
    L_ext = ext.form
    L_h = horizontal_part(L_ext)
    n_rel = len(system.relations)

    phi = EvolutionaryField.generic(sp)
    nabla_form = DForm(sp)
    for term in ext.ideal_terms:
        g = Expr(sp, term.witness.generic_value(AUX_G))
        contracted = horizontal_part(interior_evolutionary(phi, term.form))
        nabla_form = nabla_form + contracted.scale(g)
    if nabla_form.is_zero():
        from .variational import _hform_rows
        nabla = CDiffOp(sp, _hform_rows(sp, sp.n), sp.m, {}, HFORM, AUX_PHI)
    else:
        nabla = CDiffOp.from_generic_form(nabla_form, sp.m, AUX_PHI)
    dec = ibp_operator(nabla, n_rel, AUX_G)

    E = euler(L_h)
    AF = dec.source_operator.apply(list(system.residuals)) if n_rel else [Expr(sp)] * sp.m
    boundary_F = dec.boundary.substitute_coefficients(lambda p: _substitute_relations(p, system))
    omega = (L_ext - L_h) + boundary_F.to_cartan_form()
    lhs = system.reduce_form(L_h + omega)
    rhs = system.reduce_form(l)
    witness = GaugeWitness(DForm(sp), DForm(sp), DForm(sp))
    certificates = {
        "a": list(E.components) == list(AF),
        "b": all(system.normal_form(e).is_zero() for e in E.components),
        "c": gauge_compare(lhs, rhs, system).ok,
        "noether": correction_residual(L_h, omega).is_zero(),
        "extension": all(ext.verify().values()),
    }
    return ActionResult(L_h, omega, ext, dec.source_operator, dec.boundary, certificates, witness)


# -- presymplectic structures -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PresymplecticRep:
    omega: DForm
    source: DForm
    system: EqSystem

    def is_zero(self) -> bool:
        return self.omega.is_zero()


def presymplectic_of(lc: LagrangianClass) -> PresymplecticRep:
    sys = lc.system
    omega = sys.reduce_form(de_rham(sys.reduce_form(lc.representative)))
    if not in_CpLambda(omega, 2):
        raise ArithmeticError("presymplectic representative has contact degree below 2")
    return PresymplecticRep(omega, lc.representative, sys)


def presymplectic_cocycle_check(rep: PresymplecticRep | DForm, system: EqSystem | None = None) -> Verdict:
    """Strict representative condition: d Omega has contact degree >= 3 on the equation."""
    if isinstance(rep, PresymplecticRep):
        omega, system = rep.omega, rep.system
    else:
        omega = rep
    if system is None:
        raise ValueError("a system is required")
    if not in_CpLambda(system.reduce_form(omega), 2):
        raise ValueError("a presymplectic representative needs contact degree >= 2")
    low = contact_below(system.reduce_form(de_rham(omega)), 3)
    return Verdict(low.is_zero(), low)


def hidden_status(rep: PresymplecticRep) -> str:
    """Representative-level verdict: a non-zero Omega certifies the class is not hidden."""
    return "not hidden" if not rep.is_zero() else "undetermined"


__all__ = [
    "Verdict", "GaugeWitness", "LagrangianClass", "GaugeComparison", "ActionResult",
    "PresymplecticRep", "is_internal_lagrangian", "internal_of_lagrangian", "shift_witness",
    "gauge_compare", "action_from_internal", "presymplectic_of", "presymplectic_cocycle_check",
    "hidden_status", "euler_on_equation",
]
