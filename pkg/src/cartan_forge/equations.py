"""PDE systems in solved form: prolonged rewriting, ideal witnesses and
restriction of forms to the infinitely prolonged equation.

A relation ``u^j_b = R`` makes every prolongation ``u^j_g`` with ``g >= b``
*principal*; all other jet coordinates are internal (parametric) coordinates
on the equation manifold.  The normal form of a principal variable is
computed lazily and memoized.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from . import kernels as K
from .expr import Expr, total_derivative_multi
from .forms import DForm, contact_at_least, contact_below, de_rham
from .jet import FIBER, TABLE, JetSpace, Q, add_unit, sub_unit, var_id

DEFAULT_MAX_ORDER = 12


class NonTerminationError(ArithmeticError):
    """Reduction left the allowed derivative order or revisited a variable."""


class HypothesisError(ValueError):
    """An operation's mathematical precondition does not hold; ``residue``
    carries the offending terms."""

    def __init__(self, message, residue=None):
        super().__init__(message)
        self.residue = residue


@dataclass(frozen=True)
class Relation:
    dependent: int
    alpha: tuple
    rhs: Expr

    @property
    def lead_id(self) -> int:
        return var_id(FIBER, self.dependent, self.alpha)

    def residual(self) -> Expr:
        """F = lead - R."""
        sp = self.rhs.space
        return Expr.var(sp, self.lead_id) - self.rhs


# -- ideal witnesses ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class IdealWitness:
    """f = sum_{(r, delta)} c_{r,delta} D_delta(F_r)."""

    system: "EqSystem"
    terms: dict  # (relation index, delta) -> raw poly

    def expand(self) -> Expr:
        sys = self.system
        out: dict = {}
        for (r, delta), c in self.terms.items():
            K.poly_iadd(out, K.poly_mul(c, total_derivative_multi(sys.residuals[r].poly, delta)))
        return Expr(sys.space, out)

    def verify(self, f: Expr) -> bool:
        return self.expand() == f

    def total_derivative(self, k: int) -> "IdealWitness":
        """Witness for D_k f."""
        out: dict = {}
        for (r, delta), c in self.terms.items():
            _acc(out, (r, delta), K.poly_total_derivative(c, k, TABLE.shift))
            _acc(out, (r, add_unit(delta, k)), c)
        return IdealWitness(self.system, out)

    def operator(self):
        """The witness as a C-differential operator acting on (F_1, ..., F_s)."""
        from .variational import CDiffOp

        entries: dict = {}
        for (r, delta), c in self.terms.items():
            entries.setdefault((0, r), {})[delta] = dict(c)
        return CDiffOp(self.system.space, (0,), len(self.system.relations), entries)

    def generic_value(self, family: int) -> dict:
        """sum c G^r_delta with G the generic argument of the given family."""
        out: dict = {}
        for (r, delta), c in self.terms.items():
            K.poly_iadd(out, K.poly_mul(c, {(var_id(family, r, delta), 1): Q(1)}))
        return out


def _acc(target: dict, key, poly: dict, c=None):
    if not poly:
        return
    cur = target.get(key)
    if cur is None:
        target[key] = K.poly_scale(poly, 1 if c is None else c)
    else:
        K.poly_iadd(cur, poly, c)
        if not cur:
            del target[key]


def _combine_witness(target: dict, w: dict, factor: dict):
    for key, c in w.items():
        _acc(target, key, K.poly_mul(c, factor))


# -- the system ------------------------------------------------------------------------

class EqSystem:
    """A solved-form system ``u^j_b = R_r`` with lazy infinite prolongation."""

    def __init__(self, space: JetSpace, relations, max_order: int = DEFAULT_MAX_ORDER):
        self.space = space
        self.max_order = int(max_order)
        if self.max_order < 1:
            raise ValueError("max_order must be positive")
        rels = []
        for rel in relations:
            if not isinstance(rel, Relation):
                lead, rhs = rel
                rel = _relation_from_lead(space, lead, rhs)
            rels.append(rel)
        self.relations = tuple(rels)
        self.residuals = tuple(r.residual() for r in self.relations)
        self._validate()
        self._lock = threading.RLock()
        self._nf: dict = {}
        self._witness: dict = {}
        self._active: set = set()

    @classmethod
    def parse(cls, space, lines, max_order=DEFAULT_MAX_ORDER) -> "EqSystem":
        """Build from ``"u_tt = u_xx"`` style strings."""
        from .parser import parse

        rels = []
        for i, line in enumerate(lines, 1):
            if "=" not in line:
                raise ValueError(f"relation {i}: expected 'lead = rhs'")
            lhs, rhs = line.split("=", 1)
            rels.append((parse(space, lhs, i), parse(space, rhs, i)))
        return cls(space, rels, max_order)

    # validation ---------------------------------------------------------
    def _validate(self):
        keys = TABLE.keys
        seen = {}
        for r, rel in enumerate(self.relations):
            if rel.lead_id in seen:
                raise ValueError(f"two relations share the leading derivative "
                                 f"{_name(self.space, rel.lead_id)}")
            seen[rel.lead_id] = r
            if sum(rel.alpha) > self.max_order:
                raise ValueError("leading derivative exceeds the maximum order")
        for a in self.relations:
            for b in self.relations:
                if a is not b and a.dependent == b.dependent and _dominates(b.alpha, a.alpha):
                    raise ValueError(f"leading derivative {_name(self.space, b.lead_id)} is a "
                                     f"prolongation of {_name(self.space, a.lead_id)}")
        for rel in self.relations:
            for v in rel.rhs.variables():
                kind = keys[v][0]
                if kind not in (0, FIBER):
                    raise ValueError("auxiliary symbols may not appear in a relation")
                if self.principal_relation(v) is not None:
                    raise ValueError(f"right-hand side of {_name(self.space, rel.lead_id)} contains "
                                     f"the leading derivative {_name(self.space, v)} or a prolongation of it")

    # principal variables ------------------------------------------------
    def principal_relation(self, vid: int):
        kind, j, _, alpha = TABLE.keys[vid]
        if kind != FIBER:
            return None
        for r, rel in enumerate(self.relations):
            if rel.dependent == j and _dominates(alpha, rel.alpha):
                return r
        return None

    def is_principal(self, vid: int) -> bool:
        return self.principal_relation(vid) is not None

    def _route(self, vid: int):
        """('base', r) when vid is a leading derivative, else ('step', k, lower id)."""
        kind, j, order, alpha = TABLE.keys[vid]
        for r, rel in enumerate(self.relations):
            if rel.dependent == j and rel.alpha == alpha:
                return ("base", r)
        for k in range(self.space.n):
            if alpha[k]:
                lower = var_id(FIBER, j, sub_unit(alpha, k))
                if self.is_principal(lower):
                    return ("step", k, lower)
        raise AssertionError("not a principal variable")  # pragma: no cover

    def variable_normal_form(self, vid: int) -> dict:
        """Normal form (raw poly in internal coordinates) of a principal variable."""
        with self._lock:
            nf = self._nf.get(vid)
            if nf is not None:
                return nf
            order = TABLE.keys[vid][2]
            if order > self.max_order:
                raise NonTerminationError(
                    f"reduction needs {_name(self.space, vid)} of order {order} "
                    f"> max order {self.max_order}")
            if vid in self._active:
                raise NonTerminationError(f"reduction cycles through {_name(self.space, vid)}")
            self._active.add(vid)
            try:
                route = self._route(vid)
                if route[0] == "base":
                    nf = self._reduce_poly(self.relations[route[1]].rhs.poly)
                else:
                    _, k, lower = route
                    lower_nf = self.variable_normal_form(lower)
                    nf = self._reduce_poly(K.poly_total_derivative(lower_nf, k, TABLE.shift))
            finally:
                self._active.discard(vid)
            self._nf[vid] = nf
            return nf

    def _principal_in(self, poly: dict) -> list:
        vids = [v for v in K.poly_vars(poly) if self.is_principal(v)]
        vids.sort(key=TABLE.keys.__getitem__)
        return vids

    def _reduce_poly(self, poly: dict) -> dict:
        vids = self._principal_in(poly)
        if not vids:
            return dict(poly)
        return K.poly_substitute(poly, {v: self.variable_normal_form(v) for v in vids})

    # witnesses ----------------------------------------------------------
    def variable_witness(self, vid: int) -> dict:
        """Witness terms for v - NF(v)."""
        with self._lock:
            w = self._witness.get(vid)
            if w is not None:
                return w
            route = self._route(vid)
            if route[0] == "base":
                r = route[1]
                w = {(r, self.space.zero_index()): {(): Q(1)}}
                for key, c in self._poly_witness(self.relations[r].rhs.poly).items():
                    _acc(w, key, c)
            else:
                _, k, lower = route
                lw = IdealWitness(self, self.variable_witness(lower)).total_derivative(k).terms
                w = dict(lw)
                shifted = K.poly_total_derivative(self.variable_normal_form(lower), k, TABLE.shift)
                for key, c in self._poly_witness(shifted).items():
                    _acc(w, key, c)
            self._witness[vid] = w
            return w

    def _poly_witness(self, poly: dict) -> dict:
        """Witness terms for poly - reduce(poly), by telescoping one variable at a time."""
        out: dict = {}
        current = dict(poly)
        for v in self._principal_in(poly):
            nf = self.variable_normal_form(v)
            vw = self.variable_witness(v)
            factor: dict = {}
            nxt: dict = {}
            for m, c in current.items():
                e, rest = _split(m, v)
                if e == 0:
                    K.poly_iadd(nxt, {m: c})
                    continue
                rest_poly = {rest: c}
                # v^e - N^e = (v - N) * sum_t v^(e-1-t) N^t
                for t in range(e):
                    term = K.poly_mul(rest_poly, K.poly_pow(nf, t))
                    if e - 1 - t:
                        term = K.poly_mul(term, {(v, e - 1 - t): Q(1)})
                    K.poly_iadd(factor, term)
                K.poly_iadd(nxt, K.poly_mul(rest_poly, K.poly_pow(nf, e)))
            _combine_witness(out, vw, factor)
            current = nxt
        return out

    # public reduction API ------------------------------------------------
    def normal_form(self, e: Expr) -> Expr:
        return Expr(self.space, self._reduce_poly(e.poly))

    def reduce(self, e: Expr) -> tuple[Expr, IdealWitness]:
        """Normal form of ``e`` and a witness for ``e - normal_form``."""
        return self.normal_form(e), IdealWitness(self, self._poly_witness(e.poly))

    def restricted_total_derivative(self, e: Expr, k: int) -> Expr:
        """Total derivative on the equation manifold, in internal coordinates."""
        return self.normal_form(e.total_derivative(k))

    def is_internal(self, e: Expr) -> bool:
        return not self._principal_in(e.poly)

    # forms ----------------------------------------------------------------
    def reduced_covector(self, vid: int) -> dict:
        """Image of the covector ``vid`` as terms {(id,): poly}."""
        if not self.is_principal(vid):
            return {(vid,): {(): Q(1)}}
        nf = self.variable_normal_form(vid)
        out = {}
        for v in K.poly_vars(nf):
            if TABLE.keys[v][0] == FIBER:
                out[(v,)] = K.poly_partial(nf, v)
        return out

    def reduce_form(self, w: DForm) -> DForm:
        """Restriction of ``w`` to the equation, written in internal coordinates."""
        keys = TABLE.keys
        out: dict = {}
        for basis, poly in w.terms.items():
            coeff = self._reduce_poly(poly)
            if not coeff:
                continue
            acc = {(): coeff}
            for vid in basis:
                acc = K.form_wedge(acc, self.reduced_covector(vid), keys)
                if not acc:
                    break
            K.form_iadd(out, acc)
        return DForm(self.space, out)

    def check_confluence(self, extra_order: int = 2) -> list:
        """Compare every rewriting route for principal variables up to
        (max lead order + extra_order); returns the list of conflicts."""
        sp = self.space
        top = max((sum(r.alpha) for r in self.relations), default=0) + extra_order
        top = min(top, self.max_order)
        conflicts = []
        from itertools import product

        for j in range(sp.m):
            for alpha in product(range(top + 1), repeat=sp.n):
                if sum(alpha) > top:
                    continue
                vid = var_id(FIBER, j, alpha)
                if not self.is_principal(vid):
                    continue
                nf = self.variable_normal_form(vid)
                for k in range(sp.n):
                    if not alpha[k]:
                        continue
                    lower = var_id(FIBER, j, sub_unit(alpha, k))
                    if not self.is_principal(lower):
                        continue
                    alt = self._reduce_poly(
                        K.poly_total_derivative(self.variable_normal_form(lower), k, TABLE.shift))
                    if alt != nf:
                        conflicts.append((Expr(sp, {(vid, 1): Q(1)}), k, Expr(sp, K.poly_sub(alt, nf))))
        return conflicts

    def describe(self) -> list[str]:
        return [f"{_name(self.space, r.lead_id)} = {r.rhs.to_text()}" for r in self.relations]


def _dominates(alpha, beta) -> bool:
    return all(a >= b for a, b in zip(alpha, beta))


def _split(m: tuple, v: int):
    for i in range(0, len(m), 2):
        if m[i] == v:
            return m[i + 1], m[:i] + m[i + 2:]
    return 0, m


def _name(space, vid) -> str:
    from .printer import format_var

    return format_var(space, vid)


def _relation_from_lead(space, lead: Expr, rhs: Expr) -> Relation:
    poly = lead.poly
    if len(poly) != 1:
        raise ValueError("left-hand side must be a single jet coordinate")
    (m, c), = poly.items()
    if len(m) != 2 or m[1] != 1 or c != 1 or TABLE.keys[m[0]][0] != FIBER:
        raise ValueError("left-hand side must be a single jet coordinate")
    _, j, _, alpha = TABLE.keys[m[0]]
    return Relation(j, alpha, rhs)


# -- extension off the equation ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class IdealTerm:
    """f * rho with f in the ideal of the equation (certified by ``witness``)."""

    function: Expr
    witness: IdealWitness
    form: DForm


@dataclass(frozen=True, eq=False)
class Extension:
    """L with reduce_form(L) = reduce_form(l) and dL = b + sum f_i rho_i."""

    source: DForm
    form: DForm
    b: DForm
    ideal_terms: tuple
    system: EqSystem

    def residual(self) -> DForm:
        total = self.b
        for t in self.ideal_terms:
            total = total + t.form.scale(t.function)
        return de_rham(self.form) - total

    def verify(self) -> dict:
        sys = self.system
        return {
            "dL = b + sum f_i rho_i": self.residual().is_zero(),
            "b has contact degree >= 2": contact_below(self.b, 2).is_zero(),
            "f_i certified in the ideal": all(t.witness.verify(t.function) for t in self.ideal_terms),
            "L restricts to l": sys.reduce_form(self.form) == sys.reduce_form(self.source),
        }


def extend_form(l: DForm, system: EqSystem) -> Extension:
    """Extend an internal n-form off the equation so that dL lies in
    C^2 + I * forms, with an explicit decomposition of dL."""
    sp = system.space
    keys = TABLE.keys
    a = system.reduce_form(l)
    da = de_rham(a)
    low = contact_below(system.reduce_form(da), 2)
    if not low.is_zero():
        raise HypothesisError("d l has terms of contact degree < 2 on the equation", low)
    b = contact_at_least(da, 2)
    gamma = contact_below(da, 2)

    ideal: list = []
    corrections: dict = {}  # principal vid -> terms of omega_v

    for basis, c in gamma.terms.items():
        nf_c = system._reduce_poly(c)
        f0 = K.poly_sub(c, nf_c)
        if f0:
            fe = Expr(sp, f0)
            ideal.append(IdealTerm(fe, system.reduce(fe)[1], DForm(sp, {basis: {(): Q(1)}})))
        if not nf_c:
            continue
        prefix = {(): nf_c}  # already-reduced factors, carrying NF(c)
        for pos, vid in enumerate(basis):
            suffix = basis[pos + 1:]
            if system.is_principal(vid):
                ps = K.form_wedge(prefix, {suffix: {(): Q(1)}}, keys)
                sign = -1 if pos & 1 else 1
                acc = corrections.setdefault(vid, {})
                K.form_iadd(acc, ps, None if sign > 0 else -1)
                fv = _principal_function(system, vid)
                for k in range(sp.n):
                    gk = fv.total_derivative(k)
                    if gk.is_zero():
                        continue
                    dxk = sp.base_id(k)
                    term = K.form_wedge(K.form_wedge(prefix, {(dxk,): {(): Q(1)}}, keys),
                                        {suffix: {(): Q(1)}}, keys)
                    if term:
                        ideal.append(IdealTerm(gk, system.reduce(gk)[1], -DForm(sp, term)))
            prefix = K.form_wedge(prefix, system.reduced_covector(vid), keys)
            if not prefix:
                break

    L = a
    for vid in sorted(corrections, key=keys.__getitem__):
        omega = DForm(sp, corrections[vid])
        if omega.is_zero():
            continue
        fv = _principal_function(system, vid)
        L = L - omega.scale(fv)
        ideal.append(IdealTerm(fv, system.reduce(fv)[1], -de_rham(omega)))
    ideal = [t for t in ideal if not t.form.is_zero() and not t.function.is_zero()]
    return Extension(l, L, b, tuple(ideal), system)


def _principal_function(system: EqSystem, vid: int) -> Expr:
    """f_v = u_v - NF(u_v), an element of the ideal."""
    return Expr(system.space, K.poly_sub({(vid, 1): Q(1)}, system.variable_normal_form(vid)))


__all__ = [
    "EqSystem", "Relation", "IdealWitness", "IdealTerm", "Extension", "extend_form",
    "NonTerminationError", "HypothesisError", "DEFAULT_MAX_ORDER",
]
