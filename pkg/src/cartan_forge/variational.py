"""Euler operator, integration by parts, adjoints and Noether correction forms.

C-differential operators are handled through generic arguments: an operator
applied to the auxiliary symbols ``phi[u]`` (or ``G[r]``, ``psi[r]``) is an
expression linear in those symbols, and an operator is recovered from such an
expression by reading off the coefficient of every ``D_a(phi^i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels as K
from .expr import Expr, total_derivative_multi
from .forms import (DForm, EvolutionaryField, contact_part, de_rham, horizontal_diff,
                    horizontal_part, interior_evolutionary, lie_evolutionary)
from .jet import AUX_G, AUX_PHI, AUX_PSI, BASE, FIBER, TABLE, JetSpace, Q, sub_unit, var_id

SCALAR = "scalar"
HFORM = "hform"


class NotLinearError(ValueError):
    pass


def _neg_one_pow(k: int) -> int:
    return -1 if k & 1 else 1


def _top_sorted(alphas):
    return sorted(alphas, key=lambda a: (sum(a), a), reverse=True)


@dataclass(frozen=True, eq=False)
class CDiffOp:
    """Delta = sum Delta^a_{row,col} D_a acting on an argument with ``n_cols``
    components.

    ``entries`` maps ``(row, col)`` to ``{alpha: raw poly}``.  For the scalar
    codomain rows are ``0..r-1``; for horizontal forms rows are sorted tuples of
    dx covector ids.
    """

    space: JetSpace
    rows: tuple
    n_cols: int
    entries: dict
    codomain: str = SCALAR
    family: int = AUX_PHI

    # construction -----------------------------------------------------
    @classmethod
    def from_generic_polys(cls, space, polys: list, n_cols: int, family=AUX_PHI, rows=None):
        rows = tuple(range(len(polys))) if rows is None else tuple(rows)
        entries: dict = {}
        for row, poly in zip(rows, polys):
            _extract_linear(poly, family, row, entries)
        return cls(space, rows, n_cols, entries, SCALAR, family)

    @classmethod
    def from_generic_form(cls, w: DForm, n_cols: int, family=AUX_PHI):
        """Operator whose value on the generic argument is the horizontal form ``w``."""
        if not w.is_horizontal():
            raise ValueError("operator-valued forms must be horizontal")
        degs = w.degrees() or {0}
        if len(degs) != 1:
            raise ValueError("operator-valued form must be homogeneous")
        entries: dict = {}
        for basis, poly in w.terms.items():
            _extract_linear(poly, family, basis, entries)
        q = degs.pop()
        return cls(w.space, _hform_rows(w.space, q), n_cols, entries, HFORM, family)

    @classmethod
    def from_dict(cls, space, rows, n_cols, entries, codomain=SCALAR, family=AUX_PHI):
        ent = {}
        for key, amap in entries.items():
            clean = {tuple(a): dict(e.poly if isinstance(e, Expr) else e)
                     for a, e in amap.items()}
            clean = {a: p for a, p in clean.items() if p}
            if clean:
                ent[key] = clean
        return cls(space, tuple(rows), n_cols, ent, codomain, family)

    # properties -------------------------------------------------------
    @property
    def form_degree(self) -> int:
        if self.codomain != HFORM:
            raise ValueError("scalar operator has no form degree")
        return len(self.rows[0]) if self.rows else 0

    @property
    def order(self) -> int:
        return max((sum(a) for amap in self.entries.values() for a in amap), default=0)

    def is_zero(self) -> bool:
        return not self.entries

    def coefficient(self, row, col, alpha) -> Expr:
        return Expr(self.space, dict(self.entries.get((row, col), {}).get(tuple(alpha), {})))

    def __eq__(self, other):
        if not isinstance(other, CDiffOp):
            return NotImplemented
        return (self.codomain == other.codomain and self.n_cols == other.n_cols
                and self.entries == other.entries)

    __hash__ = None

    # application ------------------------------------------------------
    def _row_poly(self, row, values) -> dict:
        out: dict = {}
        for col in range(self.n_cols):
            for alpha, coeff in self.entries.get((row, col), {}).items():
                K.poly_iadd(out, K.poly_mul(coeff, values(col, alpha)))
        return out

    def _generic_value(self, family):
        sp = self.space
        return lambda col, alpha: {(var_id(family, col, alpha), 1): Q(1)}

    def _component_value(self, components):
        cache: dict = {}

        def value(col, alpha):
            key = (col, alpha)
            p = cache.get(key)
            if p is None:
                p = total_derivative_multi(components[col].poly, alpha)
                cache[key] = p
            return p
        return value

    def _evaluate(self, values):
        if self.codomain == HFORM:
            terms = {}
            for row in self.rows:
                p = self._row_poly(row, values)
                if p:
                    terms[row] = p
            return DForm(self.space, terms)
        return [Expr(self.space, self._row_poly(row, values)) for row in self.rows]

    def apply_generic(self, family=None):
        """Value on the generic argument: a horizontal form or a list of Exprs."""
        return self._evaluate(self._generic_value(self.family if family is None else family))

    def apply(self, components):
        components = list(components)
        if len(components) != self.n_cols:
            raise ValueError(f"expected {self.n_cols} argument components")
        return self._evaluate(self._component_value(components))

    def substitute_coefficients(self, fn) -> "CDiffOp":
        """Apply ``fn`` (raw poly -> raw poly) to every coefficient."""
        ent = {}
        for key, amap in self.entries.items():
            new = {a: fn(p) for a, p in amap.items()}
            new = {a: p for a, p in new.items() if p}
            if new:
                ent[key] = new
        return CDiffOp(self.space, self.rows, self.n_cols, ent, self.codomain, self.family)

    def __add__(self, other: "CDiffOp") -> "CDiffOp":
        return self._combine(other, 1)

    def __sub__(self, other: "CDiffOp") -> "CDiffOp":
        return self._combine(other, -1)

    def __neg__(self):
        return self.substitute_coefficients(lambda p: K.poly_scale(p, -1))

    def _combine(self, other, sign):
        if self.codomain != other.codomain or self.n_cols != other.n_cols:
            raise ValueError("incompatible operators")
        ent = {k: {a: dict(p) for a, p in v.items()} for k, v in self.entries.items()}
        for key, amap in other.entries.items():
            tgt = ent.setdefault(key, {})
            for a, p in amap.items():
                cur = tgt.get(a)
                if cur is None:
                    tgt[a] = K.poly_scale(p, sign)
                else:
                    K.poly_iadd(cur, p, None if sign > 0 else -1)
                    if not cur:
                        del tgt[a]
            if not tgt:
                del ent[key]
        rows = self.rows if len(self.rows) >= len(other.rows) else other.rows
        return CDiffOp(self.space, rows, self.n_cols, ent, self.codomain, self.family)

    # identification with Cartan forms ----------------------------------
    def to_cartan_form(self) -> DForm:
        """sum Delta^a_{row,i} theta^i_a & row-basis (rows of an hform operator),
        or sum Delta^a_i theta^i_a for a single-row scalar operator."""
        sp = self.space
        keys = TABLE.keys
        out: dict = {}
        for (row, col), amap in self.entries.items():
            basis = row if self.codomain == HFORM else ()
            if self.codomain != HFORM and len(self.rows) != 1:
                raise ValueError("only single-row scalar operators are Cartan 1-forms")
            for alpha, coeff in amap.items():
                th = sp.fiber_id(col, alpha)
                sign, nb = K.basis_merge((th,), basis, keys)
                if sign:
                    K.form_iadd(out, {nb: coeff}, None if sign > 0 else -1)
        return DForm(sp, out)

    def describe(self) -> list:
        from .printer import format_covector, format_poly, subscript

        sp = self.space
        out = []
        for (row, col) in sorted(self.entries, key=lambda k: (str(k[0]), k[1])):
            for alpha in sorted(self.entries[(row, col)], key=lambda a: (sum(a), a)):
                label = ("&".join(format_covector(sp, v) for v in row)
                         if self.codomain == HFORM else str(row))
                out.append({"row": label, "col": col, "D": subscript(sp, alpha) or "1",
                            "coefficient": format_poly(sp, self.entries[(row, col)][alpha])})
        return out


def _hform_rows(space: JetSpace, q: int) -> tuple:
    from itertools import combinations

    ids = space.volume_basis()
    return tuple(tuple(c) for c in combinations(ids, q))


def _extract_linear(poly: dict, family: int, row, entries: dict):
    keys = TABLE.keys
    for m, c in poly.items():
        hit = None
        for i in range(0, len(m), 2):
            if keys[m[i]][0] == family:
                if hit is not None or m[i + 1] != 1:
                    raise NotLinearError("expression is not linear in the generic argument")
                hit = i
        if hit is None:
            raise NotLinearError("expression has a term free of the generic argument")
        _, col, _, alpha = keys[m[hit]]
        rest = m[:hit] + m[hit + 2:]
        amap = entries.setdefault((row, col), {})
        poly_a = amap.setdefault(alpha, {})
        K.poly_iadd(poly_a, {rest: c})
        if not poly_a:
            del amap[alpha]
            if not amap:
                del entries[(row, col)]


def compose_dh(op: CDiffOp) -> CDiffOp:
    """d_h o Delta for an operator into horizontal forms."""
    value = horizontal_diff(op.apply_generic())
    q = op.form_degree + 1
    res = CDiffOp.from_generic_form(value, op.n_cols, op.family) if value else \
        CDiffOp(op.space, _hform_rows(op.space, q), op.n_cols, {}, HFORM, op.family)
    return CDiffOp(op.space, _hform_rows(op.space, q), op.n_cols, res.entries, HFORM, op.family)


# -- source forms ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SourceForm:
    """mu = mu_i theta^i_0 & dx^1 & ... & dx^n."""

    space: JetSpace
    components: tuple

    def __eq__(self, other):
        if not isinstance(other, SourceForm):
            return NotImplemented
        return tuple(self.components) == tuple(other.components)

    __hash__ = None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def as_form(self) -> DForm:
        sp = self.space
        vol = DForm.volume(sp)
        out = DForm(sp)
        for j, mu in enumerate(self.components):
            out = out + (DForm.theta(sp, j) * vol).scale(mu)
        return out

    def pairing(self, phi: EvolutionaryField | None = None) -> DForm:
        """<mu, phi> = mu_i phi^i dx^1 & ... & dx^n (generic phi by default)."""
        sp = self.space
        phi = phi or EvolutionaryField.generic(sp)
        total = Expr(sp)
        for j, mu in enumerate(self.components):
            total = total + mu * phi.component(j)
        return DForm.volume(sp, total)

    def to_text(self) -> list[str]:
        return [c.to_text() for c in self.components]


# -- Euler operator --------------------------------------------------------------

def lagrangian_density(L: DForm) -> Expr:
    sp = L.space
    if not L.is_horizontal():
        raise ValueError("the Euler operator expects a horizontal n-form")
    if L.degrees() - {sp.n}:
        raise ValueError(f"the Euler operator expects a form of degree n={sp.n}")
    return L.coefficient(sp.volume_basis())


def euler(L: DForm) -> SourceForm:
    """E_i = sum_a (-1)^{|a|} D_a(dL/du^i_a)."""
    sp = L.space
    density = lagrangian_density(L).poly
    comps = [dict() for _ in range(sp.m)]
    keys = TABLE.keys
    for v in K.poly_vars(density):
        kind, j, order, alpha = keys[v]
        if kind != FIBER:
            continue
        term = total_derivative_multi(K.poly_partial(density, v), alpha)
        K.poly_iadd(comps[j], term, None if order % 2 == 0 else -1)
    return SourceForm(sp, tuple(Expr(sp, c) for c in comps))


# -- integration by parts ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Decomposition:
    """Delta = d_h o boundary + source (top-degree integration by parts)."""

    boundary: CDiffOp
    source_polys: tuple  # raw polys, one per argument component

    def source(self, space) -> SourceForm:
        return SourceForm(space, tuple(Expr(space, p) for p in self.source_polys))


def _as_top_operator(delta: CDiffOp) -> dict:
    sp = delta.space
    vol = sp.volume_basis()
    if delta.codomain == HFORM:
        if delta.form_degree != sp.n:
            raise ValueError("integration by parts needs an operator into horizontal n-forms")
        rows = [vol]
    else:
        if len(delta.rows) != 1:
            raise ValueError("integration by parts needs a single-row operator")
        rows = list(delta.rows)
    work: dict = {}
    for (row, col), amap in delta.entries.items():
        if row != rows[0]:
            continue
        for alpha, p in amap.items():
            work[(alpha, col)] = dict(p)
    return work


def ibp_scalar(delta: CDiffOp, direction: str = "smallest") -> Decomposition:
    """Repeatedly strip one derivative from the lex-largest multi-index.

    ``direction`` picks the stripped direction among the non-zero entries of
    that multi-index: ``"smallest"`` or ``"largest"``.
    """
    sp = delta.space
    n = sp.n
    vol = sp.volume_basis()
    work = _as_top_operator(delta)
    rows_n1 = _hform_rows(sp, n - 1)
    d1: dict = {}
    while True:
        live = [key for key in work if sum(key[0]) > 0]
        if not live:
            break
        alpha = max(k[0] for k in live)
        nz = [k for k, a in enumerate(alpha) if a]
        k = nz[0] if direction == "smallest" else nz[-1]
        lower = sub_unit(alpha, k)
        row = vol[:k] + vol[k + 1:]
        sign = _neg_one_pow(k)
        for col in sorted({c for (a, c) in live if a == alpha}):
            a_poly = work.pop((alpha, col))
            # a D_alpha phi = D_k(a D_lower phi) - D_k(a) D_lower phi
            amap = d1.setdefault((row, col), {})
            tgt = amap.setdefault(lower, {})
            K.poly_iadd(tgt, a_poly, None if sign > 0 else -1)
            if not tgt:
                del amap[lower]
                if not amap:
                    del d1[(row, col)]
            dk = K.poly_total_derivative(a_poly, k, TABLE.shift)
            if dk:
                tgt = work.setdefault((lower, col), {})
                K.poly_iadd(tgt, dk, -1)
                if not tgt:
                    del work[(lower, col)]
    zero = sp.zero_index()
    source = tuple(work.get((zero, col), {}) for col in range(delta.n_cols))
    op1 = CDiffOp(sp, rows_n1, delta.n_cols, d1, HFORM, delta.family)
    return Decomposition(op1, source)


def verify_decomposition(delta: CDiffOp, dec: Decomposition) -> DForm:
    """Residual Delta(phi) - d_h(boundary(phi)) - <source, phi> on the generic argument."""
    sp = delta.space
    lhs = delta.apply_generic()
    if not isinstance(lhs, DForm):
        lhs = DForm.volume(sp, lhs[0])
    pair: dict = {}
    for col, p in enumerate(dec.source_polys):
        K.poly_iadd(pair, K.poly_mul(p, {(var_id(delta.family, col, sp.zero_index()), 1): Q(1)}))
    return lhs - horizontal_diff(dec.boundary.apply_generic()) - DForm.volume(sp, Expr(sp, pair))


@dataclass(frozen=True, eq=False)
class OperatorDecomposition:
    """nabla(G, .) = d_h o boundary(G, .) + <source_operator(G), .>."""

    boundary: CDiffOp
    source_operator: CDiffOp


def ibp_operator(nabla: CDiffOp, n_args: int, arg_family: int = AUX_G,
                 direction: str = "smallest") -> OperatorDecomposition:
    """Integrate by parts in the phi slot of a bilinear operator whose
    coefficients are linear in the generic argument ``G``."""
    dec = ibp_scalar(nabla, direction)
    sp = nabla.space
    src = CDiffOp.from_generic_polys(sp, list(dec.source_polys), n_args, arg_family)
    src = CDiffOp(sp, tuple(range(nabla.n_cols)), n_args, src.entries, SCALAR, arg_family)
    return OperatorDecomposition(dec.boundary, src)


# -- adjoints and linearizations -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Adjoint:
    op: CDiffOp
    witness: DForm  # rho with <Delta* psi, phi> - <psi, Delta phi> = d_h rho


def adjoint_operator(delta: CDiffOp) -> CDiffOp:
    """(Delta* psi)_i = sum_{r,a} (-1)^{|a|} D_a(Delta^a_{r i} psi_r)."""
    if delta.codomain != SCALAR:
        raise ValueError("adjoint is defined here for scalar-valued operators")
    sp = delta.space
    n_rows = len(delta.rows)
    out = []
    for col in range(delta.n_cols):
        acc: dict = {}
        for r_idx, row in enumerate(delta.rows):
            for alpha, coeff in delta.entries.get((row, col), {}).items():
                psi = {(var_id(AUX_PSI, r_idx, sp.zero_index()), 1): Q(1)}
                term = total_derivative_multi(K.poly_mul(coeff, psi), alpha)
                K.poly_iadd(acc, term, -1 if sum(alpha) & 1 else None)
        out.append(acc)
    res = CDiffOp.from_generic_polys(sp, out, n_rows, AUX_PSI)
    return CDiffOp(sp, tuple(range(delta.n_cols)), n_rows, res.entries, SCALAR, AUX_PHI)


def adjoint(delta: CDiffOp) -> Adjoint:
    sp = delta.space
    star = adjoint_operator(delta)
    # phi -> sum_r psi_r Delta_r(phi) as a top-degree operator in phi
    vals = delta.apply_generic(AUX_PHI)
    pairing: dict = {}
    for r_idx, val in enumerate(vals):
        psi = {(var_id(AUX_PSI, r_idx, sp.zero_index()), 1): Q(1)}
        K.poly_iadd(pairing, K.poly_mul(val.poly, psi))
    top = CDiffOp.from_generic_polys(sp, [pairing], delta.n_cols, AUX_PHI) if pairing else \
        CDiffOp(sp, (0,), delta.n_cols, {}, SCALAR, AUX_PHI)
    dec = ibp_scalar(top)
    return Adjoint(star, -dec.boundary.apply_generic())


def linearization(components) -> CDiffOp:
    """l_F(phi)_r = sum dF_r/du^i_a D_a(phi^i)."""
    components = list(components)
    sp = components[0].space
    keys = TABLE.keys
    entries: dict = {}
    for r, f in enumerate(components):
        for v in K.poly_vars(f.poly):
            kind, i, _, alpha = keys[v]
            if kind != FIBER:
                continue
            entries.setdefault((r, i), {})[alpha] = K.poly_partial(f.poly, v)
    return CDiffOp(sp, tuple(range(len(components))), sp.m, entries, SCALAR, AUX_PHI)


# -- horizontal homotopy -------------------------------------------------------------

def horizontal_primitive(delta: CDiffOp, max_steps: int = 10_000) -> CDiffOp:
    """P with d_h o P = Delta for a d_h-closed operator into horizontal q-forms,
    1 <= q <= n-1 (symbol-level Koszul homotopy, descending in order)."""
    sp = delta.space
    if delta.codomain != HFORM:
        raise ValueError("horizontal_primitive expects an operator into horizontal forms")
    q = delta.form_degree
    if not 1 <= q <= sp.n - 1:
        raise ValueError("horizontal_primitive needs form degree 1 <= q <= n-1")
    if not compose_dh(delta).is_zero():
        raise ValueError("operator is not d_h-closed")
    base_ids = sp.volume_basis()
    rows_lower = _hform_rows(sp, q - 1)
    prim = CDiffOp(sp, rows_lower, delta.n_cols, {}, HFORM, delta.family)
    rest = delta
    for _ in range(max_steps):
        if rest.is_zero():
            break
        s = rest.order
        if s == 0:
            raise ArithmeticError("closed operator left a non-zero order-0 remainder")
        tau: dict = {}
        denom = Q(sp.n - q + s)  # xi^ o delta + delta o xi^ = (n - q + s) on symbols
        for (row, col), amap in rest.entries.items():
            for alpha, coeff in amap.items():
                if sum(alpha) != s:
                    continue
                for k, a_k in enumerate(alpha):
                    if not a_k:
                        continue
                    dxk = base_ids[k]
                    if dxk not in row:
                        continue
                    pos = row.index(dxk)
                    sign = _neg_one_pow(pos)
                    new_row = row[:pos] + row[pos + 1:]
                    lower = sub_unit(alpha, k)
                    amap2 = tau.setdefault((new_row, col), {})
                    tgt = amap2.setdefault(lower, {})
                    K.poly_iadd(tgt, coeff, Q(sign * a_k) / denom)
                    if not tgt:
                        del amap2[lower]
                        if not amap2:
                            del tau[(new_row, col)]
        step = CDiffOp(sp, rows_lower, delta.n_cols, tau, HFORM, delta.family)
        prim = prim + step
        rest = rest - compose_dh(step)
    else:  # pragma: no cover
        raise ArithmeticError("horizontal primitive did not converge")
    if compose_dh(prim) != delta:
        raise ArithmeticError("horizontal primitive failed its own check")
    return prim


# -- Noether forms ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class NoetherForm:
    omega: DForm            # omega_L
    horizontal: DForm       # L~, the horizontal part of L
    cartan_part: DForm      # Cartan form from the Noether decomposition
    boundary: CDiffOp
    euler: SourceForm
    residual: DForm         # <E, phi> - [i_E d(L + omega_L)]_h, zero by construction
    witness: DForm          # rho with residual = d_h rho; zero


def lie_operator(L: DForm) -> CDiffOp:
    """phi -> L_{E_phi}[L]_h as an operator into horizontal n-forms."""
    sp = L.space
    Lt = horizontal_part(L)
    value = horizontal_part(lie_evolutionary(EvolutionaryField.generic(sp), Lt))
    if not value:
        return CDiffOp(sp, _hform_rows(sp, sp.n), sp.m, {}, HFORM, AUX_PHI)
    return CDiffOp.from_generic_form(value, sp.m, AUX_PHI)


def correction_residual(L: DForm, omega: DForm) -> DForm:
    sp = L.space
    E = euler(horizontal_part(L))
    phi = EvolutionaryField.generic(sp)
    rhs = horizontal_part(interior_evolutionary(phi, de_rham(L + omega)))
    return E.pairing(phi) - rhs


def noether_form(L: DForm, direction: str = "smallest") -> NoetherForm:
    sp = L.space
    if L.degrees() - {sp.n}:
        raise ValueError(f"noether_form expects an n-form (n={sp.n})")
    Lt = horizontal_part(L)
    dec = ibp_scalar(lie_operator(L), direction)
    cartan = dec.boundary.to_cartan_form()
    omega = Lt - L + cartan
    E = euler(Lt)
    if dec.source(sp) != E:
        raise ArithmeticError("integration by parts disagrees with the Euler operator")
    residual = correction_residual(L, omega)
    return NoetherForm(omega, Lt, cartan, dec.boundary, E, residual, DForm(sp))


@dataclass(frozen=True, eq=False)
class NoetherCheck:
    lhs: DForm
    rhs: DForm
    residual: DForm

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()


def noether_identity_check(L: DForm, omega: DForm) -> NoetherCheck:
    """L_{E_phi}[L]_h = <E[L]_h, phi> + d_h[i_{E_phi} omega]_h on the generic phi."""
    sp = L.space
    phi = EvolutionaryField.generic(sp)
    Lt = horizontal_part(L)
    lhs = horizontal_part(lie_evolutionary(phi, Lt))
    rhs = euler(Lt).pairing(phi) + horizontal_diff(horizontal_part(interior_evolutionary(phi, omega)))
    return NoetherCheck(lhs, rhs, lhs - rhs)


def operator_of_cartan_form(w: DForm) -> CDiffOp:
    """phi -> [i_{E_phi} w]_h for w of contact degree >= 1."""
    sp = w.space
    value = horizontal_part(interior_evolutionary(EvolutionaryField.generic(sp), contact_part(w, 1)))
    degs = {len(b) - 1 for b in w.terms} or {0}
    q = max(degs)
    if not value:
        return CDiffOp(sp, _hform_rows(sp, q), sp.m, {}, HFORM, AUX_PHI)
    op = CDiffOp.from_generic_form(value, sp.m, AUX_PHI)
    return op


__all__ = [
    "CDiffOp", "SourceForm", "Decomposition", "OperatorDecomposition", "Adjoint",
    "NoetherForm", "NoetherCheck", "euler", "ibp_scalar", "ibp_operator", "adjoint",
    "adjoint_operator", "linearization", "horizontal_primitive", "compose_dh",
    "noether_form", "noether_identity_check", "correction_residual", "lie_operator",
    "operator_of_cartan_form", "verify_decomposition", "lagrangian_density",
    "NotLinearError", "SCALAR", "HFORM", "BASE", "AUX_G",
]
