"""Differential forms on jet space in the adapted basis {dx^i, theta^i_a}."""

from __future__ import annotations

from . import kernels as K
from .expr import Expr, as_rational, total_derivative_multi
from .jet import AUX_PHI, BASE, FIBER, TABLE, JetSpace, Q


def _is_contact(vid: int) -> bool:
    return TABLE.keys[vid][0] != BASE


def _copy_terms(terms: dict) -> dict:
    return {b: dict(p) for b, p in terms.items()}


class DForm:
    """Immutable formal sum ``coefficient * (c_1 & ... & c_k)``.

    ``terms`` maps a sorted basis tuple of covector ids to a raw polynomial.
    Covector ids are variable ids: the id of x^i stands for dx^i, the id of
    u^j_a for theta^j_a, and auxiliary ids for their own contact covectors.
    """

    __slots__ = ("space", "_terms", "_hash")

    def __init__(self, space: JetSpace, terms: dict | None = None):
        self.space = space
        self._terms = terms if terms is not None else {}
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, space: JetSpace) -> "DForm":
        return cls(space, {})

    @classmethod
    def function(cls, f) -> "DForm":
        return cls(f.space, {(): dict(f.poly)} if f.poly else {})

    @classmethod
    def constant(cls, space: JetSpace, c) -> "DForm":
        c = as_rational(c)
        return cls(space, {(): {(): c}} if c else {})

    @classmethod
    def dx(cls, space: JetSpace, i: int) -> "DForm":
        return cls(space, {(space.base_id(i),): {(): Q(1)}})

    @classmethod
    def theta(cls, space: JetSpace, j: int, alpha=None) -> "DForm":
        return cls(space, {(space.fiber_id(j, alpha),): {(): Q(1)}})

    @classmethod
    def covector(cls, space: JetSpace, vid: int) -> "DForm":
        return cls(space, {(vid,): {(): Q(1)}})

    @classmethod
    def volume(cls, space: JetSpace, coefficient=None) -> "DForm":
        poly = {(): Q(1)} if coefficient is None else dict(coefficient.poly)
        return cls(space, {space.volume_basis(): poly} if poly else {})

    @classmethod
    def from_basis(cls, space: JetSpace, seq, coefficient=None) -> "DForm":
        sign, basis = K.basis_normalize(seq, TABLE.keys)
        if not sign:
            return cls(space)
        poly = {(): Q(1)} if coefficient is None else dict(coefficient.poly)
        if sign < 0:
            poly = K.poly_scale(poly, -1)
        return cls(space, {basis: poly} if poly else {})

    # access -----------------------------------------------------------
    @property
    def terms(self) -> dict:
        return self._terms

    def items(self):
        for basis, poly in self._terms.items():
            yield basis, Expr(self.space, poly)

    def coefficient(self, basis) -> Expr:
        return Expr(self.space, dict(self._terms.get(tuple(basis), {})))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degrees(self) -> set:
        return {len(b) for b in self._terms}

    @property
    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"inhomogeneous form with degrees {sorted(ds)}")
        return ds.pop() if ds else 0

    def contact_degrees(self) -> set:
        return {sum(1 for v in b if _is_contact(v)) for b in self._terms}

    def is_horizontal(self) -> bool:
        return self.contact_degrees() <= {0}

    def variables(self) -> set:
        out = set()
        for p in self._terms.values():
            out |= K.poly_vars(p)
        return out

    def __eq__(self, other):
        if isinstance(other, DForm):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((b, frozenset(p.items())) for b, p in self._terms.items()))
        return self._hash

    # algebra ----------------------------------------------------------
    def _lift(self, other) -> dict:
        if isinstance(other, DForm):
            return other._terms
        if isinstance(other, Expr):
            return {(): other.poly} if other.poly else {}
        c = as_rational(other)
        return {(): {(): c}} if c else {}

    def __add__(self, other):
        out = _copy_terms(self._terms)
        K.form_iadd(out, self._lift(other))
        return DForm(self.space, out)

    __radd__ = __add__

    def __sub__(self, other):
        out = _copy_terms(self._terms)
        K.form_iadd(out, self._lift(other), -1)
        return DForm(self.space, out)

    def __rsub__(self, other):
        out = _copy_terms(self._lift(other))
        K.form_iadd(out, self._terms, -1)
        return DForm(self.space, out)

    def __neg__(self):
        return DForm(self.space, {b: K.poly_scale(p, -1) for b, p in self._terms.items()})

    def __mul__(self, other):
        """Scalar multiplication, or the exterior product for another form."""
        if isinstance(other, DForm):
            return wedge(self, other)
        if isinstance(other, Expr):
            return self.scale(other)
        c = as_rational(other)
        if not c:
            return DForm(self.space)
        return DForm(self.space, {b: K.poly_scale(p, c) for b, p in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, Expr):
            return self.scale(other)
        return self.__mul__(other)

    def __truediv__(self, other):
        c = as_rational(other.constant_value() if isinstance(other, Expr) else other)
        return self * (1 / c)

    def scale(self, f: Expr) -> "DForm":
        out = {}
        for b, p in self._terms.items():
            q = K.poly_mul(p, f.poly)
            if q:
                out[b] = q
        return DForm(self.space, out)

    def map_coefficients(self, fn) -> "DForm":
        """Apply ``fn`` (raw poly -> raw poly) to every coefficient."""
        out = {}
        for b, p in self._terms.items():
            q = fn(p)
            if q:
                out[b] = q
        return DForm(self.space, out)

    def to_text(self) -> str:
        from .printer import format_terms

        return format_terms(self.space, self._terms)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"DForm({self.to_text()!r})"

    def to_json(self) -> list:
        """Canonical term list: [[covectors...], coefficient text]."""
        from .printer import basis_sort_key, format_covector, format_poly

        return [[[format_covector(self.space, v) for v in b], format_poly(self.space, self._terms[b])]
                for b in sorted(self._terms, key=basis_sort_key)]


def wedge(a: DForm, b: DForm) -> DForm:
    return DForm(a.space, K.form_wedge(a.terms, b.terms, TABLE.keys))


def contact_part(w: DForm, p: int) -> DForm:
    """Terms of contact degree exactly ``p``."""
    if p < 0:
        raise ValueError("contact degree must be non-negative")
    return DForm(w.space, {b: dict(c) for b, c in w.terms.items()
                           if sum(1 for v in b if _is_contact(v)) == p})


def contact_at_least(w: DForm, p: int) -> DForm:
    return DForm(w.space, {b: dict(c) for b, c in w.terms.items()
                           if sum(1 for v in b if _is_contact(v)) >= p})


def contact_below(w: DForm, p: int) -> DForm:
    return DForm(w.space, {b: dict(c) for b, c in w.terms.items()
                           if sum(1 for v in b if _is_contact(v)) < p})


def in_CpLambda(w: DForm, p: int) -> bool:
    return all(sum(1 for v in b if _is_contact(v)) >= p for b in w.terms)


def horizontal_part(w: DForm) -> DForm:
    return contact_part(w, 0)


def degree_part(w: DForm, k: int) -> DForm:
    return DForm(w.space, {b: dict(c) for b, c in w.terms.items() if len(b) == k})


# -- exterior derivative ---------------------------------------------------

def _d_function(poly: dict, n: int) -> list:
    """d f as a list of (covector id, poly)."""
    out = []
    for k in range(n):
        dk = K.poly_total_derivative(poly, k, TABLE.shift)
        if dk:
            out.append((TABLE.intern((BASE, k, 0, ())), dk))
    for v in K.poly_vars(poly):
        if TABLE.keys[v][0] != BASE:
            out.append((v, K.poly_partial(poly, v)))
    return out


def _d_covector(vid: int, n: int) -> list:
    """d(theta_v) = sum_k dx^k & theta_{D_k v}, as (sign, basis) pairs."""
    if TABLE.keys[vid][0] == BASE:
        return []
    keys = TABLE.keys
    out = []
    for k in range(n):
        dxk = TABLE.intern((BASE, k, 0, ()))
        out.append(((dxk, TABLE.shift(vid, k)), 1))
    # (dx^k, theta) is already sorted because base keys precede contact keys
    assert all(keys[b[0]] < keys[b[1]] for b, _ in out)
    return out


def de_rham(w: DForm) -> DForm:
    n = w.space.n
    keys = TABLE.keys
    out: dict = {}
    for basis, poly in w.terms.items():
        for cov, df in _d_function(poly, n):
            sign, nb = K.basis_merge((cov,), basis, keys)
            if sign:
                K.form_iadd(out, {nb: df}, None if sign > 0 else -1)
        for j, c in enumerate(basis):
            if keys[c][0] == BASE:
                continue
            pre = basis[:j]
            post = basis[j + 1:]
            base_sign = -1 if j & 1 else 1
            for (a, b), s in _d_covector(c, n):
                sign, nb = K.basis_normalize(pre + (a, b) + post, keys)
                if sign:
                    K.form_iadd(out, {nb: poly}, sign * s * base_sign)
    return DForm(w.space, out)


def horizontal_diff(w: DForm) -> DForm:
    """d_h on a horizontal representative."""
    if not w.is_horizontal():
        raise ValueError("horizontal_diff expects a form of contact degree 0")
    n = w.space.n
    keys = TABLE.keys
    out: dict = {}
    for basis, poly in w.terms.items():
        for k in range(n):
            dk = K.poly_total_derivative(poly, k, TABLE.shift)
            if not dk:
                continue
            sign, nb = K.basis_merge((TABLE.intern((BASE, k, 0, ())),), basis, keys)
            if sign:
                K.form_iadd(out, {nb: dk}, None if sign > 0 else -1)
    return DForm(w.space, out)


# -- evolutionary fields ------------------------------------------------------

class EvolutionaryField:
    """E_phi = D_a(phi^i) d/du^i_a; ``components=None`` is the generic field
    whose components are the auxiliary symbols phi[u]."""

    def __init__(self, space: JetSpace, components=None, family: int = AUX_PHI):
        self.space = space
        self.family = family
        if components is not None:
            components = tuple(components)
            if len(components) != space.m:
                raise ValueError(f"expected {space.m} components, got {len(components)}")
        self.components = components
        self._cache: dict = {}

    @classmethod
    def generic(cls, space: JetSpace, family: int = AUX_PHI) -> "EvolutionaryField":
        return cls(space, None, family)

    @property
    def is_generic(self) -> bool:
        return self.components is None

    def component(self, j: int) -> Expr:
        if self.components is None:
            return Expr.aux(self.space, self.family, j)
        return self.components[j]

    def derivative_poly(self, j: int, alpha: tuple) -> dict:
        """D_alpha(phi^j) as a raw polynomial."""
        if self.components is None:
            return {(self.space.aux_id(self.family, j, alpha), 1): Q(1)}
        key = (j, alpha)
        p = self._cache.get(key)
        if p is None:
            p = total_derivative_multi(self.components[j].poly, alpha)
            self._cache[key] = p
        return p

    def theta_value(self, vid: int) -> dict:
        """i_E theta_v (fiber contact covectors only)."""
        kind, j, _, alpha = TABLE.keys[vid]
        if kind != FIBER:
            return {}
        return self.derivative_poly(j, alpha)

    def apply(self, f: Expr) -> Expr:
        """E_phi(f) = sum D_a(phi^i) df/du^i_a."""
        out: dict = {}
        for v in K.poly_vars(f.poly):
            val = self.theta_value(v)
            if val:
                K.poly_iadd(out, K.poly_mul(val, K.poly_partial(f.poly, v)))
        return Expr(f.space, out)


def interior_evolutionary(field: EvolutionaryField, w: DForm) -> DForm:
    out: dict = {}
    for basis, poly in w.terms.items():
        for j, c in enumerate(basis):
            val = field.theta_value(c)
            if not val:
                continue
            nb = basis[:j] + basis[j + 1:]
            K.form_iadd(out, {nb: K.poly_mul(poly, val)}, -1 if j & 1 else None)
    return DForm(w.space, out)


def lie_evolutionary(field: EvolutionaryField, w: DForm) -> DForm:
    """Cartan formula: L_E = i_E d + d i_E."""
    return interior_evolutionary(field, de_rham(w)) + de_rham(interior_evolutionary(field, w))
