"""Exact differential polynomials over jet coordinates."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from . import kernels as K
from .jet import BASE, FIBER, TABLE, JetSpace, JetVar, Q, RATIONAL_TYPES, var_id


def as_rational(c):
    if isinstance(c, RATIONAL_TYPES[:1]):
        return c
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return Q(c)
    if isinstance(c, (Fraction, Rational)):
        return Q(c.numerator, c.denominator)
    raise TypeError(f"not an exact rational coefficient: {c!r}")


def _freeze(poly: dict) -> frozenset:
    return frozenset(poly.items())


class Expr:
    """An immutable differential polynomial with rational coefficients.

    Values are stored as a sparse dict ``monomial -> coefficient`` (see
    ``_pykernels``) which is canonical: no zero coefficients, monomials in a
    fixed variable order, so equality of values is equality of dicts.
    """

    __slots__ = ("space", "_poly", "_hash")

    def __init__(self, space: JetSpace, poly: dict | None = None):
        self.space = space
        self._poly = poly if poly is not None else {}
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, space: JetSpace, c) -> "Expr":
        c = as_rational(c)
        return cls(space, {(): c} if c else {})

    @classmethod
    def var(cls, space: JetSpace, vid: int) -> "Expr":
        return cls(space, {(vid, 1): Q(1)})

    @classmethod
    def x(cls, space: JetSpace, i: int) -> "Expr":
        return cls.var(space, var_id(BASE, i))

    @classmethod
    def u(cls, space: JetSpace, j: int, alpha=None) -> "Expr":
        return cls.var(space, space.fiber_id(j, alpha))

    @classmethod
    def aux(cls, space: JetSpace, family: int, j: int, alpha=None) -> "Expr":
        return cls.var(space, space.aux_id(family, j, alpha))

    # access -----------------------------------------------------------
    @property
    def poly(self) -> dict:
        return self._poly

    def is_zero(self) -> bool:
        return not self._poly

    def __bool__(self) -> bool:
        return bool(self._poly)

    def variables(self) -> set:
        return K.poly_vars(self._poly)

    def jet_variables(self) -> list[JetVar]:
        return sorted((JetVar.from_key(TABLE.keys[v]) for v in self.variables()),
                      key=lambda v: v.key)

    @property
    def order(self) -> int:
        return max((TABLE.keys[v][2] for v in self.variables()), default=0)

    def constant_value(self):
        if not self._poly:
            return Q(0)
        if len(self._poly) == 1 and () in self._poly:
            return self._poly[()]
        raise ValueError("expression is not constant")

    def is_constant(self) -> bool:
        return not self._poly or (len(self._poly) == 1 and () in self._poly)

    def degree_in(self, vids) -> set:
        """Set of total degrees in the given variables over all monomials."""
        vids = set(vids)
        out = set()
        for m in self._poly:
            out.add(sum(m[i + 1] for i in range(0, len(m), 2) if m[i] in vids))
        return out

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> dict:
        if isinstance(other, Expr):
            return other._poly
        c = as_rational(other)
        return {(): c} if c else {}

    def __add__(self, other):
        if not isinstance(other, (Expr, int, Fraction)) and not isinstance(other, RATIONAL_TYPES):
            return NotImplemented
        return Expr(self.space, K.poly_add(self._poly, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Expr, int, Fraction)) and not isinstance(other, RATIONAL_TYPES):
            return NotImplemented
        return Expr(self.space, K.poly_sub(self._poly, self._coerce(other)))

    def __rsub__(self, other):
        return Expr(self.space, K.poly_sub(self._coerce(other), self._poly))

    def __neg__(self):
        return Expr(self.space, K.poly_scale(self._poly, -1))

    def __mul__(self, other):
        if isinstance(other, Expr):
            return Expr(self.space, K.poly_mul(self._poly, other._poly))
        if isinstance(other, (int, Fraction)) or isinstance(other, RATIONAL_TYPES):
            return Expr(self.space, K.poly_scale(self._poly, as_rational(other)))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Expr):
            other = other.constant_value()
        c = as_rational(other)
        if not c:
            raise ZeroDivisionError("division of an expression by zero")
        return Expr(self.space, K.poly_scale(self._poly, 1 / c))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are polynomial")
        return Expr(self.space, K.poly_pow(self._poly, e))

    def __eq__(self, other):
        if isinstance(other, Expr):
            return self._poly == other._poly
        if isinstance(other, (int, Fraction)) or isinstance(other, RATIONAL_TYPES):
            return self._poly == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(_freeze(self._poly))
        return self._hash

    # calculus ---------------------------------------------------------
    def total_derivative(self, i: int) -> "Expr":
        """D_{x^i}; auxiliary symbols shift their multi-index like fibers."""
        if not 0 <= i < self.space.n:
            raise ValueError(f"direction {i} out of range for n={self.space.n}")
        return Expr(self.space, K.poly_total_derivative(self._poly, i, TABLE.shift))

    def total_derivative_multi(self, alpha) -> "Expr":
        return Expr(self.space, total_derivative_multi(self._poly, alpha))

    def partial(self, v) -> "Expr":
        vid = v if isinstance(v, int) else TABLE.intern(v.key)
        return Expr(self.space, K.poly_partial(self._poly, vid))

    def substitute(self, values: dict) -> "Expr":
        """Replace variables (ids or JetVars) by expressions simultaneously."""
        vals = {}
        for k, e in values.items():
            vid = k if isinstance(k, int) else TABLE.intern(k.key)
            vals[vid] = e._poly if isinstance(e, Expr) else Expr.const(self.space, e)._poly
        return Expr(self.space, K.poly_substitute(self._poly, vals))

    def evaluate(self, point: dict):
        """Exact evaluation at a point ``{var id: rational}`` (test oracle use)."""
        total = Q(0)
        for m, c in self._poly.items():
            t = c
            for i in range(0, len(m), 2):
                t = t * as_rational(point[m[i]]) ** m[i + 1]
            total += t
        return total

    def to_text(self) -> str:
        from .printer import format_expr

        return format_expr(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Expr({self.to_text()!r})"


def total_derivative_multi(poly: dict, alpha) -> dict:
    """D_alpha = D_1^{a_1} o ... o D_n^{a_n} on a raw polynomial."""
    out = poly
    for k in range(len(alpha) - 1, -1, -1):
        for _ in range(alpha[k]):
            if not out:
                return {}
            out = K.poly_total_derivative(out, k, TABLE.shift)
    return out if out is not poly else dict(poly)


def fiber_variables(poly: dict, kinds=(FIBER,)) -> list[int]:
    """Ids of variables of the given kinds occurring in ``poly``, canonical order."""
    vids = [v for v in K.poly_vars(poly) if TABLE.keys[v][0] in kinds]
    vids.sort(key=TABLE.keys.__getitem__)
    return vids
