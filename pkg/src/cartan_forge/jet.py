"""Jet coordinates: multi-indices, jet variables and the global variable table.

Every jet variable is identified by a key ``(kind, index, order, alpha)``:

* base variable x^i:        ``(BASE, i, 0, ())``
* fiber coordinate u^i_a:   ``(FIBER, i, |a|, a)``
* auxiliary u-like symbols: ``(AUX_*, i, |a|, a)`` for the generic evolutionary
  parameter phi, the generic relation argument G and the adjoint argument psi.

Tuple comparison of keys is the canonical variable order: base variables by
index, then fibers by (dependent index, graded-lex multi-index), then the
auxiliary families.  Keys are interned to small integer ids; covectors dx^i,
theta^i_a reuse the id of the variable they differentiate.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def Q(p=0, q=1):
        return _mpq(p, q)

    RATIONAL_TYPES: tuple = (type(_mpq(1, 2)), Fraction)
except ImportError:  # pragma: no cover - gmpy2 is optional
    def Q(p=0, q=1):
        return Fraction(p, q)

    RATIONAL_TYPES = (Fraction,)

BASE = 0
FIBER = 1
AUX_PHI = 2
AUX_G = 3
AUX_PSI = 4

AUX_FAMILIES = {"phi": AUX_PHI, "G": AUX_G, "psi": AUX_PSI}
AUX_NAMES = {v: k for k, v in AUX_FAMILIES.items()}


class MultiIndex(tuple):
    """Non-negative integer tuple; ``+`` and ``-`` act componentwise."""

    __slots__ = ()

    def __new__(cls, entries=()):
        entries = tuple(int(a) for a in entries)
        if any(a < 0 for a in entries):
            raise ValueError(f"negative multi-index entry in {entries}")
        return super().__new__(cls, entries)

    @classmethod
    def zero(cls, n: int) -> "MultiIndex":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "MultiIndex":
        return cls(tuple(1 if j == i else 0 for j in range(n)))

    @property
    def order(self) -> int:
        return sum(self)

    def plus_unit(self, i: int) -> "MultiIndex":
        return MultiIndex(self[:i] + (self[i] + 1,) + self[i + 1:])

    def __add__(self, other):
        if len(self) != len(other):
            raise ValueError("multi-index length mismatch")
        return MultiIndex(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if len(self) != len(other):
            raise ValueError("multi-index length mismatch")
        return MultiIndex(a - b for a, b in zip(self, other))

    def dominates(self, other) -> bool:
        return all(a >= b for a, b in zip(self, other))


def add_unit(alpha: tuple, i: int) -> tuple:
    return alpha[:i] + (alpha[i] + 1,) + alpha[i + 1:]


def sub_unit(alpha: tuple, i: int) -> tuple:
    return alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]


@dataclass(frozen=True)
class JetVar:
    kind: int
    index: int
    alpha: tuple = ()

    def __post_init__(self):
        if self.kind == BASE and self.alpha:
            raise ValueError("base variables carry no multi-index")

    @property
    def key(self) -> tuple:
        return (self.kind, self.index, sum(self.alpha), tuple(self.alpha))

    @property
    def order(self) -> int:
        return sum(self.alpha)

    @classmethod
    def from_key(cls, key: tuple) -> "JetVar":
        return cls(key[0], key[1], key[3])


class VarTable:
    """Process-wide interning of variable keys to integer ids."""

    def __init__(self):
        self._ids: dict[tuple, int] = {}
        self.keys: list[tuple] = []
        self._shift: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def intern(self, key: tuple) -> int:
        vid = self._ids.get(key)
        if vid is not None:
            return vid
        with self._lock:
            vid = self._ids.get(key)
            if vid is None:
                vid = len(self.keys)
                self.keys.append(key)
                self._ids[key] = vid
        return vid

    def shift(self, vid: int, k: int) -> int:
        """Id of D_k(var), or ONE (-1) / ZERO (-2) for base variables."""
        s = self._shift.get((vid, k))
        if s is not None:
            return s
        kind, idx, order, alpha = self.keys[vid]
        if kind == BASE:
            s = -1 if idx == k else -2
        else:
            s = self.intern((kind, idx, order + 1, add_unit(alpha, k)))
        self._shift[(vid, k)] = s
        return s

    def key(self, vid: int) -> tuple:
        return self.keys[vid]


TABLE = VarTable()


def var_id(kind: int, index: int, alpha: tuple = ()) -> int:
    alpha = tuple(alpha)
    return TABLE.intern((kind, index, sum(alpha), alpha))


@dataclass(frozen=True)
class JetSpace:
    """Names of the independent and dependent variables of a jet bundle."""

    independent: tuple
    dependent: tuple

    def __post_init__(self):
        object.__setattr__(self, "independent", tuple(self.independent))
        object.__setattr__(self, "dependent", tuple(self.dependent))
        names = list(self.independent) + list(self.dependent)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be unique: {names}")
        if not self.independent:
            raise ValueError("at least one independent variable is required")

    @property
    def n(self) -> int:
        return len(self.independent)

    @property
    def m(self) -> int:
        return len(self.dependent)

    def zero_index(self) -> tuple:
        return (0,) * self.n

    def base_id(self, i: int) -> int:
        return var_id(BASE, i)

    def fiber_id(self, j: int, alpha=None) -> int:
        return var_id(FIBER, j, self.zero_index() if alpha is None else alpha)

    def aux_id(self, family: int, j: int, alpha=None) -> int:
        return var_id(family, j, self.zero_index() if alpha is None else alpha)

    def volume_basis(self) -> tuple:
        return tuple(self.base_id(i) for i in range(self.n))
