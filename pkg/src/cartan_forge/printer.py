"""Canonical text for expressions and forms (re-parseable by ``parser``)."""

from __future__ import annotations

from .jet import AUX_NAMES, AUX_PHI, BASE, FIBER, TABLE, JetSpace


def subscript(space: JetSpace, alpha) -> str:
    return "".join(space.independent[k] * a for k, a in enumerate(alpha))


def aux_label(space: JetSpace, kind: int, j: int) -> str:
    fam = AUX_NAMES[kind]
    if kind == AUX_PHI:
        return f"{fam}[{space.dependent[j]}]"
    return f"{fam}[{j + 1}]"


def format_var(space: JetSpace, vid: int) -> str:
    kind, j, order, alpha = TABLE.keys[vid]
    if kind == BASE:
        return space.independent[j]
    head = space.dependent[j] if kind == FIBER else aux_label(space, kind, j)
    if order == 0:
        return head
    return f"{head}_{{{subscript(space, alpha)}}}"


def format_covector(space: JetSpace, vid: int) -> str:
    kind, j, order, alpha = TABLE.keys[vid]
    if kind == BASE:
        return "d" + space.independent[j]
    head = space.dependent[j] if kind == FIBER else aux_label(space, kind, j)
    if order == 0:
        return f"th[{head}]"
    return f"th[{head};{subscript(space, alpha)}]"


def format_rational(c) -> str:
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def monomial_sort_key(m: tuple):
    keys = TABLE.keys
    pairs = tuple(sorted((keys[m[i]], m[i + 1]) for i in range(0, len(m), 2)))
    return (sum(m[1::2]), pairs)


def _format_monomial(space, m, c) -> tuple[bool, str]:
    """Returns (negative, text) for the term c * m."""
    neg = c < 0
    a = -c if neg else c
    factors = []
    keys = TABLE.keys
    pairs = sorted(((m[i], m[i + 1]) for i in range(0, len(m), 2)), key=lambda p: keys[p[0]])
    for v, e in pairs:
        name = format_var(space, v)
        factors.append(name if e == 1 else f"{name}^{e}")
    if a != 1 or not factors:
        factors.insert(0, format_rational(a))
    return neg, "*".join(factors)


def format_poly(space: JetSpace, poly: dict) -> str:
    if not poly:
        return "0"
    parts = []
    for m in sorted(poly, key=monomial_sort_key):
        neg, text = _format_monomial(space, m, poly[m])
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append((" - " if neg else " + ") + text)
    return "".join(parts)


def format_expr(e) -> str:
    return format_poly(e.space, e.poly)


def basis_sort_key(basis: tuple):
    return (len(basis), tuple(TABLE.keys[v] for v in basis))


def format_terms(space: JetSpace, terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for basis in sorted(terms, key=basis_sort_key):
        poly = terms[basis]
        cov = "&".join(format_covector(space, v) for v in basis)
        if len(poly) == 1:
            (m, c), = poly.items()
            neg, text = _format_monomial(space, m, c)
            if cov:
                text = cov if text == "1" else f"{text}*{cov}"
        else:
            neg = False
            text = format_poly(space, poly)
            if cov:
                text = f"({text})*{cov}"
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append((" - " if neg else " + ") + text)
    return "".join(parts)
