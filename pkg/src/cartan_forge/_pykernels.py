"""Pure-Python hot kernels for sparse differential polynomials and wedge bases.

Representation shared with the compiled twin ``_ckernels``:

* a monomial is a flat tuple ``(v0, e0, v1, e1, ...)`` of variable ids and
  positive exponents, sorted by id; ``()`` is the constant monomial;
* a polynomial is a ``dict`` mapping monomials to non-zero rational
  coefficients;
* a wedge basis is a tuple of variable ids (covectors share ids with the
  variables they differentiate) sorted by their keys in ``keys``.

All functions return fresh dicts and never mutate their inputs, except
``poly_iadd`` which accumulates into its first argument.
"""

ONE = -1
ZERO = -2


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, vb = a[i], b[j]
        if va < vb:
            out.append(va)
            out.append(a[i + 1])
            i += 2
        elif vb < va:
            out.append(vb)
            out.append(b[j + 1])
            j += 2
        else:
            out.append(va)
            out.append(a[i + 1] + b[j + 1])
            i += 2
            j += 2
    if i < la:
        out.extend(a[i:])
    if j < lb:
        out.extend(b[j:])
    return tuple(out)


def mono_mul_var(m, v):
    """Multiply monomial ``m`` by a single variable ``v``."""
    out = []
    placed = False
    for i in range(0, len(m), 2):
        w = m[i]
        if not placed:
            if w == v:
                out.append(w)
                out.append(m[i + 1] + 1)
                placed = True
                continue
            if v < w:
                out.append(v)
                out.append(1)
                placed = True
        out.append(w)
        out.append(m[i + 1])
    if not placed:
        out.append(v)
        out.append(1)
    return tuple(out)


def mono_drop(m, pos):
    """Lower the exponent stored at flat position ``pos`` by one."""
    e = m[pos + 1]
    if e == 1:
        return m[:pos] + m[pos + 2:]
    return m[:pos + 1] + (e - 1,) + m[pos + 2:]


def poly_iadd(acc, b, c=None):
    if c is None:
        for m, x in b.items():
            y = acc.get(m)
            if y is None:
                acc[m] = x
            else:
                y = y + x
                if y:
                    acc[m] = y
                else:
                    del acc[m]
    else:
        if not c:
            return acc
        for m, x in b.items():
            x = x * c
            y = acc.get(m)
            if y is None:
                acc[m] = x
            else:
                y = y + x
                if y:
                    acc[m] = y
                else:
                    del acc[m]
    return acc


def poly_add(a, b):
    out = dict(a)
    poly_iadd(out, b)
    return out


def poly_sub(a, b):
    out = dict(a)
    poly_iadd(out, b, -1)
    return out


def poly_scale(a, c):
    if not c:
        return {}
    return {m: x * c for m, x in a.items()}


def poly_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ma, xa in a.items():
        for mb, xb in b.items():
            m = mono_mul(ma, mb)
            x = xa * xb
            y = out.get(m)
            if y is None:
                out[m] = x
            else:
                y = y + x
                if y:
                    out[m] = y
                else:
                    del out[m]
    return out


def poly_pow(a, e):
    out = {(): 1}
    base = a
    while e:
        if e & 1:
            out = poly_mul(out, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return out


def poly_partial(a, v):
    out = {}
    for m, x in a.items():
        for i in range(0, len(m), 2):
            if m[i] == v:
                e = m[i + 1]
                nm = mono_drop(m, i)
                y = out.get(nm)
                x2 = x * e
                if y is None:
                    out[nm] = x2
                else:
                    y = y + x2
                    if y:
                        out[nm] = y
                    else:
                        del out[nm]
                break
            if m[i] > v:
                break
    return out


def poly_total_derivative(a, k, shift):
    """Total derivative in direction ``k``; ``shift(v, k)`` gives the id of
    D_k(v), or ONE / ZERO for base variables."""
    out = {}
    for m, x in a.items():
        for i in range(0, len(m), 2):
            s = shift(m[i], k)
            if s == ZERO:
                continue
            e = m[i + 1]
            nm = mono_drop(m, i)
            if s != ONE:
                nm = mono_mul_var(nm, s)
            x2 = x * e
            y = out.get(nm)
            if y is None:
                out[nm] = x2
            else:
                y = y + x2
                if y:
                    out[nm] = y
                else:
                    del out[nm]
    return out


def poly_vars(a):
    out = set()
    for m in a:
        out.update(m[0::2])
    return out


def poly_substitute(a, values):
    """Simultaneously replace variables by polynomials (``values``: id -> poly)."""
    powers = {}
    out = {}
    for m, x in a.items():
        kept = []
        factors = []
        for i in range(0, len(m), 2):
            v = m[i]
            if v in values:
                factors.append((v, m[i + 1]))
            else:
                kept.append(v)
                kept.append(m[i + 1])
        if not factors:
            y = out.get(m)
            if y is None:
                out[m] = x
            else:
                y = y + x
                if y:
                    out[m] = y
                else:
                    del out[m]
            continue
        term = {tuple(kept): x}
        for f in factors:
            p = powers.get(f)
            if p is None:
                p = poly_pow(values[f[0]], f[1])
                powers[f] = p
            term = poly_mul(term, p)
            if not term:
                break
        poly_iadd(out, term)
    return out


def basis_normalize(seq, keys):
    """Sort a sequence of covector ids; returns (sign, basis) or (0, None)."""
    items = list(seq)
    n = len(items)
    sign = 1
    for i in range(1, n):
        j = i
        while j > 0:
            p, q = items[j - 1], items[j]
            if p == q:
                return 0, None
            if keys[q] < keys[p]:
                items[j - 1], items[j] = q, p
                sign = -sign
                j -= 1
            else:
                break
    return sign, tuple(items)


def basis_merge(a, b, keys):
    """Wedge of two sorted bases; returns (sign, basis) or (0, None)."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    inversions = 0
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            return 0, None
        if keys[y] < keys[x]:
            out.append(y)
            inversions += la - i
            j += 1
        else:
            out.append(x)
            i += 1
    if i < la:
        out.extend(a[i:])
    if j < lb:
        out.extend(b[j:])
    return (-1 if inversions & 1 else 1), tuple(out)


def form_iadd(acc, b, c=None):
    for basis, p in b.items():
        cur = acc.get(basis)
        if cur is None:
            q = dict(p) if c is None else poly_scale(p, c)
            if q:
                acc[basis] = q
        else:
            poly_iadd(cur, p, c)
            if not cur:
                del acc[basis]
    return acc


def form_wedge(f, g, keys):
    out = {}
    for ba, pa in f.items():
        for bb, pb in g.items():
            sign, basis = basis_merge(ba, bb, keys)
            if not sign:
                continue
            prod = poly_mul(pa, pb)
            if not prod:
                continue
            cur = out.get(basis)
            if cur is None:
                out[basis] = prod if sign > 0 else poly_scale(prod, -1)
            else:
                poly_iadd(cur, prod, None if sign > 0 else -1)
                if not cur:
                    del out[basis]
    return out
