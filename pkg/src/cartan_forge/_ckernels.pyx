# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels`` (same data layout, same results)."""

cdef Py_ssize_t ONE = -1
cdef Py_ssize_t ZERO = -2


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i = 0, j = 0, k = 0
    cdef Py_ssize_t va, vb
    if la == 0:
        return b
    if lb == 0:
        return a
    cdef list out = [None] * (la + lb)
    while i < la and j < lb:
        va = <Py_ssize_t>a[i]
        vb = <Py_ssize_t>b[j]
        if va < vb:
            out[k] = a[i]
            out[k + 1] = a[i + 1]
            i += 2
        elif vb < va:
            out[k] = b[j]
            out[k + 1] = b[j + 1]
            j += 2
        else:
            out[k] = a[i]
            out[k + 1] = <Py_ssize_t>a[i + 1] + <Py_ssize_t>b[j + 1]
            i += 2
            j += 2
        k += 2
    while i < la:
        out[k] = a[i]
        i += 1
        k += 1
    while j < lb:
        out[k] = b[j]
        j += 1
        k += 1
    return tuple(out[:k])


cpdef tuple mono_mul_var(tuple m, Py_ssize_t v):
    cdef Py_ssize_t n = len(m), i = 0, k = 0, w
    cdef bint placed = False
    cdef list out = [None] * (n + 2)
    while i < n:
        w = <Py_ssize_t>m[i]
        if not placed:
            if w == v:
                out[k] = m[i]
                out[k + 1] = <Py_ssize_t>m[i + 1] + 1
                k += 2
                i += 2
                placed = True
                continue
            if v < w:
                out[k] = v
                out[k + 1] = 1
                k += 2
                placed = True
        out[k] = m[i]
        out[k + 1] = m[i + 1]
        k += 2
        i += 2
    if not placed:
        out[k] = v
        out[k + 1] = 1
        k += 2
    return tuple(out[:k])


cpdef tuple mono_drop(tuple m, Py_ssize_t pos):
    cdef Py_ssize_t e = m[pos + 1]
    if e == 1:
        return m[:pos] + m[pos + 2:]
    return m[:pos + 1] + (e - 1,) + m[pos + 2:]


cdef inline void _acc(dict out, object m, object x):
    y = out.get(m)
    if y is None:
        out[m] = x
    else:
        y = y + x
        if y:
            out[m] = y
        else:
            del out[m]


cpdef dict poly_iadd(dict acc, dict b, object c=None):
    if c is None:
        for m, x in b.items():
            _acc(acc, m, x)
    else:
        if not c:
            return acc
        for m, x in b.items():
            _acc(acc, m, x * c)
    return acc


cpdef dict poly_add(dict a, dict b):
    cdef dict out = dict(a)
    poly_iadd(out, b)
    return out


cpdef dict poly_sub(dict a, dict b):
    cdef dict out = dict(a)
    poly_iadd(out, b, -1)
    return out


cpdef dict poly_scale(dict a, object c):
    if not c:
        return {}
    return {m: x * c for m, x in a.items()}


cpdef dict poly_mul(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    for ma, xa in a.items():
        for mb, xb in b.items():
            _acc(out, mono_mul(<tuple>ma, <tuple>mb), xa * xb)
    return out


cpdef dict poly_pow(dict a, Py_ssize_t e):
    cdef dict out = {(): 1}
    cdef dict base = a
    while e:
        if e & 1:
            out = poly_mul(out, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return out


cpdef dict poly_partial(dict a, Py_ssize_t v):
    cdef dict out = {}
    cdef tuple m
    cdef Py_ssize_t i, n, w
    for mo, x in a.items():
        m = <tuple>mo
        n = len(m)
        i = 0
        while i < n:
            w = m[i]
            if w == v:
                _acc(out, mono_drop(m, i), x * m[i + 1])
                break
            if w > v:
                break
            i += 2
    return out


cpdef dict poly_total_derivative(dict a, Py_ssize_t k, object shift):
    cdef dict out = {}
    cdef tuple m, nm
    cdef Py_ssize_t i, n, s
    for mo, x in a.items():
        m = <tuple>mo
        n = len(m)
        i = 0
        while i < n:
            s = shift(m[i], k)
            if s != ZERO:
                nm = mono_drop(m, i)
                if s != ONE:
                    nm = mono_mul_var(nm, s)
                _acc(out, nm, x * m[i + 1])
            i += 2
    return out


cpdef set poly_vars(dict a):
    cdef set out = set()
    for m in a:
        out.update((<tuple>m)[0::2])
    return out


cpdef dict poly_substitute(dict a, dict values):
    cdef dict powers = {}
    cdef dict out = {}
    cdef dict term
    cdef tuple m
    cdef Py_ssize_t i, n
    for mo, x in a.items():
        m = <tuple>mo
        n = len(m)
        kept = []
        factors = []
        i = 0
        while i < n:
            v = m[i]
            if v in values:
                factors.append((v, m[i + 1]))
            else:
                kept.append(v)
                kept.append(m[i + 1])
            i += 2
        if not factors:
            _acc(out, m, x)
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


cpdef tuple basis_normalize(object seq, list keys):
    cdef list items = list(seq)
    cdef Py_ssize_t n = len(items), i, j
    cdef int sign = 1
    for i in range(1, n):
        j = i
        while j > 0:
            p = items[j - 1]
            q = items[j]
            if p == q:
                return 0, None
            if keys[q] < keys[p]:
                items[j - 1] = q
                items[j] = p
                sign = -sign
                j -= 1
            else:
                break
    return sign, tuple(items)


cpdef tuple basis_merge(tuple a, tuple b, list keys):
    cdef Py_ssize_t la = len(a), lb = len(b), i = 0, j = 0, inversions = 0
    if la == 0:
        return 1, b
    if lb == 0:
        return 1, a
    cdef list out = []
    while i < la and j < lb:
        x = a[i]
        y = b[j]
        if x == y:
            return 0, None
        if keys[y] < keys[x]:
            out.append(y)
            inversions += la - i
            j += 1
        else:
            out.append(x)
            i += 1
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return (-1 if inversions & 1 else 1), tuple(out)


cpdef dict form_iadd(dict acc, dict b, object c=None):
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


cpdef dict form_wedge(dict f, dict g, list keys):
    cdef dict out = {}
    cdef dict prod
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
