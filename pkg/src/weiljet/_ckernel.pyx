# cython: language_level=3
"""Compiled twin of ``weiljet._pykernel``; same functions, same results."""

from fractions import Fraction

_Fraction = Fraction


cdef inline object _norm(object c):
    if type(c) is _Fraction and c.denominator == 1:
        return c.numerator
    return c


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i = 0, j = 0
    cdef tuple pa, pb
    cdef list out
    if la == 0:
        return b
    if lb == 0:
        return a
    out = []
    while i < la and j < lb:
        pa = <tuple>a[i]
        pb = <tuple>b[j]
        va = pa[0]
        vb = pb[0]
        if va == vb:
            out.append((va, <long>pa[1] + <long>pb[1]))
            i += 1
            j += 1
        elif va < vb:
            out.append(pa)
            i += 1
        else:
            out.append(pb)
            j += 1
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


cpdef bint mono_divides(tuple g, tuple m):
    cdef Py_ssize_t j = 0, lm = len(m), k, lg = len(g)
    cdef tuple pg, pm
    for k in range(lg):
        pg = <tuple>g[k]
        v = pg[0]
        while j < lm and (<tuple>m[j])[0] < v:
            j += 1
        if j == lm:
            return False
        pm = <tuple>m[j]
        if pm[0] != v or <long>pm[1] < <long>pg[1]:
            return False
        j += 1
    return True


cpdef bint in_ideal(tuple m, tuple gens):
    cdef tuple g
    for g in gens:
        if mono_divides(g, m):
            return True
    return False


cpdef dict mul_terms(dict ta, dict tb, tuple gens=()):
    cdef dict out = {}
    cdef tuple ma, mb, m
    cdef bint trunc = len(gens) > 0
    for ma, ca in ta.items():
        for mb, cb in tb.items():
            m = mono_mul(ma, mb)
            if trunc and in_ideal(m, gens):
                continue
            c = out.get(m)
            if c is None:
                out[m] = ca * cb
            else:
                out[m] = c + ca * cb
    return {m: _norm(c) for m, c in out.items() if c != 0}


cpdef dict add_terms(dict ta, dict tb, object scale=1):
    cdef dict out = dict(ta)
    for m, c in tb.items():
        v = out.get(m, 0) + scale * c
        if v == 0:
            out.pop(m, None)
        else:
            out[m] = _norm(v)
    return out


cpdef dict reduce_terms(dict terms, tuple gens):
    if not gens:
        return dict(terms)
    return {m: c for m, c in terms.items() if not in_ideal(m, gens)}
