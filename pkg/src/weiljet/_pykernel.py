"""Pure-Python sparse polynomial kernels.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
with every exponent positive.  A term map is a dict from monomial to a
nonzero exact coefficient.  ``_ckernel.pyx`` mirrors this module function for
function; ``weiljet.kernel`` picks one of the two at import.
"""

from __future__ import annotations

from fractions import Fraction


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    if i < la:
        out.extend(a[i:])
    if j < lb:
        out.extend(b[j:])
    return tuple(out)


def mono_divides(g: tuple, m: tuple) -> bool:
    j = 0
    lm = len(m)
    for v, e in g:
        while j < lm and m[j][0] < v:
            j += 1
        if j == lm or m[j][0] != v or m[j][1] < e:
            return False
        j += 1
    return True


def in_ideal(m: tuple, gens: tuple) -> bool:
    for g in gens:
        if mono_divides(g, m):
            return True
    return False


def mul_terms(ta: dict, tb: dict, gens: tuple = ()) -> dict:
    """Product of two term maps, dropping monomials that lie in ``gens``."""
    out: dict = {}
    get = out.get
    for ma, ca in ta.items():
        for mb, cb in tb.items():
            m = mono_mul(ma, mb)
            if gens and in_ideal(m, gens):
                continue
            c = get(m)
            out[m] = ca * cb if c is None else c + ca * cb
    return {m: _norm(c) for m, c in out.items() if c != 0}


def add_terms(ta: dict, tb: dict, scale=1) -> dict:
    """``ta + scale * tb``."""
    out = dict(ta)
    for m, c in tb.items():
        v = out.get(m, 0) + scale * c
        if v == 0:
            out.pop(m, None)
        else:
            out[m] = _norm(v)
    return out


def reduce_terms(terms: dict, gens: tuple) -> dict:
    """Delete every term whose monomial lies in the ideal spanned by ``gens``."""
    if not gens:
        return dict(terms)
    return {m: c for m, c in terms.items() if not in_ideal(m, gens)}
