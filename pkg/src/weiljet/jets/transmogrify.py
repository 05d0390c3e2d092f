"""Maps between the three models of jets.

``phi`` turns a holonomic tower of iterated 1-jets into a cube-modelled jet.
It is computed once, universally, as polynomials in the tower's coordinate
symbols: order ``n+1`` is obtained from order ``n`` by letting the order-``n``
data move infinitesimally along the last axis, as dictated by the top level
of the tower.

``psi`` turns a cube-modelled jet into a line-modelled one by precomposing
with ``(d1..dn) -> d1 + ... + dn`` and reading off the symmetric part.
"""

from __future__ import annotations

import math
from functools import lru_cache

from ..errors import Inconsistent, NotHolonomic
from ..infinitesimal import cube, nil
from ..linalg import Preimage
from ..poly import Polynomial
from ..prolong import ProlongedPoint, functor_apply, plus_hom
from ..weil import WeilElement
from .candidate import SECOND, THIRD, JetCandidate, input_name
from .first import HOLONOMIC, FirstApproachTower, check_first, coordinate_names
from .second import _require


@lru_cache(maxsize=None)
def universal_phi(m: int, e: int, n: int) -> dict:
    """Body of ``phi`` at order ``n`` in the symbols of ``coordinate_names(e, m, n)``.

    Keys are ``(fiber index, cube monomial)``; values are named polynomials in
    those symbols and the input coefficients ``g<i>_<exponents>``.
    """
    if n == 0:
        return {}
    prev = universal_phi(m, e, n - 1)
    low = cube(n - 1).algebra
    high = cube(n).algebra
    line = nil(1).algebra
    last = ((n - 1, 1),)
    v = [Polynomial.symbol(input_name(a, last, high)) for a in range(m)]
    coords = coordinate_names(e, m, n - 1)
    values = {}
    velocity = {}
    for r, name in enumerate(coords):
        vel = Polynomial.zero()
        for b in range(m):
            vel = vel + Polynomial.symbol(f"B{n}_{r + 1}_{b + 1}") * v[b]
        velocity[r] = vel
        values[name] = WeilElement(line, (Polynomial.symbol(name), vel))
    for a in range(m):
        for mo in low.basis[1:]:
            values[input_name(a, mo, low)] = WeilElement(
                line,
                (
                    Polynomial.symbol(input_name(a, mo, high)),
                    Polynomial.symbol(input_name(a, mo + last, high)),
                ),
            )
    body = {}
    for j in range(e):
        body[(j, last)] = velocity[j]
    for (j, mo), p in prev.items():
        w = p.evaluate(values, line.zero())
        if not isinstance(w, WeilElement):
            w = line.scalar(w)
        body[(j, mo)] = w.coeffs[0]
        body[(j, mo + last)] = w.coeffs[1]
    return body


def phi(tower: FirstApproachTower, n: int | None = None, strict: bool = True) -> JetCandidate:
    """Cube-modelled jet of order ``n`` (default: the tower's order) from a tower."""
    n = tower.order if n is None else n
    if n > tower.order:
        raise ValueError(f"tower has order {tower.order} < {n}")
    t = tower.truncate(n)
    if strict:
        verdict, report = check_first(t)
        if verdict != HOLONOMIC:
            raise NotHolonomic(f"tower is {verdict}: {', '.join(report.failed())}")
    values = t.assignment(n)
    body = {k: p.evaluate(values, 0) for k, p in universal_phi(t.m, t.e, n).items()}
    return JetCandidate(SECOND, n, t.base, t.fiber, body)


def _square_free(k: int) -> tuple:
    return tuple((i, 1) for i in range(k))


def psi(nabla: JetCandidate) -> JetCandidate:
    """Line-modelled jet from a cube-modelled one.

    The coefficient of ``d^k`` is the coefficient of ``X1...Xk`` in the image of
    the precomposed generic point, divided by ``k!``; every other square-free
    monomial of degree ``k`` must carry the same coefficient.
    """
    _require(nabla, SECOND)
    n = nabla.n
    line = nil(n).algebra
    cubealg = cube(n).algebra
    gamma = ProlongedPoint.symbolic(line, nabla.base)
    delta = nabla(functor_apply(plus_hom(cube(n), n), gamma))
    body = {}
    for j, comp in enumerate(delta.fiber_components):
        for k in range(1, n + 1):
            ref = comp.coefficient(_square_free(k))
            for mo in cubealg.basis:
                if len(mo) == k and comp.coefficient(mo) != ref:
                    raise Inconsistent(
                        f"image is not symmetric: fiber {j + 1} differs at degree {k}"
                    )
            body[(j, ((0, k),))] = ref / math.factorial(k) if isinstance(ref, Polynomial) else \
                Polynomial.constant(ref) / math.factorial(k)
    return JetCandidate(THIRD, n, nabla.base, nabla.fiber, body)


def psi_by_elimination(nabla: JetCandidate) -> JetCandidate:
    """``psi`` computed by solving against the whole plus-map matrix instead."""
    _require(nabla, SECOND)
    n = nabla.n
    line = nil(n).algebra
    h = plus_hom(cube(n), n)
    solver = Preimage(h.matrix())
    gamma = ProlongedPoint.symbolic(line, nabla.base)
    delta = nabla(functor_apply(h, gamma))
    body = {}
    for j, comp in enumerate(delta.fiber_components):
        coeffs = solver.solve(comp.coeffs)
        for mo, c in zip(line.basis[1:], coeffs[1:]):
            body[(j, mo)] = c
    return JetCandidate(THIRD, n, nabla.base, nabla.fiber, body)
