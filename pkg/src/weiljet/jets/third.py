"""Jets modelled on the lines ``D_n = {d : d^(n+1) = 0}``."""

from __future__ import annotations

from functools import lru_cache

from ..infinitesimal import all_simple_polys, nil, nil_to_product_hom
from ..linalg import Preimage
from ..prolong import ProlongedPoint, functor_apply
from ..report import Report
from .candidate import THIRD, JetCandidate
from .second import _compare, _require, pseudo_conditions, project_to


def check_third(nabla: JetCandidate) -> Report:
    """Projection, scalar scaling and nilpotent scaling of the line parameter."""
    _require(nabla, THIRD)
    report = Report(f"pseudotangential on D_{nabla.n}")
    pseudo_conditions(nabla, report)
    return report


@lru_cache(maxsize=None)
def _product_solver(n: int):
    h = nil_to_product_hom(n)
    return h, Preimage(h.matrix())


def project_third(nabla: JetCandidate) -> JetCandidate:
    """Order ``n`` to order ``n-1`` through ``D_n x D_(n-1) -> D_(n-1)``, ``(d, d') -> d d'``.

    A point over ``D_(n-1)`` is pulled back along the product, fed to the
    candidate with the second factor as a passive parameter, and the result
    is pulled back down; the last step is an exact preimage computation.
    """
    _require(nabla, THIRD)
    if nabla.n == 0:
        raise ValueError("nothing below order 0")
    cached = nabla._cache.get("project")
    if cached is not None:
        return cached
    n = nabla.n - 1
    low_alg = nil(n).algebra
    h, solver = _product_solver(n)
    gamma = ProlongedPoint.symbolic(low_alg, nabla.base)
    up = functor_apply(h, gamma)
    image = nabla.apply_tensor(up, low_alg)
    body = {}
    for j, comp in enumerate(image.components[nabla.m:]):
        coeffs = solver.solve(comp.coeffs)
        for mo, c in zip(low_alg.basis[1:], coeffs[1:]):
            body[(j, mo)] = c
    proj = JetCandidate(THIRD, n, nabla.base, nabla.fiber, body)
    nabla._cache["project"] = proj
    return proj


def check_third_tangential(nabla: JetCandidate) -> Report:
    """Pseudotangential at every order and compatible with every simple polynomial."""
    _require(nabla, THIRD)
    report = Report(f"tangential on D_{nabla.n}")
    current = nabla
    while True:
        n = current.n
        prefix = f"order {n}: "
        pseudo_conditions(current, report, prefix)
        if n < 2:
            break
        for rho in all_simple_polys(n):
            l = rho.dim
            low = project_to(current, l)
            h = rho.hom()
            gamma = ProlongedPoint.symbolic(nil(l).algebra, current.base)
            _compare(
                report,
                f"{prefix}simple polynomial {rho}",
                current(functor_apply(h, gamma)),
                functor_apply(h, low(gamma)),
            )
        current = project_third(current)
    return report
