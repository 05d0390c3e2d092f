"""Jets modelled on the cubes ``D^n``.

A candidate is *pseudotangential* when it respects the base projection,
scaling along each axis (by scalars and by nilpotents) and permutations of
the axes.  It is *tangential* when in addition its successive projections
are tangential and it intertwines the map that multiplies the last two
coordinates.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import AlgebraMismatch
from ..infinitesimal import (
    MonomialMapping,
    SimplicialInfObject,
    axis_nilpotent_hom,
    cube,
    degeneracy_hom,
    face_hom,
    last_product_hom,
    monomial_mapping,
    nil,
    transposition,
)
from ..limits import standard_qcr
from ..linalg import Preimage
from ..poly import Polynomial
from ..prolong import ProlongedPoint, functor_apply, permute, scale_i
from ..report import Report, describe_difference
from ..weil import WeilElement, WeilHom
from .candidate import SECOND, JetCandidate

ALPHA = Polynomial.symbol("alpha")


def _require(nabla: JetCandidate, approach: str):
    if nabla.approach != approach:
        raise AlgebraMismatch(f"expected a {approach}-approach candidate, got {nabla.approach}")


def _compare(report: Report, name: str, lhs: ProlongedPoint, rhs: ProlongedPoint, detail=None):
    diff = lhs.first_difference(rhs)
    report.add(name, diff is None, describe_difference(diff), detail)


def nilpotent_orders(n: int) -> range:
    """Orders of the adjoined nilpotent used for the nilpotent-scaling checks.

    Output exponents along one axis never exceed ``n``, so a nilpotent whose
    ``(n+1)``-st power is the first to vanish separates every mismatch.
    """
    return range(1, max(n, 1) + 1)


def pseudo_conditions(nabla: JetCandidate, report: Report, prefix: str = "") -> None:
    """The four pseudotangential conditions, shared by both cube and line models.

    For the line model ``D_n`` there is one axis and no permutations.
    """
    alg = nabla.algebra
    gamma = nabla.generic_input()
    out = nabla(gamma)
    _compare(report, f"{prefix}projection", out.base_part(), gamma.base_part())
    axes = range(alg.nvars)
    for i in axes:
        _compare(
            report,
            f"{prefix}scaling axis {i + 1}",
            nabla(scale_i(ALPHA, i, gamma)),
            scale_i(ALPHA, i, out),
        )
    top = max((dict(mo).get(i, 0) for mo in alg.basis for i in axes), default=0)
    for i in axes:
        for order in nilpotent_orders(nabla.n):
            h = axis_nilpotent_hom(alg, i, order)
            lhs = nabla.apply_tensor(functor_apply(h, gamma), nil(order).algebra)
            rhs = functor_apply(h, out)
            _compare(
                report,
                f"{prefix}nilpotent scaling axis {i + 1} order {order}",
                lhs,
                rhs,
                {"max_axis_exponent": top, "nilpotent_order": order + 1},
            )
    if nabla.approach == SECOND:
        for i in range(1, nabla.n):
            sigma = transposition(nabla.n, i)
            _compare(
                report,
                f"{prefix}symmetry swap {i}<->{i + 1}",
                nabla(permute(gamma, sigma)),
                permute(out, sigma),
            )


def check_second(nabla: JetCandidate) -> Report:
    """Pseudotangential conditions for a cube-modelled candidate."""
    _require(nabla, SECOND)
    report = Report(f"pseudotangential on D^{nabla.n}")
    pseudo_conditions(nabla, report)
    return report


def _candidate_from_point(approach: str, n: int, base, fiber, point: ProlongedPoint,
                          m: int) -> JetCandidate:
    alg = point.algebra
    body = {}
    for j, comp in enumerate(point.components[m:]):
        for mo, c in zip(alg.basis[1:], comp.coeffs[1:]):
            body[(j, mo)] = c
    return JetCandidate(approach, n, base, fiber, body)


def project_second(nabla: JetCandidate) -> JetCandidate:
    """Restrict from ``D^n`` to ``D^(n-1)``: ``gamma -> d_n(nabla(s_n gamma))``."""
    _require(nabla, SECOND)
    if nabla.n == 0:
        raise ValueError("nothing below order 0")
    cached = nabla._cache.get("project")
    if cached is not None:
        return cached
    n = nabla.n - 1
    low = JetCandidate(SECOND, n, nabla.base, nabla.fiber)
    gamma = low.generic_input()
    lifted = functor_apply(degeneracy_hom(n, n + 1), gamma)
    out = functor_apply(face_hom(n, n + 1), nabla(lifted))
    proj = _candidate_from_point(SECOND, n, nabla.base, nabla.fiber, out, nabla.m)
    nabla._cache["project"] = proj
    return proj


def project_to(nabla: JetCandidate, k: int) -> JetCandidate:
    if not 0 <= k <= nabla.n:
        raise ValueError(f"cannot project order {nabla.n} to order {k}")
    proj = project_second if nabla.approach == SECOND else _project_third()
    while nabla.n > k:
        nabla = proj(nabla)
    return nabla


def _project_third():
    from .third import project_third

    return project_third


def simplicial_compatibility(nabla: JetCandidate) -> Report:
    """``s_i`` and ``d_i`` intertwine a candidate with its projection."""
    _require(nabla, SECOND)
    report = Report(f"face/degeneracy compatibility on D^{nabla.n}")
    if nabla.n == 0:
        return report
    low = project_second(nabla)
    n = nabla.n - 1
    g_low = low.generic_input()
    g_high = nabla.generic_input()
    for i in range(1, n + 2):
        s = degeneracy_hom(n, i)
        _compare(report, f"s{i}", nabla(functor_apply(s, g_low)), functor_apply(s, low(g_low)))
        d = face_hom(n, i)
        _compare(report, f"d{i}", functor_apply(d, nabla(g_high)), low(functor_apply(d, g_high)))
    return report


def check_second_tangential(nabla: JetCandidate) -> Report:
    """Pseudotangential at every order, plus last-product compatibility from order 2 up."""
    _require(nabla, SECOND)
    report = Report(f"tangential on D^{nabla.n}")
    current = nabla
    while True:
        n = current.n
        prefix = f"order {n}: "
        pseudo_conditions(current, report, prefix)
        if n < 2:
            break
        low = project_second(current)
        mu = last_product_hom(n - 1)
        gamma = low.generic_input()
        _compare(
            report,
            f"{prefix}last-product compatibility",
            current(functor_apply(mu, gamma)),
            functor_apply(mu, low(gamma)),
        )
        current = low
    return report


# -- induced maps on simplicial objects ------------------------------------------------


@lru_cache(maxsize=None)
def _restriction_data(obj: SimplicialInfObject):
    rep = standard_qcr(obj)
    if not rep.verdict.is_limit:
        raise ValueError(f"standard representation of {obj} is not a limit")
    homs = [pm.weil_hom() for pm in rep.pieces]
    rows = []
    for h in homs:
        rows.extend(h.matrix())
    return rep, homs, Preimage(rows)


def induced_map(nabla: JetCandidate, obj: SimplicialInfObject, gamma: ProlongedPoint) -> ProlongedPoint:
    """Extend a cube-modelled candidate to points over ``W(obj)``.

    Each piece ``D^k`` of the standard representation receives the order-``k``
    projection; the unique point over ``W(obj)`` restricting to all of them is
    found by exact elimination.
    """
    _require(nabla, SECOND)
    if obj.dimension > nabla.n:
        raise ValueError(f"{obj} has dimension {obj.dimension} > {nabla.n}")
    if gamma.algebra != obj.algebra:
        raise AlgebraMismatch("point does not live over the object's algebra")
    rep, homs, solver = _restriction_data(obj)
    outs = []
    for pm, h in zip(rep.pieces, homs):
        proj = project_to(nabla, pm.source.m)
        outs.append(proj(functor_apply(h, gamma)))
    comps = []
    for c in range(nabla.m + nabla.e):
        rhs = []
        for o in outs:
            rhs.extend(o.components[c].coeffs)
        comps.append(WeilElement(obj.algebra, solver.solve(rhs)))
    return ProlongedPoint(nabla.space, obj.algebra, comps)


def naturality(nabla: JetCandidate, mapping: MonomialMapping) -> Report:
    """Induced maps commute with pulling points back along ``mapping``."""
    report = Report(f"naturality along {mapping.source} -> {mapping.target}")
    h = mapping.weil_hom()
    gamma = ProlongedPoint.symbolic(mapping.target.algebra, nabla.base)
    lhs = induced_map(nabla, mapping.source, functor_apply(h, gamma))
    rhs = functor_apply(h, induced_map(nabla, mapping.target, gamma))
    _compare(report, f"{mapping.source} -> {mapping.target}", lhs, rhs)
    return report


def pair_product_factorization() -> list[MonomialMapping]:
    """``(d1,d2,d3) -> (d1d2, d1d3, d2d3)`` from ``D^3`` to ``D(3)``, in four steps.

    Each coordinate is doubled in turn (landing in objects where the two
    copies multiply to zero), then adjacent copies are multiplied.
    """
    from ..infinitesimal import brace, paren

    a = brace(4, [(1, 2)])
    b = brace(5, [(1, 2), (3, 4)])
    c = brace(6, [(1, 2), (3, 4), (5, 6)])
    return [
        monomial_mapping(cube(3), a, ["d1", "d1", "d2", "d3"]),
        monomial_mapping(a, b, ["d1", "d2", "d3", "d3", "d4"]),
        monomial_mapping(b, c, ["d1", "d2", "d3", "d4", "d5", "d5"]),
        monomial_mapping(c, paren(3), ["d1*d3", "d2*d5", "d4*d6"]),
    ]


def compose_mappings(first: MonomialMapping, second: MonomialMapping) -> WeilHom:
    """Pullback of ``second after first``."""
    return second.weil_hom().then(first.weil_hom())


# -- composition of jets --------------------------------------------------------------


def compose_jets(upper: JetCandidate, lower: JetCandidate) -> JetCandidate:
    """``upper after lower`` for a tower ``P -> E -> M``.

    ``lower`` lives on ``E -> M`` at ``(x, y)``; ``upper`` on ``P -> E`` at
    ``((x, y), z)``.  The result lives on ``P -> M`` at ``(x, (y, z))``.
    """
    if upper.approach != lower.approach or upper.n != lower.n:
        raise AlgebraMismatch("jets of different kinds")
    if upper.m != lower.m + lower.e:
        raise ValueError("upper jet's base is not the lower jet's total space")
    if any(a != b for a, b in zip(upper.base, lower.base + lower.fiber)):
        raise ValueError("upper jet does not sit over the lower jet's point")
    alg = lower.algebra
    subst = {}
    for j in range(lower.e):
        for mo in alg.basis[1:]:
            from .candidate import input_name

            subst[input_name(lower.m + j, mo, alg)] = lower.body[(j, mo)]
    body = dict(lower.body)
    for (j, mo), p in upper.body.items():
        body[(lower.e + j, mo)] = p.evaluate(subst, 0)
    return JetCandidate(lower.approach, lower.n, lower.base, lower.fiber + upper.fiber, body)
