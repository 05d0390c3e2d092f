"""Points of ``R^k (x) W``: one Weil-algebra element per coordinate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AlgebraMismatch
from .infinitesimal import (
    SimplicialInfObject,
    cube,
    degeneracy_hom,
    face_hom,
    nil,
    permutation_hom,
)
from .poly import Monomial, Polynomial, mono_exp, mono_exps
from .weil import (
    WeilAlgebra,
    WeilElement,
    WeilHom,
    algebra_from_json,
    algebra_to_json,
    element_from_json,
    element_to_json,
    hom_make,
)


@dataclass(frozen=True)
class CoordSpace:
    """``R^(base+fiber)``; the first ``base`` coordinates project to the base."""

    base: int
    fiber: int = 0

    @property
    def dim(self) -> int:
        return self.base + self.fiber


def coefficient_name(prefix: str, i: int, m: Monomial, nvars: int) -> str:
    """Name of the symbolic coefficient of ``m`` in coordinate ``i`` (0-based)."""
    return f"{prefix}{i + 1}_" + "".join(str(e) for e in mono_exps(m, nvars))


class ProlongedPoint:
    __slots__ = ("space", "algebra", "components")

    def __init__(self, space: CoordSpace, algebra: WeilAlgebra, components: Sequence[WeilElement]):
        if len(components) != space.dim:
            raise ValueError(f"need {space.dim} components, got {len(components)}")
        for c in components:
            if c.algebra != algebra:
                raise AlgebraMismatch("component lives in a different algebra")
        self.space = space
        self.algebra = algebra
        self.components = tuple(components)

    @classmethod
    def symbolic(cls, algebra: WeilAlgebra, base_point: Sequence, prefix: str = "g",
                 space: CoordSpace | None = None) -> "ProlongedPoint":
        """Generic point over ``base_point``: every non-unit coefficient a fresh symbol."""
        space = space or CoordSpace(len(base_point))
        comps = []
        for i, x in enumerate(base_point):
            coeffs = [x] + [
                Polynomial.symbol(coefficient_name(prefix, i, m, algebra.nvars))
                for m in algebra.basis[1:]
            ]
            comps.append(WeilElement(algebra, coeffs))
        return cls(space, algebra, comps)

    @property
    def point(self) -> tuple:
        return tuple(c.unit_coefficient for c in self.components)

    def base_part(self) -> "ProlongedPoint":
        return ProlongedPoint(CoordSpace(self.space.base), self.algebra, self.components[: self.space.base])

    @property
    def fiber_components(self) -> tuple:
        return self.components[self.space.base:]

    def __eq__(self, other):
        if not isinstance(other, ProlongedPoint):
            return NotImplemented
        return (
            self.space.dim == other.space.dim
            and self.algebra == other.algebra
            and all(a == b for a, b in zip(self.components, other.components))
        )

    def __hash__(self):
        return hash((self.space, self.algebra, self.components))

    def first_difference(self, other: "ProlongedPoint"):
        """``(coordinate, monomial, difference)`` of the first mismatch, or None."""
        for k, (a, b) in enumerate(zip(self.components, other.components)):
            for m, x, y in zip(self.algebra.basis, a.coeffs, b.coeffs):
                if x != y:
                    return k, m, x - y
        return None

    def __str__(self):
        return "(" + "; ".join(str(c) for c in self.components) + ")"

    def __repr__(self):
        return f"ProlongedPoint{self}"


def functor_apply(h: WeilHom, p: ProlongedPoint) -> ProlongedPoint:
    """``(id (x) h)(p)``."""
    if p.algebra != h.source:
        raise AlgebraMismatch("point does not live over the hom's source")
    return ProlongedPoint(p.space, h.target, [h.apply(c) for c in p.components])


def scale_element(alpha, i: int, x: WeilElement) -> WeilElement:
    coeffs = []
    for m, c in zip(x.algebra.basis, x.coeffs):
        e = mono_exp(m, i)
        coeffs.append(c * alpha ** e if e else c)
    return WeilElement(x.algebra, coeffs)


def scale_i(alpha, i: int, p: ProlongedPoint) -> ProlongedPoint:
    """Multiply each coefficient by ``alpha`` to the power of its ``X_(i+1)`` exponent (``i`` 0-based)."""
    if not 0 <= i < p.algebra.nvars:
        raise ValueError(f"axis {i} outside 0..{p.algebra.nvars - 1}")
    return ProlongedPoint(p.space, p.algebra, [scale_element(alpha, i, c) for c in p.components])


def _cube_order(alg: WeilAlgebra) -> int:
    if alg != cube(alg.nvars).algebra:
        raise AlgebraMismatch(f"{alg!r} is not the algebra of a cube D^n")
    return alg.nvars


def simplicial_s(p: ProlongedPoint, i: int) -> ProlongedPoint:
    """``s_i``: from ``D^n``-points to ``D^(n+1)``-points, ignoring slot ``i``."""
    return functor_apply(degeneracy_hom(_cube_order(p.algebra), i), p)


def simplicial_d(p: ProlongedPoint, i: int) -> ProlongedPoint:
    """``d_i``: from ``D^(n+1)``-points to ``D^n``-points, restricting to ``d_i = 0``."""
    return functor_apply(face_hom(_cube_order(p.algebra) - 1, i), p)


def permute(p: ProlongedPoint, sigma: Sequence[int]) -> ProlongedPoint:
    return functor_apply(permutation_hom(_cube_order(p.algebra), sigma), p)


def is_degenerate(p: ProlongedPoint, i: int | None = None) -> bool:
    """Whether ``p`` does not depend on slot ``i`` (any slot when ``i`` is None)."""
    n = _cube_order(p.algebra)
    slots = range(1, n + 1) if i is None else [i]
    return any(simplicial_s(simplicial_d(p, j), j) == p for j in slots)


def is_vertical(p: ProlongedPoint) -> bool:
    """Whether the base coordinates carry no infinitesimal part."""
    return all(all(c == 0 for c in x.coeffs[1:]) for x in p.components[: p.space.base])


def plus_hom(obj: SimplicialInfObject, order: int | None = None) -> WeilHom:
    """``W(D_order) -> W(obj)``, ``X -> X1 + ... + Xm``; ``order`` defaults to the dimension."""
    n = obj.dimension if order is None else order
    s = Polynomial({((i, 1),): 1 for i in range(obj.m)}, obj.m)
    return hom_make(nil(n).algebra, obj.algebra, [s], label="plus")


def plus_precompose(p: ProlongedPoint, obj: SimplicialInfObject) -> ProlongedPoint:
    """Precompose a ``D_n``-point with ``(d1..dm) -> d1 + ... + dm``."""
    if p.algebra.nvars != 1:
        raise AlgebraMismatch("plus_precompose expects a point over some W(D_n)")
    order = max(g[0][1] for g in p.algebra.ideal.gens) - 1
    return functor_apply(plus_hom(obj, order), p)


# -- JSON ----------------------------------------------------------------------


def point_to_json(p: ProlongedPoint) -> dict:
    return {
        "space": {"base": p.space.base, "fiber": p.space.fiber},
        "algebra": algebra_to_json(p.algebra),
        "components": [element_to_json(c)["coeffs"] for c in p.components],
    }


def point_from_json(d: dict) -> ProlongedPoint:
    alg = algebra_from_json(d["algebra"])
    space = CoordSpace(int(d["space"]["base"]), int(d["space"].get("fiber", 0)))
    comps = [element_from_json({"coeffs": c}, alg) for c in d["components"]]
    return ProlongedPoint(space, alg, comps)
