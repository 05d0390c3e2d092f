"""Iterated first-order jets.

Level ``k`` of a tower is a 1-tangential over ``J^(k-1) -> M``; since those
are linear, it is a matrix with one row per fiber coordinate of ``J^(k-1)``
and one column per base direction.  Fiber coordinates of ``J^k`` are listed
as ``y``, then the entries of level 1, ..., level ``k`` (row-major).
"""

from __future__ import annotations

from typing import Sequence

from ..infinitesimal import cube, face_hom
from ..poly import Polynomial
from ..prolong import CoordSpace, ProlongedPoint, functor_apply, permute
from ..report import Report, describe_difference
from ..weil import hom_make
from .candidate import SECOND, JetCandidate
from .second import pseudo_conditions

HOLONOMIC = "holonomic"
SEMI_HOLONOMIC = "semi-holonomic"
NON_HOLONOMIC = "non-holonomic"
INVALID = "invalid"


def fiber_dim(e: int, m: int, k: int) -> int:
    """Fiber dimension of ``J^k`` over ``M``."""
    return e * (1 + m) ** k


def coordinate_names(e: int, m: int, k: int) -> list[str]:
    """Symbols for the fiber coordinates of ``J^k``: ``y<j>`` and ``B<level>_<row>_<col>``."""
    names = [f"y{j + 1}" for j in range(e)]
    for level in range(1, k + 1):
        rows = fiber_dim(e, m, level - 1)
        names += [f"B{level}_{r + 1}_{b + 1}" for r in range(rows) for b in range(m)]
    return names


class FirstApproachTower:
    def __init__(self, base: Sequence, fiber: Sequence, levels: Sequence):
        self.base = tuple(base)
        self.fiber = tuple(fiber)
        self.levels = []
        for k, mat in enumerate(levels, start=1):
            rows = fiber_dim(self.e, self.m, k - 1)
            mat = [tuple(row) for row in mat]
            if len(mat) != rows or any(len(row) != self.m for row in mat):
                raise ValueError(f"level {k} must be a {rows} x {self.m} matrix")
            self.levels.append(tuple(mat))

    @property
    def m(self) -> int:
        return len(self.base)

    @property
    def e(self) -> int:
        return len(self.fiber)

    @property
    def order(self) -> int:
        return len(self.levels)

    def truncate(self, k: int) -> "FirstApproachTower":
        return FirstApproachTower(self.base, self.fiber, self.levels[:k])

    def coordinates(self, k: int | None = None) -> list:
        """Fiber coordinate values of the underlying point of ``J^k``."""
        k = self.order if k is None else k
        vals = list(self.fiber)
        for mat in self.levels[:k]:
            vals += [x for row in mat for x in row]
        return vals

    def assignment(self, k: int | None = None) -> dict:
        k = self.order if k is None else k
        return dict(zip(coordinate_names(self.e, self.m, k), self.coordinates(k)))

    def level_candidate(self, k: int) -> JetCandidate:
        """Level ``k`` as a 1-tangential on ``J^(k-1) -> M`` (a linear candidate on ``D``)."""
        mat = self.levels[k - 1]
        x1 = ((0, 1),)
        body = {}
        for r, row in enumerate(mat):
            acc = Polynomial.zero()
            for b, c in enumerate(row):
                acc = acc + Polynomial.symbol(f"g{b + 1}_1") * c
            body[(r, x1)] = acc
        return JetCandidate(SECOND, 1, self.base, self.coordinates(k - 1), body)

    def with_entry(self, k: int, row: int, col: int, delta) -> "FirstApproachTower":
        levels = [list(map(list, mat)) for mat in self.levels]
        levels[k - 1][row][col] = levels[k - 1][row][col] + delta
        return FirstApproachTower(self.base, self.fiber, levels)

    def __eq__(self, other):
        return (
            isinstance(other, FirstApproachTower)
            and self.base == other.base
            and all(a == b for a, b in zip(self.fiber, other.fiber))
            and len(self.levels) == len(other.levels)
            and all(
                all(x == y for r1, r2 in zip(a, b) for x, y in zip(r1, r2))
                for a, b in zip(self.levels, other.levels)
            )
        )

    __hash__ = None

    def __repr__(self):
        return f"FirstApproachTower(m={self.m}, e={self.e}, order={self.order})"


def tower_from_section(s, k: int) -> FirstApproachTower:
    """Holonomic tower of order ``k``: level ``l`` differentiates the coordinates of ``j^(l-1) s``."""
    h = s.displacement_names()
    at_zero = {name: 0 for name in h}
    funcs = [s.taylor(j) for j in range(s.e)]
    levels = []
    for _ in range(k):
        derivs = [[f.diff(hb) for hb in h] for f in funcs]
        levels.append([[d.evaluate(at_zero, 0) for d in row] for row in derivs])
        funcs = funcs + [d for row in derivs for d in row]
    return FirstApproachTower(s.base, s.value, levels)


# -- checks ---------------------------------------------------------------------


def _ev_lift(tower: FirstApproachTower, k: int, moving: list, inner: list, alg2):
    """Evaluate a moving point of ``J^(k-1)`` on a moving tangent.

    ``moving`` holds the fiber coordinates of ``J^(k-1)`` and ``inner`` the
    ``X1``-coefficients of the tangent, both already as elements of the
    two-axis algebra (the motion along ``X2``).  Returns fiber coordinates of
    ``J^(k-2)`` as elements of the same algebra.
    """
    m, e = tower.m, tower.e
    rows = fiber_dim(e, m, k - 2)
    x1 = alg2.var(0)
    out = []
    for r in range(rows):
        acc = moving[r]
        for b in range(m):
            acc = acc + x1 * moving[rows + r * m + b] * inner[b]
        out.append(acc)
    return out


def holonomy_composites(tower: FirstApproachTower, k: int) -> tuple[ProlongedPoint, ProlongedPoint]:
    """The two composites whose agreement makes level ``k`` holonomic.

    Both start from a generic point ``gamma`` over ``D^2``.  The first feeds
    ``gamma`` restricted to the first axis into level ``k`` and evaluates the
    resulting moving point of ``J^(k-1)`` on the swapped ``gamma``; the
    second uses the second axis and swaps afterwards.
    """
    m = tower.m
    alg2 = cube(2).algebra
    alg1 = cube(1).algebra
    gamma = ProlongedPoint.symbolic(alg2, tower.base)
    lift = hom_make(alg1, alg2, [Polynomial.variable(1, 2)])
    level = tower.level_candidate(k)

    def one(restrict_slot: int, u: ProlongedPoint) -> ProlongedPoint:
        t = functor_apply(face_hom(1, restrict_slot), gamma)
        moving = [lift.apply(c) for c in level(t).fiber_components]
        inner = []
        for comp in u.components:
            p = comp.coefficient(((0, 1),))
            r = comp.coefficient(((0, 1), (1, 1)))
            inner.append(alg2.from_terms({(): p, ((1, 1),): r}))
        fibers = _ev_lift(tower, k, moving, inner, alg2)
        space = CoordSpace(m, len(fibers))
        return ProlongedPoint(space, alg2, list(u.components) + fibers)

    first = one(2, permute(gamma, [2, 1]))
    second = permute(one(1, gamma), [2, 1])
    return first, second


def relatedness(tower: FirstApproachTower, k: int) -> tuple[ProlongedPoint, ProlongedPoint]:
    """Level ``k`` pushed down to ``J^(k-2)`` versus level ``k-1``, on a generic tangent."""
    t = ProlongedPoint.symbolic(cube(1).algebra, tower.base)
    upper = tower.level_candidate(k)(t)
    keep = tower.m + fiber_dim(tower.e, tower.m, k - 2)
    pushed = ProlongedPoint(CoordSpace(tower.m, keep - tower.m), upper.algebra, upper.components[:keep])
    return pushed, tower.level_candidate(k - 1)(t)


def check_first(tower: FirstApproachTower) -> tuple[str, Report]:
    """Classify a tower as holonomic, semi-holonomic, non-holonomic (or invalid)."""
    report = Report(f"first-approach tower of order {tower.order}")
    for k in range(1, tower.order + 1):
        pseudo_conditions(tower.level_candidate(k), report, f"level {k}: ")
    valid = report.passed
    related = True
    holonomic = True
    for k in range(2, tower.order + 1):
        a, b = relatedness(tower, k)
        diff = a.first_difference(b)
        report.add(f"level {k}: related to level {k - 1}", diff is None, describe_difference(diff))
        related = related and diff is None
        a, b = holonomy_composites(tower, k)
        diff = a.first_difference(b)
        report.add(f"level {k}: holonomy composites agree", diff is None, describe_difference(diff))
        holonomic = holonomic and diff is None
    if not valid:
        verdict = INVALID
    elif not related:
        verdict = NON_HOLONOMIC
    elif not holonomic:
        verdict = SEMI_HOLONOMIC
    else:
        verdict = HOLONOMIC
    return verdict, report
