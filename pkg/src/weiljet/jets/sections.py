"""Taylor data of a local section and the jets it induces."""

from __future__ import annotations

import itertools
import math
from typing import Mapping, Sequence

from ..poly import Polynomial
from ..weil import WeilElement
from .candidate import SECOND, THIRD, JetCandidate, candidate_algebra


def multi_indices(m: int, max_order: int) -> list[tuple[int, ...]]:
    out = []
    for total in range(max_order + 1):
        for combo in itertools.combinations_with_replacement(range(m), total):
            a = [0] * m
            for i in combo:
                a[i] += 1
            out.append(tuple(a))
    return out


def _factorial(alpha: Sequence[int]) -> int:
    return math.prod(math.factorial(a) for a in alpha)


class SectionJet:
    """Derivatives ``d^alpha s_j (x0)`` for ``|alpha| <= order``.

    The Taylor polynomial ``sum_alpha d^alpha s_j / alpha! * h^alpha`` is the
    section; its composition with a nilpotent displacement is exact.
    """

    def __init__(self, m: int, e: int, order: int, base: Sequence, derivs: Mapping):
        self.m = m
        self.e = e
        self.order = order
        self.base = tuple(base)
        if len(self.base) != m:
            raise ValueError(f"base point must have {m} coordinates")
        self.derivs = {}
        for j in range(e):
            for a in multi_indices(m, order):
                self.derivs[(j, a)] = derivs.get((j, a), 0)
        extra = set(derivs) - set(self.derivs)
        if extra:
            raise ValueError(f"derivative keys out of range: {sorted(extra)[:3]}")

    @classmethod
    def symbolic(cls, m: int, e: int, order: int, base: Sequence | None = None,
                 prefix: str = "s") -> "SectionJet":
        """Every derivative a fresh symbol ``s<j>_<alpha>``."""
        derivs = {
            (j, a): Polynomial.symbol(f"{prefix}{j + 1}_" + "".join(map(str, a)))
            for j in range(e)
            for a in multi_indices(m, order)
        }
        return cls(m, e, order, base if base is not None else (0,) * m, derivs)

    @classmethod
    def from_polynomials(cls, polys: Sequence[Polynomial], base: Sequence, order: int) -> "SectionJet":
        """Jet at ``base`` of the polynomial section with indexed components ``polys``."""
        m = len(base)
        derivs = {}
        for j, p in enumerate(polys):
            if p.nvars != m:
                raise ValueError("section components must use the base variables")
            for a in multi_indices(m, order):
                d = p
                for i, k in enumerate(a):
                    for _ in range(k):
                        d = d.diff(i)
                pts = [Polynomial.constant(b, 0) for b in base]
                derivs[(j, a)] = d.substitute(pts).constant_term() if m else d.constant_term()
        return cls(m, len(polys), order, base, derivs)

    @property
    def value(self) -> tuple:
        zero = (0,) * self.m
        return tuple(self.derivs[(j, zero)] for j in range(self.e))

    def displacement_names(self) -> list[str]:
        return [f"h{i + 1}" for i in range(self.m)]

    def taylor(self, j: int) -> Polynomial:
        """Named polynomial in ``h1..hm``."""
        h = [Polynomial.symbol(n) for n in self.displacement_names()]
        acc = Polynomial.zero()
        for a in multi_indices(self.m, self.order):
            t = Polynomial.constant(1)
            for i, k in enumerate(a):
                if k:
                    t = t * h[i] ** k
            c = self.derivs[(j, a)]
            acc = acc + t * c / _factorial(a)
        return acc

    def compose(self, gamma_components: Sequence[WeilElement]) -> list[WeilElement]:
        """``s(gamma)`` for Weil-algebra points ``gamma`` over the base point."""
        alg = gamma_components[0].algebra
        disp = {
            name: g - x
            for name, g, x in zip(self.displacement_names(), gamma_components, self.base)
        }
        return [self.taylor(j).evaluate(disp, alg.zero()) for j in range(self.e)]


def from_section_jet(s: SectionJet, approach: str, n: int):
    """The holonomic jet of order ``n`` induced by ``s`` in the given approach.

    ``approach`` is ``"second"`` (cube algebras), ``"third"`` (the line
    ``D_n``) or ``"first"`` (an iterated tower; see ``FirstApproachTower``).
    """
    if approach == "first":
        from .first import tower_from_section

        return tower_from_section(s, n)
    alg = candidate_algebra(approach, n)
    cand = JetCandidate(approach, n, s.base, s.value)
    gamma = cand.generic_input()
    images = s.compose(gamma.components)
    body = {}
    for j, img in enumerate(images):
        if not isinstance(img, WeilElement):
            img = alg.scalar(img)
        for mo, c in zip(alg.basis[1:], img.coeffs[1:]):
            body[(j, mo)] = c
    return cand.with_body(body)


__all__ = ["SectionJet", "from_section_jet", "multi_indices", "SECOND", "THIRD"]
