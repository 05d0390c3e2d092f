"""Jet candidates: polynomial rules sending base points to bundle points.

A candidate at ``(x, y)`` in ``E = R^(m+e)`` over ``M = R^m`` maps a point
``gamma`` of ``M (x) W`` sitting over ``x`` to a point of ``E (x) W`` over
``(x, y)``.  The base coordinates are copied; each fiber coordinate is ``y_j``
plus, for every non-unit basis monomial, a polynomial in the non-unit
coefficients of ``gamma``.  Those coefficients are the named variables
``g<i>_<exponents>``; any other name in a body is a free parameter.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from ..errors import AlgebraMismatch
from ..infinitesimal import cube, nil
from ..poly import Monomial, Polynomial, mono_str
from ..prolong import CoordSpace, ProlongedPoint, coefficient_name
from ..weil import WeilAlgebra, WeilElement, join_monomial, split_monomial, tensor

SECOND = "second"
THIRD = "third"


def candidate_algebra(approach: str, n: int) -> WeilAlgebra:
    if approach == SECOND:
        return cube(n).algebra
    if approach == THIRD:
        return nil(n).algebra
    raise ValueError(f"unknown approach {approach!r}")


def input_name(i: int, m: Monomial, algebra: WeilAlgebra) -> str:
    return coefficient_name("g", i, m, algebra.nvars)


def _as_poly(p) -> Polynomial:
    if isinstance(p, Polynomial):
        if p.nvars is not None:
            raise TypeError("bodies are named polynomials")
        return p
    return Polynomial.constant(p)


class JetCandidate:
    def __init__(self, approach: str, n: int, base: Sequence, fiber: Sequence,
                 body: Mapping | None = None):
        self.approach = approach
        self.n = n
        self.algebra = candidate_algebra(approach, n)
        self.base = tuple(base)
        self.fiber = tuple(fiber)
        body = dict(body or {})
        full = {}
        for j in range(self.e):
            for mo in self.algebra.basis[1:]:
                full[(j, mo)] = _as_poly(body.pop((j, mo), 0))
        if body:
            raise ValueError(f"body keys outside the basis: {sorted(body)[:3]}")
        self.body = full
        self._cache: dict = {}

    @property
    def m(self) -> int:
        return len(self.base)

    @property
    def e(self) -> int:
        return len(self.fiber)

    @property
    def space(self) -> CoordSpace:
        return CoordSpace(self.m, self.e)

    def input_names(self) -> list[str]:
        return [input_name(i, mo, self.algebra) for i in range(self.m) for mo in self.algebra.basis[1:]]

    def parameters(self) -> set[str]:
        inputs = set(self.input_names())
        names = set()
        for p in self.body.values():
            names |= p.variables()
        for x in self.base + self.fiber:
            if isinstance(x, Polynomial):
                names |= x.variables()
        return names - inputs

    def generic_input(self) -> ProlongedPoint:
        return ProlongedPoint.symbolic(self.algebra, self.base)

    def evaluate(self, values: Mapping, zero=0) -> dict:
        """Body polynomials with the inputs replaced by ``values``."""
        return {k: p.evaluate(values, zero) for k, p in self.body.items()}

    def _values_from(self, gamma: ProlongedPoint) -> dict:
        vals = {}
        for i, comp in enumerate(gamma.components[: self.m]):
            for mo, c in zip(self.algebra.basis[1:], comp.coeffs[1:]):
                vals[input_name(i, mo, self.algebra)] = c
        return vals

    def apply(self, gamma: ProlongedPoint) -> ProlongedPoint:
        if gamma.algebra != self.algebra:
            raise AlgebraMismatch("input point lives over a different algebra")
        if gamma.space.dim != self.m:
            raise ValueError(f"input point has {gamma.space.dim} coordinates, expected {self.m}")
        vals = self._values_from(gamma)
        fibers = []
        for j in range(self.e):
            coeffs = [self.fiber[j]]
            for mo in self.algebra.basis[1:]:
                coeffs.append(self.body[(j, mo)].evaluate(vals, 0))
            fibers.append(WeilElement(self.algebra, coeffs))
        return ProlongedPoint(self.space, self.algebra, list(gamma.components) + fibers)

    __call__ = apply

    def apply_tensor(self, gamma: ProlongedPoint, extra: WeilAlgebra) -> ProlongedPoint:
        """``(candidate (x) id)`` on a point over ``W (x) extra``.

        Coefficients along the candidate's own algebra become ``extra``-valued
        and are fed through the body polynomials.
        """
        k = self.algebra.nvars
        t = tensor(self.algebra, extra)
        if gamma.algebra != t:
            raise AlgebraMismatch("point does not live over the expected tensor algebra")
        parts = [split_monomial(mo, k) for mo in t.basis]
        vals = {}
        for i, comp in enumerate(gamma.components[: self.m]):
            grouped: dict = {}
            for (left, right), c in zip(parts, comp.coeffs):
                grouped.setdefault(left, {})[right] = c
            for mo in self.algebra.basis[1:]:
                vals[input_name(i, mo, self.algebra)] = extra.from_terms(grouped.get(mo, {}))
        fibers = []
        for j in range(self.e):
            out_parts = {(): extra.scalar(self.fiber[j])}
            for mo in self.algebra.basis[1:]:
                out_parts[mo] = self.body[(j, mo)].evaluate(vals, extra.zero())
            terms = {}
            for left, elem in out_parts.items():
                if not isinstance(elem, WeilElement):
                    elem = extra.scalar(elem)
                for right, c in zip(extra.basis, elem.coeffs):
                    if c != 0:
                        terms[join_monomial(left, right, k)] = c
            fibers.append(t.from_terms(terms))
        return ProlongedPoint(self.space, t, list(gamma.components) + fibers)

    def same_shape(self, other: "JetCandidate") -> bool:
        return (
            self.approach == other.approach
            and self.n == other.n
            and self.m == other.m
            and self.e == other.e
        )

    def __eq__(self, other):
        if not isinstance(other, JetCandidate):
            return NotImplemented
        return (
            self.same_shape(other)
            and all(a == b for a, b in zip(self.base, other.base))
            and all(a == b for a, b in zip(self.fiber, other.fiber))
            and self.body == other.body
        )

    __hash__ = None  # mutable cache; compare by value only

    def first_difference(self, other: "JetCandidate"):
        """``(fiber index, monomial, difference)`` of the first body mismatch."""
        for key in self.body:
            a, b = self.body[key], other.body.get(key, Polynomial.zero())
            if a != b:
                return key[0], key[1], a - b
        return None

    def with_body(self, body: Mapping) -> "JetCandidate":
        return JetCandidate(self.approach, self.n, self.base, self.fiber, body)

    def substitute_parameters(self, values: Mapping) -> "JetCandidate":
        """Replace free parameters (never the inputs) by the given scalars."""
        def sub(x):
            return x.evaluate(values, 0) if isinstance(x, Polynomial) else x
        body = {k: _as_poly(p.evaluate(values, 0)) for k, p in self.body.items()}
        return JetCandidate(self.approach, self.n, [sub(x) for x in self.base],
                            [sub(y) for y in self.fiber], body)

    def __repr__(self):
        return f"JetCandidate({self.approach}, n={self.n}, m={self.m}, e={self.e})"

    def describe(self) -> list[str]:
        out = []
        for (j, mo), p in self.body.items():
            out.append(f"y{j + 1} [{mono_str(mo)}] = {p}")
        return out
