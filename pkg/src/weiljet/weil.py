"""Weil algebras presented as ``Q[X1..Xk]`` modulo a monomial ideal.

Elements are dense coefficient vectors over the standard-monomial basis.
Coefficients may be rationals or named polynomials, so a single element can
stand for a whole family of points at once.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    AlgebraMismatch,
    IllDefined,
    InfiniteDimensional,
    NonAugmented,
    ParseError,
    VariableCountMismatch,
)
from .poly import (
    ONE,
    Monomial,
    MonomialIdeal,
    Polynomial,
    as_rat,
    grlex_key,
    mono_degree,
    mono_mul,
    mono_str,
    normal_form,
    parse_poly,
)

Scalar = object  # int | Fraction | Polynomial (named)


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Polynomial)) and not isinstance(x, bool)


def _coef_str(c) -> str:
    s = str(c)
    if isinstance(c, Polynomial) and len(c.terms) > 1:
        return f"({s})"
    return s


class WeilAlgebra:
    """``Q[X1..Xk]/I`` for a monomial ideal ``I`` of finite codimension."""

    def __init__(self, nvars: int, ideal: MonomialIdeal, name: str | None = None):
        if ideal.nvars != nvars:
            raise VariableCountMismatch(f"ideal has {ideal.nvars} variables, algebra {nvars}")
        for i in range(nvars):
            if not any(len(g) == 1 and g[0][0] == i for g in ideal.gens):
                raise InfiniteDimensional(f"no power of X{i + 1} lies in the ideal")
        self.nvars = nvars
        self.ideal = ideal
        self.name = name
        self.basis: tuple[Monomial, ...] = self._standard_monomials()
        self.index = {m: k for k, m in enumerate(self.basis)}
        self._table = None

    def _standard_monomials(self):
        if ONE in self.ideal:
            raise InfiniteDimensional("the ideal is the whole ring")
        seen = {ONE}
        frontier = [ONE]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(self.nvars):
                    mm = mono_mul(m, ((i, 1),))
                    if mm not in seen and mm not in self.ideal:
                        seen.add(mm)
                        nxt.append(mm)
            frontier = nxt
        return tuple(sorted(seen, key=grlex_key))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def table(self):
        """``table[i][j]`` is the basis index of ``b_i * b_j``, or -1."""
        if self._table is None:
            idx = self.index
            self._table = [
                [idx.get(mono_mul(a, b), -1) for b in self.basis] for a in self.basis
            ]
        return self._table

    def __eq__(self, other):
        return (
            isinstance(other, WeilAlgebra)
            and self.nvars == other.nvars
            and self.ideal == other.ideal
        )

    def __hash__(self):
        return hash((self.nvars, self.ideal))

    def __repr__(self):
        label = self.name or "W"
        gens = ", ".join(mono_str(g) for g in self.ideal.gens)
        return f"<{label}: {self.nvars} vars / ({gens}), dim {self.dim}>"

    # element constructors
    def zero(self) -> "WeilElement":
        return WeilElement(self, (0,) * self.dim)

    def one(self) -> "WeilElement":
        return self.scalar(1)

    def scalar(self, c) -> "WeilElement":
        return WeilElement(self, (c,) + (0,) * (self.dim - 1))

    def var(self, i: int) -> "WeilElement":
        return self.from_poly(Polynomial.variable(i, self.nvars))

    def basis_element(self, m: Monomial) -> "WeilElement":
        out = [0] * self.dim
        out[self.index[tuple(m)]] = 1
        return WeilElement(self, tuple(out))

    def from_poly(self, p: Polynomial) -> "WeilElement":
        if p.nvars != self.nvars:
            raise VariableCountMismatch(f"polynomial has {p.nvars} variables, algebra {self.nvars}")
        p = normal_form(p, self.ideal)
        out = [0] * self.dim
        for m, c in p.items():
            out[self.index[m]] = c
        return WeilElement(self, tuple(out))

    def from_terms(self, terms: dict) -> "WeilElement":
        """Element from ``{monomial: scalar}``; monomials in the ideal are dropped."""
        out = [0] * self.dim
        for m, c in terms.items():
            k = self.index.get(tuple(m))
            if k is not None:
                out[k] = out[k] + c
        return WeilElement(self, tuple(out))

    def parse(self, text: str) -> "WeilElement":
        return self.from_poly(parse_poly(text, self.nvars))


def build_algebra(nvars: int, generators: Iterable, name: str | None = None) -> WeilAlgebra:
    """Algebra from monomial generators (tuples, exponent lists or text)."""
    gens = []
    for g in generators:
        if isinstance(g, str):
            p = parse_poly(g, nvars)
            if len(p.terms) != 1:
                raise ParseError(f"generator {g!r} is not a monomial")
            gens.append(next(iter(p.terms)))
        elif g and isinstance(g[0], int):
            if len(g) != nvars:
                raise VariableCountMismatch(f"exponent vector {g!r} has wrong length")
            gens.append(tuple((i, e) for i, e in enumerate(g) if e))
        else:
            gens.append(tuple(g))
    return WeilAlgebra(nvars, MonomialIdeal(gens, nvars), name)


def tensor(a: WeilAlgebra, b: WeilAlgebra, name: str | None = None) -> WeilAlgebra:
    """``a (x) b``: variables of ``a`` first, then those of ``b``."""
    shift = a.nvars
    gens = list(a.ideal.gens) + [tuple((v + shift, e) for v, e in g) for g in b.ideal.gens]
    if name is None and a.name and b.name:
        name = f"{a.name}(x){b.name}"
    return WeilAlgebra(a.nvars + b.nvars, MonomialIdeal(gens, a.nvars + b.nvars), name)


def split_monomial(m: Monomial, k: int) -> tuple[Monomial, Monomial]:
    """Split a tensor monomial into its first-factor and (unshifted) second-factor parts."""
    left = tuple(p for p in m if p[0] < k)
    right = tuple((v - k, e) for v, e in m if v >= k)
    return left, right


def join_monomial(left: Monomial, right: Monomial, k: int) -> Monomial:
    return left + tuple((v + k, e) for v, e in right)


class WeilElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: WeilAlgebra, coeffs: Sequence):
        if len(coeffs) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coefficients, got {len(coeffs)}")
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def _same(self, other: "WeilElement"):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra!r} vs {other.algebra!r}")

    def __add__(self, other):
        if isinstance(other, WeilElement):
            self._same(other)
            return WeilElement(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        if _is_scalar(other):
            return WeilElement(self.algebra, (self.coeffs[0] + other,) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return WeilElement(self.algebra, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, WeilElement) or _is_scalar(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, WeilElement):
            self._same(other)
            table = self.algebra.table
            out = [0] * self.algebra.dim
            nz_b = [(j, b) for j, b in enumerate(other.coeffs) if b != 0]
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                row = table[i]
                for j, b in nz_b:
                    k = row[j]
                    if k >= 0:
                        out[k] = out[k] + a * b
            return WeilElement(self.algebra, out)
        if _is_scalar(other):
            return WeilElement(self.algebra, [a * other for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, WeilElement):
            return self.algebra == other.algebra and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        if _is_scalar(other):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.algebra, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def unit_coefficient(self):
        return self.coeffs[0]

    def coefficient(self, m: Monomial):
        k = self.algebra.index.get(tuple(m))
        return 0 if k is None else self.coeffs[k]

    def terms(self):
        return [(m, c) for m, c in zip(self.algebra.basis, self.coeffs) if c != 0]

    def to_polynomial(self) -> Polynomial:
        return Polynomial(dict(self.terms()), self.algebra.nvars)

    def __str__(self):
        parts = []
        for m, c in self.terms():
            if not m:
                parts.append(_coef_str(c))
            elif c == 1:
                parts.append(mono_str(m))
            else:
                parts.append(f"{_coef_str(c)}*{mono_str(m)}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"WeilElement({self})"


def elem_mul(a: WeilElement, b: WeilElement) -> WeilElement:
    return a * b


class WeilHom:
    """Algebra map fixed by the images of the source variables.

    Build with ``hom_make``, which checks augmentation and well-definedness.
    """

    def __init__(self, source: WeilAlgebra, target: WeilAlgebra, images: tuple, label=None):
        self.source = source
        self.target = target
        self.images = images
        self.label = label
        self._rows = None

    @property
    def rows(self) -> list[dict]:
        """Image of each source basis monomial as ``{target index: rational}``."""
        if self._rows is None:
            rows = []
            for m in self.source.basis:
                p = Polynomial.from_monomial(m, 1, self.source.nvars)
                img = p.substitute(list(self.images), self.target.ideal)
                rows.append({self.target.index[t]: c for t, c in img.items()})
            self._rows = rows
        return self._rows

    def matrix(self) -> list[list]:
        """Dense matrix: rows follow the target basis, columns the source basis."""
        mat = [[0] * self.source.dim for _ in range(self.target.dim)]
        for j, row in enumerate(self.rows):
            for i, c in row.items():
                mat[i][j] = c
        return mat

    def apply(self, x: WeilElement) -> WeilElement:
        if x.algebra != self.source:
            raise AlgebraMismatch(f"hom source {self.source!r}, element in {x.algebra!r}")
        out = [0] * self.target.dim
        for c, row in zip(x.coeffs, self.rows):
            if c == 0:
                continue
            for i, r in row.items():
                out[i] = out[i] + c * r
        return WeilElement(self.target, out)

    __call__ = apply

    def then(self, other: "WeilHom") -> "WeilHom":
        """``other`` after ``self``."""
        if other.source != self.target:
            raise AlgebraMismatch("cannot compose: target and source differ")
        imgs = tuple(
            normal_form(p.substitute(list(other.images), other.target.ideal), other.target.ideal)
            for p in self.images
        )
        return WeilHom(self.source, other.target, imgs)

    def __eq__(self, other):
        return (
            isinstance(other, WeilHom)
            and self.source == other.source
            and self.target == other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.source, self.target, self.images))

    def __repr__(self):
        imgs = ", ".join(str(p) for p in self.images)
        return f"WeilHom([{imgs}])"


def hom_make(source: WeilAlgebra, target: WeilAlgebra, images: Sequence, label=None) -> WeilHom:
    """Validated hom: images have no constant term and kill every relation."""
    if len(images) != source.nvars:
        raise VariableCountMismatch(f"need {source.nvars} images, got {len(images)}")
    imgs = []
    for im in images:
        if isinstance(im, str):
            im = parse_poly(im, target.nvars)
        elif isinstance(im, WeilElement):
            im = im.to_polynomial()
        elif not isinstance(im, Polynomial):
            im = Polynomial.constant(as_rat(im), target.nvars)
        if im.nvars != target.nvars:
            raise VariableCountMismatch(f"image has {im.nvars} variables, target {target.nvars}")
        im = normal_form(im, target.ideal)
        if im.constant_term() != 0:
            raise NonAugmented(f"image {im} has a nonzero constant term")
        imgs.append(im)
    for g in source.ideal.gens:
        p = Polynomial.from_monomial(g, 1, source.nvars)
        residue = p.substitute(imgs, target.ideal)
        if not residue.is_zero():
            raise IllDefined(mono_str(g), str(residue))
    return WeilHom(source, target, tuple(imgs), label)


def hom_apply(h: WeilHom, x: WeilElement) -> WeilElement:
    return h.apply(x)


def identity_hom(a: WeilAlgebra) -> WeilHom:
    return WeilHom(a, a, tuple(Polynomial.variable(i, a.nvars) for i in range(a.nvars)))


def inclusion_left(a: WeilAlgebra, b: WeilAlgebra) -> WeilHom:
    """``a -> a (x) b``, ``x -> x (x) 1``."""
    t = tensor(a, b)
    return WeilHom(a, t, tuple(Polynomial.variable(i, t.nvars) for i in range(a.nvars)))


# -- JSON --------------------------------------------------------------------


def _scalar_to_json(c) -> str:
    return str(c)


def _scalar_from_json(s: str):
    p = parse_poly(s)
    return p.constant_term() if p.is_constant() else p


def algebra_to_json(a: WeilAlgebra) -> dict:
    return {"vars": a.nvars, "generators": [mono_str(g) for g in a.ideal.gens]}


def algebra_from_json(d: dict) -> WeilAlgebra:
    try:
        return build_algebra(int(d["vars"]), list(d["generators"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad algebra record: {exc}") from exc


def element_to_json(x: WeilElement) -> dict:
    return {
        "algebra": algebra_to_json(x.algebra),
        "coeffs": {mono_str(m): _scalar_to_json(c) for m, c in x.terms()},
    }


def element_from_json(d: dict, algebra: WeilAlgebra | None = None) -> WeilElement:
    a = algebra or algebra_from_json(d["algebra"])
    terms = {}
    for key, val in d["coeffs"].items():
        p = parse_poly(key, a.nvars)
        if len(p.terms) != 1 or next(iter(p.terms.values())) != 1:
            raise ParseError(f"bad basis monomial {key!r}")
        m = next(iter(p.terms))
        if m not in a.index:
            raise ParseError(f"{key} is not a basis monomial")
        terms[m] = _scalar_from_json(val)
    return a.from_terms(terms)


def hom_to_json(h: WeilHom) -> dict:
    return {
        "source": algebra_to_json(h.source),
        "target": algebra_to_json(h.target),
        "images": [str(p) for p in h.images],
    }


def hom_from_json(d: dict) -> WeilHom:
    src = algebra_from_json(d["source"])
    tgt = algebra_from_json(d["target"])
    return hom_make(src, tgt, list(d["images"]))


def degree_of(x: WeilElement) -> int:
    return max((mono_degree(m) for m, _ in x.terms()), default=-1)
