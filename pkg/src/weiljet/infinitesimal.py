"""Infinitesimal objects and the maps between them, realised on their Weil algebras.

Every object here is either of *simplicial* kind, the subset of ``D^m`` cut
out by ``d_i d_j ... = 0`` for a family ``S`` of index sequences, or of
*power* kind, ``D(m)_n``, where all degree ``n+1`` products vanish.  A map of
objects is recorded by its coordinate components, and its dual algebra map
(the pullback of polynomials) is what actually gets computed.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import CapExceeded, IllDefined, NotMonomial, ParseError
from .poly import MonomialIdeal, Polynomial, mono, parse_poly
from .weil import WeilAlgebra, WeilHom, hom_make, tensor

MAX_EXHAUSTIVE_M = 20


def _minimalize(seqs: Iterable[tuple[int, ...]]) -> frozenset:
    sets = sorted({tuple(sorted(set(s))) for s in seqs}, key=lambda s: (len(s), s))
    keep: list = []
    for s in sets:
        if not any(set(t) <= set(s) for t in keep):
            keep.append(s)
    return frozenset(keep)


@dataclass(frozen=True)
class SimplicialInfObject:
    m: int
    S: frozenset = frozenset()
    kind: str = "simplicial"
    n: int | None = None
    notation: str = field(default="brace", compare=False)

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("negative degree")
        if self.kind == "power":
            if self.n is None or self.n < 0 or self.m < 1:
                raise ValueError("power kind needs m >= 1 and n >= 0")
            return
        if self.kind != "simplicial":
            raise ValueError(f"unknown kind {self.kind!r}")
        for s in self.S:
            if not s or list(s) != sorted(set(s)) or s[0] < 1 or s[-1] > self.m:
                raise ValueError(f"bad index sequence {s!r} for degree {self.m}")

    @cached_property
    def algebra(self) -> WeilAlgebra:
        return _algebra_of(self)

    @property
    def degree(self) -> int:
        return self.m

    @property
    def dimension(self) -> int:
        return dimension(self)

    @property
    def is_symmetric(self) -> bool:
        return is_symmetric(self)

    def __str__(self) -> str:
        return format_object(self)


# -- constructors --------------------------------------------------------------


def brace(m: int, S: Iterable[Sequence[int]] = ()) -> SimplicialInfObject:
    """``D{m;S}``."""
    return SimplicialInfObject(m, _minimalize(tuple(s) for s in S), notation="brace")


def cube(m: int) -> SimplicialInfObject:
    """``D^m``."""
    return SimplicialInfObject(m, frozenset(), notation="cube")


def brace_n(m: int, n: int) -> SimplicialInfObject:
    """``D{m}_n``: any ``n+1`` distinct coordinates multiply to zero."""
    S = itertools.combinations(range(1, m + 1), n + 1)
    return SimplicialInfObject(m, _minimalize(S), notation="brace_n")


def paren(m: int) -> SimplicialInfObject:
    """``D(m)``: all pairwise products vanish."""
    return SimplicialInfObject(m, _minimalize(itertools.combinations(range(1, m + 1), 2)), notation="paren")


def power(m: int, n: int) -> SimplicialInfObject:
    """``D(m)_n``: all degree ``n+1`` monomials vanish."""
    return SimplicialInfObject(m, frozenset(), kind="power", n=n, notation="paren_n")


def nil(n: int) -> SimplicialInfObject:
    """``D_n``, the first-order-``n`` line ``{d : d^(n+1) = 0}``."""
    return SimplicialInfObject(1, frozenset(), kind="power", n=n, notation="sub")


@lru_cache(maxsize=None)
def _algebra_of(obj: SimplicialInfObject) -> WeilAlgebra:
    m = obj.m
    if obj.kind == "power":
        gens = [mono(e) for e in _exponents_of_degree(m, obj.n + 1)]
    else:
        gens = [((i, 2),) for i in range(m)]
        gens += [tuple((i - 1, 1) for i in s) for s in obj.S]
    return WeilAlgebra(m, MonomialIdeal(gens, m), name=f"W({format_object(obj)})")


def _exponents_of_degree(m: int, d: int):
    for combo in itertools.combinations_with_replacement(range(m), d):
        e = [0] * m
        for i in combo:
            e[i] += 1
        yield tuple(e)


# -- invariants ------------------------------------------------------------------


def _check_cap(obj: SimplicialInfObject):
    if obj.m > MAX_EXHAUSTIVE_M:
        raise CapExceeded(f"degree {obj.m} exceeds the exhaustive-search cap {MAX_EXHAUSTIVE_M}")


def _free_masks(obj: SimplicialInfObject) -> list[int]:
    """Bitmasks of all index subsets containing no member of ``S``."""
    _check_cap(obj)
    bad = [sum(1 << (i - 1) for i in s) for s in obj.S]
    return [mask for mask in range(1 << obj.m) if not any(mask & b == b for b in bad)]


def dimension(obj: SimplicialInfObject) -> int:
    """Length of the longest index sequence containing no member of ``S``.

    For the power kind ``D(m)_n`` the dimension is ``n`` by definition.
    """
    if obj.kind == "power":
        return obj.n
    return max(bin(mask).count("1") for mask in _free_masks(obj))


def maximal_sequences(obj: SimplicialInfObject) -> list[tuple[int, ...]]:
    """Maximal ``S``-free index sequences, in lexicographic order."""
    if obj.kind != "simplicial":
        raise ValueError("maximal sequences are defined for simplicial objects")
    free = set(_free_masks(obj))
    out = []
    for mask in free:
        if all((mask | (1 << i)) not in free for i in range(obj.m) if not mask >> i & 1):
            out.append(tuple(i + 1 for i in range(obj.m) if mask >> i & 1))
    return sorted(out)


def is_symmetric(obj: SimplicialInfObject) -> bool:
    if obj.kind == "power":
        return True
    for s in obj.S:
        for t in itertools.combinations(range(1, obj.m + 1), len(s)):
            if t not in obj.S:
                return False
    return True


# -- text ------------------------------------------------------------------------


def format_object(obj: SimplicialInfObject) -> str:
    nt = obj.notation
    if obj.kind == "power":
        if nt == "sub" and obj.m == 1:
            return f"D_{obj.n}"
        return f"D({obj.m})_{obj.n}"
    if nt == "cube" and not obj.S:
        return f"D^{obj.m}"
    if nt == "plain" and obj.m == 1 and not obj.S:
        return "D"
    if nt == "paren" and obj == paren(obj.m):
        return f"D({obj.m})"
    if nt == "brace_n":
        for n in range(obj.m + 1):
            if obj == brace_n(obj.m, n):
                return f"D{{{obj.m}}}_{n}"
    seqs = ",".join("(" + ",".join(map(str, s)) + ")" for s in sorted(obj.S))
    return f"D{{{obj.m};{seqs}}}"


_RX = [
    (re.compile(r"D\^(\d+)\Z"), lambda g: cube(int(g[0]))),
    (re.compile(r"D_(\d+)\Z"), lambda g: nil(int(g[0]))),
    (re.compile(r"D\((\d+)\)_(\d+)\Z"), lambda g: power(int(g[0]), int(g[1]))),
    (re.compile(r"D\((\d+)\)\Z"), lambda g: paren(int(g[0]))),
    (re.compile(r"D\{(\d+)\}_(\d+)\Z"), lambda g: brace_n(int(g[0]), int(g[1]))),
]


def parse_object(text: str) -> SimplicialInfObject:
    s = re.sub(r"\s+", "", text)
    if s == "D":
        return SimplicialInfObject(1, frozenset(), notation="plain")
    for rx, build in _RX:
        mt = rx.match(s)
        if mt:
            return build(mt.groups())
    mt = re.match(r"D\{(\d+);(.*)\}\Z", s)
    if mt:
        m = int(mt.group(1))
        body = mt.group(2)
        seqs = []
        if body:
            if not re.fullmatch(r"\(\d+(,\d+)*\)(,\(\d+(,\d+)*\))*", body):
                raise ParseError(f"bad sequence list in {text!r}")
            for part in re.findall(r"\(([^)]*)\)", body):
                seq = tuple(int(x) for x in part.split(","))
                if list(seq) != sorted(set(seq)):
                    raise ParseError(f"sequence {seq} is not strictly increasing")
                if seq[0] < 1 or seq[-1] > m:
                    raise ParseError(f"sequence {seq} uses indices outside 1..{m}")
                seqs.append(seq)
        return brace(m, seqs)
    raise ParseError(f"cannot parse infinitesimal object {text!r}")


# -- simple polynomials ------------------------------------------------------------


@dataclass(frozen=True)
class SimplePolynomial:
    """``rho(d) = sum of d^e over a nonempty exponent set``, for ``d`` in ``D_n``."""

    n: int
    exponents: frozenset

    def __post_init__(self):
        if not self.exponents or not all(1 <= e <= self.n for e in self.exponents):
            raise ValueError(f"exponents must be a nonempty subset of 1..{self.n}")

    @property
    def dim(self) -> int:
        return simple_poly_dim(self)

    def polynomial(self) -> Polynomial:
        return Polynomial({((0, e),): 1 for e in self.exponents}, 1)

    def hom(self) -> WeilHom:
        """``W(D_l) -> W(D_n)``, ``X -> rho(X)``, where ``l = dim``."""
        return hom_make(nil(self.dim).algebra, nil(self.n).algebra, [self.polynomial()])

    def __str__(self):
        return " + ".join("d" if e == 1 else f"d^{e}" for e in sorted(self.exponents))


def simple_poly(n: int, exponents: Iterable[int]) -> SimplePolynomial:
    return SimplePolynomial(n, frozenset(exponents))


def simple_poly_dim(rho: SimplePolynomial) -> int:
    """Least ``l`` with ``rho^(l+1) = 0`` in ``W(D_n)``."""
    alg = nil(rho.n).algebra
    x = alg.from_poly(rho.polynomial())
    p = x
    l = 0
    while not p.is_zero():
        l += 1
        p = p * x
    return l


def all_simple_polys(n: int) -> list[SimplePolynomial]:
    out = []
    for k in range(1, n + 1):
        for c in itertools.combinations(range(1, n + 1), k):
            out.append(simple_poly(n, c))
    return out


# -- maps ----------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialMapping:
    """A map of objects whose components are coefficient-one monomials or zero.

    ``components[j]`` is the exponent vector (over the source coordinates) of
    target coordinate ``j``, or ``None`` for the zero component.
    """

    source: SimplicialInfObject
    target: SimplicialInfObject
    components: tuple

    def __post_init__(self):
        if len(self.components) != self.target.m:
            raise ValueError(f"need {self.target.m} components, got {len(self.components)}")
        for c in self.components:
            if c is not None and (len(c) != self.source.m or not any(c)):
                raise NotMonomial(f"component {c!r} is not a nonconstant monomial")

    def images(self) -> list[Polynomial]:
        k = self.source.m
        return [
            Polynomial.zero(k) if c is None else Polynomial.from_monomial(mono(c), 1, k)
            for c in self.components
        ]

    def weil_hom(self) -> WeilHom:
        """Pullback ``W(target) -> W(source)``; raises ``IllDefined`` if the map does not land."""
        return hom_make(self.target.algebra, self.source.algebra, self.images())

    def is_well_defined(self) -> bool:
        try:
            self.weil_hom()
        except IllDefined:
            return False
        return True


def monomial_mapping(source, target, components) -> MonomialMapping:
    """Build from components given as text (``"d1*d3"``, ``"0"``) or exponent vectors."""
    comps = []
    for c in components:
        if isinstance(c, str):
            text = re.sub(r"d(\d+)", r"X\1", c.replace(" ", ""))
            if text in ("0", ""):
                comps.append(None)
                continue
            p = parse_poly(text, source.m)
            if len(p.terms) != 1 or next(iter(p.terms.values())) != 1:
                raise NotMonomial(f"{c!r} is not a coefficient-one monomial")
            m = next(iter(p.terms))
            e = [0] * source.m
            for v, x in m:
                e[v] = x
            comps.append(tuple(e))
        else:
            comps.append(None if c is None else tuple(c))
    return MonomialMapping(source, target, tuple(comps))


def polynomial_mapping(source: SimplicialInfObject, target: SimplicialInfObject, components) -> WeilHom:
    """Pullback of a map with arbitrary polynomial components (text in ``d1..dk``)."""
    imgs = []
    for c in components:
        if isinstance(c, str):
            c = parse_poly(re.sub(r"d(\d+)", r"X\1", c), source.m) if c.strip() != "0" else Polynomial.zero(source.m)
        imgs.append(c)
    return hom_make(target.algebra, source.algebra, imgs)


def coordinate_injection(k: int, target: SimplicialInfObject, coords: Sequence[int]) -> MonomialMapping:
    """``D^k -> target`` placing ``d_t`` at coordinate ``coords[t]`` (1-based), zeros elsewhere."""
    comps: list = [None] * target.m
    for t, c in enumerate(coords):
        e = [0] * k
        e[t] = 1
        comps[c - 1] = tuple(e)
    return MonomialMapping(cube(k), target, tuple(comps))


def plus_map(obj: SimplicialInfObject) -> WeilHom:
    """``W(D_n) -> W(obj)``, ``X -> X1 + ... + Xm``, with ``n = dimension(obj)``."""
    n = dimension(obj)
    m = obj.m
    s = Polynomial({((i, 1),): 1 for i in range(m)}, m)
    return hom_make(nil(n).algebra, obj.algebra, [s], label="plus")


# Standard maps between cubes.  Each function returns the pullback on algebras.


def face_hom(n: int, i: int) -> WeilHom:
    """Pullback of ``D^n -> D^(n+1)``, zero inserted at slot ``i``: ``W(D^(n+1)) -> W(D^n)``."""
    if not 1 <= i <= n + 1:
        raise ValueError(f"face index {i} outside 1..{n + 1}")
    imgs = []
    for j in range(1, n + 2):
        if j < i:
            imgs.append(Polynomial.variable(j - 1, n))
        elif j == i:
            imgs.append(Polynomial.zero(n))
        else:
            imgs.append(Polynomial.variable(j - 2, n))
    return hom_make(cube(n + 1).algebra, cube(n).algebra, imgs, label=f"d{i}")


def degeneracy_hom(n: int, i: int) -> WeilHom:
    """Pullback of ``D^(n+1) -> D^n`` dropping slot ``i``: ``W(D^n) -> W(D^(n+1))``."""
    if not 1 <= i <= n + 1:
        raise ValueError(f"degeneracy index {i} outside 1..{n + 1}")
    imgs = [Polynomial.variable(j - 1 if j < i else j, n + 1) for j in range(1, n + 1)]
    return hom_make(cube(n).algebra, cube(n + 1).algebra, imgs, label=f"s{i}")


def permutation_hom(n: int, sigma: Sequence[int]) -> WeilHom:
    """Pullback of ``(d1..dn) -> (d_sigma(1) .. d_sigma(n))`` (``sigma`` 1-based)."""
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma!r} is not a permutation of 1..{n}")
    imgs = [Polynomial.variable(sigma[j] - 1, n) for j in range(n)]
    return hom_make(cube(n).algebra, cube(n).algebra, imgs, label=f"perm{tuple(sigma)}")


def transposition(n: int, i: int) -> list[int]:
    """The permutation swapping ``i`` and ``i+1``."""
    sigma = list(range(1, n + 1))
    sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
    return sigma


def last_product_hom(n: int) -> WeilHom:
    """Pullback of ``D^(n+1) -> D^n``, ``(d1..dn, d_(n+1)) -> (d1..d_(n-1), dn*d_(n+1))``."""
    imgs = [Polynomial.variable(j, n + 1) for j in range(n - 1)]
    imgs.append(Polynomial({((n - 1, 1), (n, 1)): 1}, n + 1))
    return hom_make(cube(n).algebra, cube(n + 1).algebra, imgs, label="last-product")


def nil_to_product_hom(n: int) -> WeilHom:
    """Pullback of multiplication ``D_(n+1) x D_n -> D_n``: ``X -> Y1*Y2``."""
    target = tensor(nil(n + 1).algebra, nil(n).algebra)
    return hom_make(nil(n).algebra, target, [Polynomial({((0, 1), (1, 1)): 1}, 2)], label="mult")


def axis_nilpotent_hom(base: WeilAlgebra, i: int, order: int) -> WeilHom:
    """``base -> base (x) W(D_order)``, ``X_i -> X_i*E``, other variables fixed."""
    t = tensor(base, nil(order).algebra)
    k = base.nvars
    imgs = []
    for j in range(k):
        if j == i:
            imgs.append(Polynomial({((j, 1), (k, 1)): 1}, k + 1))
        else:
            imgs.append(Polynomial.variable(j, k + 1))
    return hom_make(base, t, imgs)


# -- inclusions ---------------------------------------------------------------------


def _identity_images(nvars: int, target_nvars: int) -> list[Polynomial]:
    return [Polynomial.variable(i, target_nvars) for i in range(nvars)]


def check_inclusions(max_m: int = 3, max_n: int = 3) -> list[tuple[str, bool]]:
    """Check the standard inclusions among the ``D(m)_n`` on a small grid.

    Each inclusion ``A <= B`` is checked by building the identity-on-coordinates
    pullback ``W(B) -> W(A)`` and asking whether it is well defined.
    """
    out: list[tuple[str, bool]] = []

    def attempt(name, src, tgt, nv):
        try:
            hom_make(src, tgt, _identity_images(nv, tgt.nvars))
            out.append((name, True))
        except IllDefined:
            out.append((name, False))

    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            attempt(f"D({m})_{n} <= D({m})_{n + 1}", power(m, n + 1).algebra, power(m, n).algebra, m)
    for n in range(1, max_n + 1):
        out.append((f"D(1)_{n} = D_{n}", power(1, n).algebra == nil(n).algebra))
    for m in range(1, max_m + 1):
        out.append((f"D({m})_1 = D({m})", power(m, 1).algebra == paren(m).algebra))
    for m1 in range(1, max_m + 1):
        for m2 in range(1, max_m + 1 - m1 + 1):
            for n in range(1, max_n + 1):
                prod = tensor(power(m1, n).algebra, power(m2, 1).algebra)
                attempt(
                    f"D({m1})_{n} x D({m2})_1 <= D({m1 + m2})_{n + 1}",
                    power(m1 + m2, n + 1).algebra, prod, m1 + m2,
                )
                prod2 = tensor(power(m1, n).algebra, power(m2, n).algebra)
                attempt(
                    f"D({m1 + m2})_{n} <= D({m1})_{n} x D({m2})_{n}",
                    prod2, power(m1 + m2, n).algebra, m1 + m2,
                )
    return out
