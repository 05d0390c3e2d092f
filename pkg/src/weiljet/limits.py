"""Finite limits of Weil algebras, decided by exact linear algebra.

A cone over a diagram is a limit exactly when the induced map from its apex
into the equalizer subspace of the product of the diagram's objects is a
bijection.  ``limit_subspace`` computes both sides and returns a verdict with
a certificate: dimensions, plus a kernel vector or a missing vector when the
map fails to be injective or surjective.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .infinitesimal import (
    MonomialMapping,
    SimplicialInfObject,
    coordinate_injection,
    cube,
    maximal_sequences,
    nil,
    permutation_hom,
    plus_map,
    transposition,
    degeneracy_hom,
    nil_to_product_hom,
)
from .errors import CapExceeded
from .linalg import nullspace, rank
from .poly import Polynomial, mono_str
from .weil import WeilAlgebra, hom_make, identity_hom, tensor

# standard representations: largest degree, and most unknowns in the limit check
MAX_QCR_DEGREE = 8
MAX_QCR_PRODUCT = 1024


@dataclass
class WeilDiagram:
    objects: list
    arrows: list  # (source index, target index, WeilHom)

    def __post_init__(self):
        for s, t, h in self.arrows:
            if h.source != self.objects[s] or h.target != self.objects[t]:
                raise ValueError(f"arrow {s}->{t} does not match its objects")


@dataclass
class ConeCandidate:
    apex: WeilAlgebra
    legs: list  # one WeilHom apex -> objects[i] per object


@dataclass
class LimitVerdict:
    is_limit: bool
    apex_dim: int
    equalizer_dim: int
    product_dim: int
    rank: int
    commutes: bool
    kernel_vector: dict | None = None
    missing_vector: list | None = None

    @property
    def verdict(self) -> str:
        return "LIMIT" if self.is_limit else "NOT-LIMIT"

    def certificate(self) -> dict:
        cert = {
            "apex_dim": self.apex_dim,
            "equalizer_dim": self.equalizer_dim,
            "product_dim": self.product_dim,
            "rank": self.rank,
            "commutes": self.commutes,
            "dimension_deficit": self.equalizer_dim - self.apex_dim,
        }
        if self.kernel_vector is not None:
            cert["kernel_vector"] = self.kernel_vector
        if self.missing_vector is not None:
            cert["missing_vector"] = self.missing_vector
        return cert


def _constraint_rows(diagram: WeilDiagram, offsets: list[int], total: int) -> list[list]:
    rows = []
    for s, t, h in diagram.arrows:
        mat = h.matrix()
        for i, mrow in enumerate(mat):
            row = [0] * total
            for j, c in enumerate(mrow):
                if c:
                    row[offsets[s] + j] += c
            row[offsets[t] + i] -= 1
            rows.append(row)
    return rows


def limit_subspace(diagram: WeilDiagram, cone: ConeCandidate) -> LimitVerdict:
    objs = diagram.objects
    if len(cone.legs) != len(objs):
        raise ValueError("a cone needs one leg per object")
    for leg, obj in zip(cone.legs, objs):
        if leg.source != cone.apex or leg.target != obj:
            raise ValueError("cone leg does not match apex and object")
    offsets = list(itertools.accumulate([0] + [o.dim for o in objs]))
    total = offsets[-1]
    cons = _constraint_rows(diagram, offsets, total)
    eq_dim = total - (rank(cons) if cons else 0)

    a = cone.apex.dim
    legmat = [[0] * a for _ in range(total)]
    for k, leg in enumerate(cone.legs):
        for j, row in enumerate(leg.rows):
            for i, c in row.items():
                legmat[offsets[k] + i][j] = c
    commutes = all(
        sum(r[p] * legmat[p][j] for p in range(total) if r[p]) == 0
        for r in cons
        for j in range(a)
    )
    rk = rank(legmat) if total and a else 0
    kernel = missing = None
    if rk < a:
        vec = nullspace(legmat, a)[0]
        kernel = {
            mono_str(m): str(c) for m, c in zip(cone.apex.basis, vec) if c != 0
        }
    elif commutes and rk < eq_dim:
        ker_basis = nullspace(cons, total) if cons else [
            [Fraction(int(i == j)) for i in range(total)] for j in range(total)
        ]
        cols = [[legmat[p][j] for p in range(total)] for j in range(a)]
        for v in ker_basis:
            if rank(cols + [v]) > rk:
                missing = [str(x) for x in v]
                break
    is_limit = commutes and rk == a == eq_dim
    return LimitVerdict(is_limit, a, eq_dim, total, rk, commutes, kernel, missing)


# -- quasi-colimit representations ------------------------------------------------


@dataclass
class QCRepresentation:
    """Pieces ``D^k -> target`` glued along overlaps ``D^l -> piece``.

    ``overlaps`` holds ``(p, map into piece p, q, map into piece q)``.
    """

    target: SimplicialInfObject
    pieces: list
    overlaps: list = field(default_factory=list)

    def diagram_and_cone(self) -> tuple[WeilDiagram, ConeCandidate]:
        P = len(self.pieces)
        piece_algs = [pm.source.algebra for pm in self.pieces]
        overlap_algs = [om_p.source.algebra for _, om_p, _, _ in self.overlaps]
        objects = piece_algs + overlap_algs
        arrows = []
        legs = [pm.weil_hom() for pm in self.pieces]
        for o, (p, into_p, q, into_q) in enumerate(self.overlaps):
            hp = into_p.weil_hom()
            hq = into_q.weil_hom()
            arrows.append((p, P + o, hp))
            arrows.append((q, P + o, hq))
            legs.append(legs[p].then(hp))
        return WeilDiagram(objects, arrows), ConeCandidate(self.target.algebra, legs)

    @cached_property
    def verdict(self) -> LimitVerdict:
        diagram, cone = self.diagram_and_cone()
        return limit_subspace(diagram, cone)

    @property
    def piece_coords(self) -> list:
        return [_support(pm) for pm in self.pieces]

    def to_json(self) -> dict:
        return {
            "object": str(self.target),
            "pieces": [
                {"dim": pm.source.m, "map": mapping_text(pm)} for pm in self.pieces
            ],
            "overlaps": [
                {
                    "dim": ip.source.m,
                    "pieces": [p, q],
                    "maps": [mapping_text(ip), mapping_text(iq)],
                }
                for p, ip, q, iq in self.overlaps
            ],
            "verdict": self.verdict.verdict,
            "certificate": self.verdict.certificate(),
        }


def _support(pm: MonomialMapping) -> tuple:
    coords = []
    for t in range(pm.source.m):
        for j, c in enumerate(pm.components):
            if c is not None and c[t]:
                coords.append(j + 1)
                break
    return tuple(coords)


def mapping_text(pm: MonomialMapping) -> list[str]:
    out = []
    for c in pm.components:
        if c is None:
            out.append("0")
        else:
            out.append(
                "*".join(f"d{i + 1}" if e == 1 else f"d{i + 1}^{e}" for i, e in enumerate(c) if e)
            )
    return out


def standard_qcr(obj: SimplicialInfObject) -> QCRepresentation:
    """One piece per maximal sequence; one overlap per pair, on their common part."""
    if obj.kind != "simplicial":
        raise ValueError(f"{obj} is not simplicial; it has no standard representation")
    if obj.m > MAX_QCR_DEGREE:
        raise CapExceeded(f"degree {obj.m} exceeds the representation cap {MAX_QCR_DEGREE}")
    seqs = maximal_sequences(obj)
    size = sum(2 ** len(s) for s in seqs) + sum(
        2 ** len(set(a) & set(b)) for a, b in itertools.combinations(seqs, 2)
    )
    if size > MAX_QCR_PRODUCT:
        raise CapExceeded(f"the limit check for {obj} has {size} unknowns, cap {MAX_QCR_PRODUCT}")
    pieces = [coordinate_injection(len(s), obj, s) for s in seqs]
    overlaps = []
    for p, q in itertools.combinations(range(len(seqs)), 2):
        common = sorted(set(seqs[p]) & set(seqs[q]))
        l = len(common)
        into_p = coordinate_injection(l, cube(len(seqs[p])), [seqs[p].index(c) + 1 for c in common])
        into_q = coordinate_injection(l, cube(len(seqs[q])), [seqs[q].index(c) + 1 for c in common])
        overlaps.append((p, into_p, q, into_q))
    return QCRepresentation(obj, pieces, overlaps)


def verify_nonstandard_qcr(rep: QCRepresentation) -> LimitVerdict:
    """Certify an arbitrary representation; every map must be monomial and land."""
    for pm in rep.pieces:
        if not isinstance(pm, MonomialMapping) or pm.target != rep.target:
            raise ValueError("every piece must be a monomial mapping into the target")
        pm.weil_hom()
    for p, ip, q, iq in rep.overlaps:
        if ip.target != rep.pieces[p].source or iq.target != rep.pieces[q].source:
            raise ValueError("overlap maps must land in their pieces")
        ip.weil_hom()
        iq.weil_hom()
    return rep.verdict


def drop_piece(rep: QCRepresentation, k: int) -> QCRepresentation:
    """The representation with piece ``k`` removed, overlaps touching it included.

    Each surviving overlap keeps only its arrow into a remaining piece, so the
    result is still a diagram; it is typically no longer a limit.
    """
    pieces = [pm for i, pm in enumerate(rep.pieces) if i != k]
    renum = {old: new for new, old in enumerate(i for i in range(len(rep.pieces)) if i != k)}
    overlaps = []
    for p, ip, q, iq in rep.overlaps:
        if p != k and q != k:
            overlaps.append((renum[p], ip, renum[q], iq))
    return QCRepresentation(rep.target, pieces, overlaps)


# -- the three equalizer diagrams --------------------------------------------------


def cube_equalizer(n: int) -> tuple[WeilDiagram, ConeCandidate]:
    """``W(D^n) -> W(D^(n+1))``, equalizing the identity and ``X_(n+1) -> 0``."""
    big = cube(n + 1).algebra
    zero_last = hom_make(
        big, big,
        [Polynomial.variable(i, n + 1) for i in range(n)] + [Polynomial.zero(n + 1)],
    )
    ident = identity_hom(big)
    leg = degeneracy_hom(n, n + 1)
    diagram = WeilDiagram([big, big], [(0, 1, ident), (0, 1, zero_last)])
    return diagram, ConeCandidate(cube(n).algebra, [leg, leg.then(ident)])


def nil_equalizer(n: int) -> tuple[WeilDiagram, ConeCandidate]:
    """``W(D_n) -> W(D_(n+1) x D_n)`` by ``X -> Y1*Y2``, equalizing the two
    ways of multiplying three coordinates down to two."""
    a = tensor(nil(n + 1).algebra, nil(n).algebra)
    b = tensor(tensor(nil(n + 1).algebra, nil(n + 1).algebra), nil(n).algebra)
    z = [Polynomial.variable(i, 3) for i in range(3)]
    first = hom_make(a, b, [z[0] * z[1], z[2]])
    second = hom_make(a, b, [z[0], z[1] * z[2]])
    leg = nil_to_product_hom(n)
    diagram = WeilDiagram([a, b], [(0, 1, first), (0, 1, second)])
    return diagram, ConeCandidate(nil(n).algebra, [leg, leg.then(first)])


def symmetric_equalizer(n: int) -> tuple[WeilDiagram, ConeCandidate]:
    """``W(D_n) -> W(D^n)`` by ``X -> X1 + ... + Xn``, fixed by every adjacent transposition."""
    w = cube(n).algebra
    arrows = [(0, 0, permutation_hom(n, transposition(n, i))) for i in range(1, n)]
    diagram = WeilDiagram([w], arrows)
    return diagram, ConeCandidate(nil(n).algebra, [plus_map(cube(n))])


def equalizer_basis(diagram: WeilDiagram) -> list[list[Fraction]]:
    offsets = list(itertools.accumulate([0] + [o.dim for o in diagram.objects]))
    cons = _constraint_rows(diagram, offsets, offsets[-1])
    return nullspace(cons, offsets[-1])
