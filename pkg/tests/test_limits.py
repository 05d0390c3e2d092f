from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weiljet.infinitesimal import brace, brace_n, coordinate_injection, cube, paren
from weiljet.limits import (
    ConeCandidate,
    QCRepresentation,
    WeilDiagram,
    cube_equalizer,
    drop_piece,
    equalizer_basis,
    limit_subspace,
    nil_equalizer,
    standard_qcr,
    symmetric_equalizer,
    verify_nonstandard_qcr,
)
from weiljet.weil import hom_make


def test_equalizer_examples():
    assert limit_subspace(*cube_equalizer(2)).is_limit
    assert limit_subspace(*nil_equalizer(1)).is_limit
    assert limit_subspace(*symmetric_equalizer(2)).is_limit


@pytest.mark.parametrize("n", range(1, 5))
def test_equalizers_up_to_four(n):
    for build in (cube_equalizer, nil_equalizer, symmetric_equalizer):
        v = limit_subspace(*build(n))
        assert v.is_limit, (build.__name__, n, v.certificate())


@pytest.mark.parametrize("n", range(1, 5))
def test_symmetric_tensors_have_dimension_n_plus_one(n):
    diagram, _ = symmetric_equalizer(n)
    assert len(equalizer_basis(diagram)) == n + 1


def test_wrong_apex_is_not_a_limit():
    diagram, cone = cube_equalizer(2)
    big = diagram.objects[0]
    ident = hom_make(big, big, [f"X{i + 1}" for i in range(3)])
    v = limit_subspace(diagram, ConeCandidate(big, [ident, ident]))
    assert not v.is_limit and not v.commutes


def test_standard_qcr_of_D3_2():
    rep = standard_qcr(brace_n(3, 2))
    assert [pm.source.m for pm in rep.pieces] == [2, 2, 2]
    assert rep.piece_coords == [(1, 2), (1, 3), (2, 3)]
    assert [pm.images()[k].is_zero() for pm in rep.pieces for k in range(3)] == [
        False, False, True, False, True, False, True, False, False,
    ]
    assert [(p, q, ip.source.m) for p, ip, q, _ in rep.overlaps] == [(0, 1, 1), (0, 2, 1), (1, 2, 1)]
    js = rep.to_json()
    assert [p["map"] for p in js["pieces"]] == [["d1", "d2", "0"], ["d1", "0", "d2"], ["0", "d1", "d2"]]
    assert [o["maps"] for o in js["overlaps"]] == [
        [["d1", "0"], ["d1", "0"]],
        [["0", "d1"], ["d1", "0"]],
        [["0", "d1"], ["0", "d1"]],
    ]
    assert rep.verdict.is_limit


def test_standard_qcr_trivial_and_discrete():
    rep = standard_qcr(cube(3))
    assert len(rep.pieces) == 1 and rep.overlaps == [] and rep.verdict.is_limit
    rep = standard_qcr(paren(2))
    assert [pm.source.m for pm in rep.pieces] == [1, 1]
    assert [ip.source.m for _, ip, _, _ in rep.overlaps] == [0]
    assert rep.verdict.is_limit


@pytest.mark.parametrize(
    "obj", [paren(2), paren(3), brace(3, [(1, 3), (2, 3)]), brace(3, [(1, 2)]), brace_n(4, 3)]
)
def test_standard_qcr_certifies(obj):
    assert standard_qcr(obj).verdict.is_limit


def _all_objects(max_m):
    for m in range(1, max_m + 1):
        seqs = [c for k in (2, 3) for c in itertools.combinations(range(1, m + 1), k)]
        for r in range(0, min(len(seqs), 3) + 1):
            for S in itertools.combinations(seqs, r):
                yield brace(m, S)


def test_piece_dimensions_bounded_by_dimension():
    seen = set()
    for obj in _all_objects(4):
        if obj in seen:
            continue
        seen.add(obj)
        dims = [pm.source.m for pm in standard_qcr(obj).pieces]
        assert max(dims) == obj.dimension
        assert all(k <= obj.dimension for k in dims)
    assert len(seen) > 50


def test_drop_piece_certificate():
    rep = drop_piece(standard_qcr(brace_n(3, 2)), 2)
    v = rep.verdict
    assert not v.is_limit
    cert = v.certificate()
    assert cert["apex_dim"] == 7 and cert["equalizer_dim"] == 6
    assert cert["dimension_deficit"] == -1
    assert cert["kernel_vector"] == {"X2*X3": "1"}


def test_two_piece_standard_representation():
    obj = brace(3, [(1, 3), (2, 3)])
    rep = standard_qcr(obj)
    assert rep.piece_coords == [(1, 2), (3,)]
    assert verify_nonstandard_qcr(rep).is_limit


def test_redundant_piece_representation():
    obj = brace(3, [(1, 3), (2, 3)])
    pieces = [
        coordinate_injection(2, obj, [1, 2]),
        coordinate_injection(1, obj, [3]),
        coordinate_injection(1, obj, [1]),
    ]
    overlaps = [
        (0, coordinate_injection(0, cube(2), []), 1, coordinate_injection(0, cube(1), [])),
        (0, coordinate_injection(1, cube(2), [1]), 2, coordinate_injection(1, cube(1), [1])),
        (1, coordinate_injection(0, cube(1), []), 2, coordinate_injection(0, cube(1), [])),
    ]
    assert verify_nonstandard_qcr(QCRepresentation(obj, pieces, overlaps)).is_limit
    # without the gluing along the first coordinate the extra piece adds freedom
    loose = QCRepresentation(obj, pieces, [overlaps[0], overlaps[2]])
    v = verify_nonstandard_qcr(loose)
    assert not v.is_limit and v.missing_vector is not None


def test_nonstandard_rejects_maps_that_miss():
    obj = brace_n(3, 2)
    other = standard_qcr(cube(2))
    with pytest.raises(ValueError):
        verify_nonstandard_qcr(QCRepresentation(obj, other.pieces, []))


def _permuted(diagram, cone, perm):
    inv = {old: new for new, old in enumerate(perm)}
    objects = [diagram.objects[i] for i in perm]
    arrows = [(inv[s], inv[t], h) for s, t, h in diagram.arrows]
    legs = [cone.legs[i] for i in perm]
    return WeilDiagram(objects, arrows), ConeCandidate(cone.apex, legs)


@given(st.sampled_from([brace_n(3, 2), paren(3), brace(3, [(1, 2)]), brace(4, [(1, 2), (3, 4)])]),
       st.booleans(), st.randoms(use_true_random=False))
def test_verdict_invariant_under_object_order(obj, drop, rnd):
    rep = standard_qcr(obj)
    if drop:
        rep = drop_piece(rep, 0)
    diagram, cone = rep.diagram_and_cone()
    perm = list(range(len(diagram.objects)))
    rnd.shuffle(perm)
    v1 = limit_subspace(diagram, cone)
    v2 = limit_subspace(*_permuted(diagram, cone, perm))
    assert (v1.is_limit, v1.equalizer_dim, v1.rank) == (v2.is_limit, v2.equalizer_dim, v2.rank)


@pytest.mark.parametrize("expr", ["D{7}_3", "D{9}_1", "D^9"])
def test_standard_qcr_caps(expr):
    from weiljet.errors import CapExceeded
    from weiljet.infinitesimal import parse_object

    with pytest.raises(CapExceeded):
        standard_qcr(parse_object(expr))
