from __future__ import annotations

import pytest
import sympy

import _oracle
from weiljet.errors import AlgebraMismatch
from weiljet.infinitesimal import brace_n, coordinate_injection, cube
from weiljet.jets import (
    SECOND,
    JetCandidate,
    SectionJet,
    check_second,
    check_second_tangential,
    compose_jets,
    from_section_jet,
    induced_map,
    naturality,
    pair_product_factorization,
    project_second,
    project_to,
    simplicial_compatibility,
)
from weiljet.jets.second import compose_mappings
from weiljet.poly import Polynomial, mono_exps, parse_poly
from weiljet.prolong import ProlongedPoint, functor_apply

X1, X2, X12 = ((0, 1),), ((1, 1),), ((0, 1), (1, 1))


def agrees_with_oracle(cand, derivs, order):
    expected = _oracle.section_body(derivs, cand.m, cand.e, order, cand.approach, cand.n)
    nv = cand.algebra.nvars
    for (j, mo), p in cand.body.items():
        if sympy.expand(_oracle.to_sympy(p) - expected[(j, mono_exps(mo, nv))]) != 0:
            return False
    return True


@pytest.mark.parametrize("m,e,n", [(1, 1, 1), (1, 1, 2), (2, 1, 2), (1, 2, 3), (2, 2, 2)])
def test_from_section_jet_matches_oracle(m, e, n):
    s = SectionJet.symbolic(m, e, n)
    cand = from_section_jet(s, SECOND, n)
    assert agrees_with_oracle(cand, _oracle.symbolic_derivs(m, e, n), n)


def test_from_section_jet_examples():
    sq = SectionJet.from_polynomials([parse_poly("X^2", 1)], [0], 1)
    c = from_section_jet(sq, SECOND, 1)
    assert c.fiber == (0,) and c.body[(0, X1)] == 0
    sq = SectionJet.from_polynomials([parse_poly("X^2", 1)], [1], 2)
    c = from_section_jet(sq, SECOND, 2)
    g10, g01, g11 = (Polynomial.symbol(n) for n in ("g1_10", "g1_01", "g1_11"))
    assert c.fiber == (1,)
    assert c.body == {(0, X1): 2 * g10, (0, X2): 2 * g01, (0, X12): 2 * g11 + 2 * g10 * g01}
    lin = SectionJet.from_polynomials([parse_poly("3*X1 - X2 + 2", 2)], [5, 1], 3)
    c = from_section_jet(lin, SECOND, 3)
    assert all(p.degree() <= 1 for p in c.body.values())


def test_holonomic_passes_check_second():
    s = SectionJet.symbolic(1, 1, 2)
    report = check_second(from_section_jet(s, SECOND, 2))
    assert report.passed
    names = [e.name for e in report.entries]
    assert names[:3] == ["projection", "scaling axis 1", "scaling axis 2"]
    assert "symmetry swap 1<->2" in names


def test_zero_body_passes():
    z = JetCandidate(SECOND, 3, [0, 0], [1])
    assert check_second(z).passed
    assert check_second_tangential(z).passed
    assert project_second(z) == JetCandidate(SECOND, 2, [0, 0], [1])


def test_wrong_degree_fails_scaling():
    c = JetCandidate(SECOND, 2, [0], [0], {(0, X1): parse_poly("g1_10^2")})
    report = check_second(c)
    failed = report.failed()
    assert "scaling axis 1" in failed
    assert "projection" not in failed
    assert report.entry("scaling axis 1").witness is not None


def test_asymmetric_candidate_fails_symmetry_only():
    c = JetCandidate(SECOND, 2, [0], [0], {(0, X1): parse_poly("g1_10")})
    assert check_second(c).failed() == ["symmetry swap 1<->2"]


def test_bidegree_one_one_terms_pass():
    c = JetCandidate(SECOND, 2, [0], [0], {(0, X12): parse_poly("g1_10*g1_01 + g1_11")})
    report = check_second(c)
    assert report.passed
    assert report.entry("nilpotent scaling axis 1 order 2").detail == {
        "max_axis_exponent": 1, "nilpotent_order": 3,
    }


def test_tangential_examples():
    for n in (1, 2, 3):
        s = SectionJet.symbolic(1, 1, n)
        assert check_second_tangential(from_section_jet(s, SECOND, n)).passed
    d1 = JetCandidate(SECOND, 1, [0], [0], {(0, X1): parse_poly("7*g1_1")})
    report = check_second_tangential(d1)
    assert report.passed and not any("last-product" in e.name for e in report.entries)


def test_perturbed_candidate_fails_only_last_product():
    s = SectionJet.symbolic(1, 1, 2)
    c = from_section_jet(s, SECOND, 2)
    body = dict(c.body)
    body[(0, X12)] = body[(0, X12)] + parse_poly("g1_11")
    bad = c.with_body(body)
    assert check_second(bad).passed
    assert check_second_tangential(bad).failed() == ["order 2: last-product compatibility"]


@pytest.mark.parametrize("m,e,n", [(1, 1, 2), (2, 1, 3), (1, 2, 3)])
def test_projection_is_truncation(m, e, n):
    s = SectionJet.symbolic(m, e, n)
    high = from_section_jet(s, SECOND, n)
    assert project_second(high) == from_section_jet(s, SECOND, n - 1)
    assert project_to(high, n - 2) == project_second(project_second(high))
    assert simplicial_compatibility(high).passed


def test_project_requires_second():
    s = SectionJet.symbolic(1, 1, 2)
    with pytest.raises(AlgebraMismatch):
        project_second(from_section_jet(s, "third", 2))


def test_induced_map_on_the_cube_is_the_jet():
    s = SectionJet.symbolic(1, 1, 2)
    nabla = from_section_jet(s, SECOND, 2)
    gamma = nabla.generic_input()
    assert induced_map(nabla, cube(2), gamma) == nabla(gamma)


def test_induced_map_restricts_to_projections():
    s = SectionJet.symbolic(1, 1, 3)
    nabla = from_section_jet(s, SECOND, 3)
    obj = brace_n(3, 2)
    gamma = ProlongedPoint.symbolic(obj.algebra, s.base)
    out = induced_map(nabla, obj, gamma)
    low = project_to(nabla, 2)
    for coords in [(2, 3), (1, 3), (1, 2)]:
        h = coordinate_injection(2, obj, coords).weil_hom()
        assert functor_apply(h, out) == low(functor_apply(h, gamma))


def test_induced_map_dimension_guard():
    s = SectionJet.symbolic(1, 1, 1)
    nabla = from_section_jet(s, SECOND, 1)
    with pytest.raises(ValueError):
        induced_map(nabla, brace_n(3, 2), ProlongedPoint.symbolic(brace_n(3, 2).algebra, (0,)))


def test_naturality_along_the_pair_product_steps():
    s = SectionJet.symbolic(1, 1, 3)
    nabla = from_section_jet(s, SECOND, 3)
    steps = pair_product_factorization()
    assert [str(st.target) for st in steps] == [
        "D{4;(1,2)}", "D{5;(1,2),(3,4)}", "D{6;(1,2),(3,4),(5,6)}", "D(3)",
    ]
    for step in steps:
        assert naturality(nabla, step).passed, str(step.target)


def test_pair_product_composite():
    steps = pair_product_factorization()
    h = steps[0].weil_hom()
    for step in steps[1:]:
        h = step.weil_hom().then(h)
    imgs = [str(p) for p in h.images]
    assert imgs == ["X1*X2", "X1*X3", "X2*X3"]
    assert compose_mappings(steps[0], steps[1]).images == steps[1].weil_hom().then(steps[0].weil_hom()).images


def test_compose_with_trivial_upper_jet():
    s = SectionJet.symbolic(1, 1, 2)
    lower = from_section_jet(s, SECOND, 2)
    upper = JetCandidate(SECOND, 2, lower.base + lower.fiber, [])
    assert compose_jets(upper, lower) == lower


def test_compose_holonomic_jets():
    # lower: y = x^2 + x at x = 1; upper: z = x*y + y^2 at (1, 2)
    s = parse_poly("X1^2 + X1", 1)
    t = parse_poly("X1*X2 + X2^2", 2)
    lower = from_section_jet(SectionJet.from_polynomials([s], [1], 2), SECOND, 2)
    upper = from_section_jet(SectionJet.from_polynomials([t], [1, 2], 2), SECOND, 2)
    both = compose_jets(upper, lower)
    composite = t.substitute([parse_poly("X1", 1), s])
    expected = from_section_jet(SectionJet.from_polynomials([s, composite], [1], 2), SECOND, 2)
    assert both == expected
    assert check_second_tangential(both).passed
    assert project_second(both) == compose_jets(project_second(upper), project_second(lower))


def test_compose_order_zero():
    lower = JetCandidate(SECOND, 0, [1], [2])
    upper = JetCandidate(SECOND, 0, [1, 2], [3])
    both = compose_jets(upper, lower)
    assert both.fiber == (2, 3) and both.body == {}


def test_compose_point_mismatch():
    lower = JetCandidate(SECOND, 1, [1], [2])
    upper = JetCandidate(SECOND, 1, [1, 5], [3])
    with pytest.raises(ValueError):
        compose_jets(upper, lower)
