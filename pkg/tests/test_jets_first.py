from __future__ import annotations

import pytest

from weiljet.jets import (
    HOLONOMIC,
    NON_HOLONOMIC,
    SEMI_HOLONOMIC,
    FirstApproachTower,
    SectionJet,
    check_first,
    coordinate_names,
    fiber_dim,
    from_section_jet,
    relatedness,
)
from weiljet.poly import parse_poly


def test_coordinate_layout():
    assert fiber_dim(1, 1, 0) == 1 and fiber_dim(2, 3, 2) == 2 * 16
    assert coordinate_names(1, 1, 2) == ["y1", "B1_1_1", "B2_1_1", "B2_2_1"]


def test_tower_from_polynomial_section():
    s = SectionJet.from_polynomials([parse_poly("X^3", 1)], [2], 2)
    t = from_section_jet(s, "first", 2)
    # level 1: s'(2) = 12; level 2 differentiates (s, s') -> (s', s'') = (12, 12)
    assert t.fiber == (8,)
    assert t.levels == [((12,),), ((12,), (12,))]


@pytest.mark.parametrize("m,e,k", [(1, 1, 1), (1, 1, 2), (2, 1, 2), (1, 2, 3), (2, 2, 2)])
def test_holonomic_towers(m, e, k):
    t = from_section_jet(SectionJet.symbolic(m, e, k), "first", k)
    verdict, report = check_first(t)
    assert verdict == HOLONOMIC, report.failed()


def test_order_one_has_only_linear_conditions():
    t = from_section_jet(SectionJet.symbolic(2, 1, 1), "first", 1)
    verdict, report = check_first(t)
    assert verdict == HOLONOMIC
    assert all(e.name.startswith("level 1: ") for e in report.entries)
    assert not any("related" in e.name or "holonomy" in e.name for e in report.entries)


def test_unrelated_level_is_non_holonomic():
    t = from_section_jet(SectionJet.symbolic(2, 1, 2), "first", 2)
    bad = t.with_entry(2, 0, 1, 1)
    verdict, report = check_first(bad)
    assert verdict == NON_HOLONOMIC
    assert "level 2: related to level 1" in report.failed()
    assert not any(f.startswith("level 1") for f in report.failed())
    upper, lower = relatedness(bad, 2)
    assert upper != lower


def test_asymmetric_level_is_semi_holonomic():
    t = from_section_jet(SectionJet.symbolic(2, 1, 2), "first", 2)
    semi = t.with_entry(2, 1, 1, 1)
    verdict, report = check_first(semi)
    assert verdict == SEMI_HOLONOMIC
    assert report.failed() == ["level 2: holonomy composites agree"]


def test_one_dimensional_base_is_always_symmetric():
    t = from_section_jet(SectionJet.symbolic(1, 1, 2), "first", 2)
    verdict, _ = check_first(t.with_entry(2, 1, 0, 5))
    assert verdict == HOLONOMIC


def test_order_three_perturbations():
    t = from_section_jet(SectionJet.symbolic(2, 1, 3), "first", 3)
    rows = fiber_dim(1, 2, 1)
    assert check_first(t.with_entry(3, 0, 0, 1))[0] == NON_HOLONOMIC
    assert check_first(t.with_entry(3, rows + 1, 0, 1))[0] == SEMI_HOLONOMIC


def test_invalid_shape_rejected():
    with pytest.raises(ValueError):
        FirstApproachTower([0], [0], [[[1, 2]]])


def test_equality_and_truncation():
    t = from_section_jet(SectionJet.symbolic(1, 1, 3), "first", 3)
    assert t.truncate(2) == from_section_jet(SectionJet.symbolic(1, 1, 3), "first", 2)
    assert t != t.with_entry(1, 0, 0, 1)
