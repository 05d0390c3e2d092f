"""Jets of sections in three models: iterated 1-jets, cubes ``D^n`` and lines ``D_n``."""

from .candidate import SECOND, THIRD, JetCandidate, input_name
from .first import (
    HOLONOMIC,
    NON_HOLONOMIC,
    SEMI_HOLONOMIC,
    FirstApproachTower,
    check_first,
    coordinate_names,
    fiber_dim,
    holonomy_composites,
    relatedness,
    tower_from_section,
)
from .second import (
    check_second,
    check_second_tangential,
    compose_jets,
    induced_map,
    naturality,
    pair_product_factorization,
    project_second,
    project_to,
    simplicial_compatibility,
)
from .sections import SectionJet, from_section_jet
from .third import check_third, check_third_tangential, project_third
from .transmogrify import phi, psi, psi_by_elimination, universal_phi

__all__ = [
    "SECOND", "THIRD", "JetCandidate", "input_name",
    "HOLONOMIC", "SEMI_HOLONOMIC", "NON_HOLONOMIC",
    "FirstApproachTower", "check_first", "coordinate_names", "fiber_dim",
    "holonomy_composites", "relatedness", "tower_from_section",
    "check_second", "check_second_tangential", "compose_jets", "induced_map",
    "naturality", "pair_product_factorization", "project_second", "project_to",
    "simplicial_compatibility",
    "SectionJet", "from_section_jet",
    "check_third", "check_third_tangential", "project_third",
    "phi", "psi", "psi_by_elimination", "universal_phi",
]
