"""Exact computations with Weil algebras, infinitesimal objects and jets.

Everything is rational and symbolic: Weil algebras are monomial quotients of
``Q[X1..Xn]``, limits are decided by exact linear algebra, and jet conditions
are checked as polynomial identities in generic coefficients.
"""

from __future__ import annotations

from .errors import WeilJetError
from .infinitesimal import SimplicialInfObject, parse_object
from .kernel import BACKEND
from .limits import standard_qcr
from .poly import MonomialIdeal, Polynomial, parse_poly
from .weil import WeilAlgebra, WeilElement, WeilHom, build_algebra, hom_make

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "MonomialIdeal",
    "Polynomial",
    "SimplicialInfObject",
    "WeilAlgebra",
    "WeilElement",
    "WeilHom",
    "WeilJetError",
    "build_algebra",
    "hom_make",
    "parse_object",
    "parse_poly",
    "standard_qcr",
]
