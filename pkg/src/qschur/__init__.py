"""Quantised Schur algebras, their Borel subalgebras and Weyl module resolutions."""

from .exactalg import GENERIC, VERIFICATION_RINGS, LaurentInt, RingSpec, SparseMatrix, rank
from .hecke import HeckeAlgebra, MembershipError, hecke_algebra
from .schur import SchurAlgebra, SchurElem, schur_algebra

__all__ = [
    "GENERIC",
    "VERIFICATION_RINGS",
    "LaurentInt",
    "RingSpec",
    "SparseMatrix",
    "rank",
    "HeckeAlgebra",
    "MembershipError",
    "hecke_algebra",
    "SchurAlgebra",
    "SchurElem",
    "schur_algebra",
]
