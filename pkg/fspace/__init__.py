"""
fspace: finite T0-spaces (finite posets) encoded as 0/1 matrices.

Exact integer invariants (determinant, rank defect, characteristic
polynomial, subposet determinant sums), core and weak beat point reductions,
order complexes and face posets, free group actions, and enumeration up to
isomorphism.
"""

from fspace.census import CensusReport, CensusRow, census_for_size, run_census, write_census
from fspace.config import FspaceConfig
from fspace.errors import FormatError, FspaceError, InvalidMatrix, InvalidPoset
from fspace.homotopy import core, homeomorphic, invariants_bundle, weak_reduce
from fspace.linalg import char_poly, determinant, rank, rank_bar
from fspace.loader import FspaceLoader
from fspace.models import (
    GroupAction,
    IntPolynomial,
    MembershipReport,
    Poset,
    SimplicialComplex,
    SumProfile,
    ZeroOneMatrix,
)
from fspace.order import matrix_from_poset, poset_from_matrix, validate_membership

__version__ = "0.1.0"
__all__ = [
    "CensusReport",
    "CensusRow",
    "FormatError",
    "FspaceConfig",
    "FspaceError",
    "FspaceLoader",
    "GroupAction",
    "IntPolynomial",
    "InvalidMatrix",
    "InvalidPoset",
    "MembershipReport",
    "Poset",
    "SimplicialComplex",
    "SumProfile",
    "ZeroOneMatrix",
    "census_for_size",
    "char_poly",
    "core",
    "determinant",
    "homeomorphic",
    "invariants_bundle",
    "matrix_from_poset",
    "poset_from_matrix",
    "rank",
    "rank_bar",
    "run_census",
    "validate_membership",
    "weak_reduce",
    "write_census",
]
