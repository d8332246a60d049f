from fspace.models.action import GroupAction
from fspace.models.complex import SimplicialComplex
from fspace.models.polynomial import IntPolynomial
from fspace.models.poset import MembershipReport, Poset, SumProfile, ZeroOneMatrix

__all__ = [
    "GroupAction",
    "IntPolynomial",
    "MembershipReport",
    "Poset",
    "SimplicialComplex",
    "SumProfile",
    "ZeroOneMatrix",
]
