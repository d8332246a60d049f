from fspace.parsers.action_parser import ActionParser, ActionSpec
from fspace.parsers.base_parser import BaseParser
from fspace.parsers.complex_parser import ComplexParser
from fspace.parsers.matrix_parser import MatrixParser
from fspace.parsers.poset_parser import PosetParser

__all__ = [
    "ActionParser",
    "ActionSpec",
    "BaseParser",
    "ComplexParser",
    "MatrixParser",
    "PosetParser",
]
