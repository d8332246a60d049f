from fspace.errors import FormatError, InvalidComplex
from fspace.models.complex import SimplicialComplex
from fspace.parsers.base_parser import BaseParser
from fspace.utils.text_utils import data_lines


class ComplexParser(BaseParser):
    """
    ``.cplx`` files: one facet per line as whitespace-separated vertex names.
    Vertices are numbered in order of first appearance; faces contained in
    another listed facet are dropped.
    """

    extension = "cplx"

    def apply_text(self, text: str) -> SimplicialComplex:
        facets = []
        for number, line in data_lines(text):
            tokens = line.split()
            if len(set(tokens)) != len(tokens):
                raise FormatError(f"facet {line!r} repeats a vertex", number)
            facets.append(tokens)
        if not facets:
            raise FormatError("complex file has no facets")
        try:
            return SimplicialComplex.from_facets(facets)
        except InvalidComplex as exc:
            raise FormatError(str(exc)) from exc

    def dump(self, complex_: SimplicialComplex) -> str:
        lines = [" ".join(complex_.vertices[v] for v in facet) for facet in complex_.facets]
        return "\n".join(lines) + "\n"
