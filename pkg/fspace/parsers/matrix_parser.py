from fspace.errors import FormatError, NonBinaryEntry, NonSquare
from fspace.models.poset import ZeroOneMatrix
from fspace.parsers.base_parser import BaseParser
from fspace.utils.text_utils import data_lines


class MatrixParser(BaseParser):
    """
    ``.pm`` files: n lines of n characters from {0, 1}. The matrix is not
    checked for membership here; see ``fspace.order.validate_membership``.
    """

    extension = "pm"

    def apply_text(self, text: str) -> ZeroOneMatrix:
        lines = list(data_lines(text))
        if not lines:
            raise FormatError("matrix file has no rows")
        n = len(lines)
        rows = []
        for number, line in lines:
            row = line.replace(" ", "")
            if len(row) != n:
                raise NonSquare(f"row has {len(row)} entries, expected {n}", number)
            bad = next((c for c in row if c not in "01"), None)
            if bad is not None:
                raise NonBinaryEntry(f"entry {bad!r} is not 0 or 1", number)
            rows.append([int(c) for c in row])
        return ZeroOneMatrix(rows)

    def dump(self, matrix: ZeroOneMatrix) -> str:
        return str(matrix) + "\n"
