import logging
import os
from pathlib import Path
from typing import Any

from fspace.errors import UnsupportedFormat
from fspace.models.poset import Poset, ZeroOneMatrix
from fspace.order import poset_from_matrix
from fspace.parsers import (
    ActionParser,
    BaseParser,
    ComplexParser,
    MatrixParser,
    PosetParser,
)
from fspace.utils.io_utils import write_json
from fspace.utils.text_utils import get_file_extension

logger = logging.getLogger(__name__)


class FspaceLoader:
    """
    Reads the text formats, choosing the parser from the file extension.

    ``.poset`` gives a Poset, ``.pm`` a ZeroOneMatrix, ``.cplx`` a
    SimplicialComplex and ``.act`` an ActionSpec.
    """

    def __init__(self) -> None:
        self.parsers: dict[str, BaseParser] = {
            parser.extension: parser
            for parser in (PosetParser(), MatrixParser(), ComplexParser(), ActionParser())
        }

    def parser_for(self, file_format: str) -> BaseParser:
        file_format = file_format.lower().lstrip(".")
        if file_format not in self.parsers:
            raise UnsupportedFormat(f"Unsupported file format: {file_format or '(none)'}")
        return self.parsers[file_format]

    def load(self, file_path: str | Path) -> Any:
        """Parse a file.

        Raises:
            FileNotFoundError: If the file does not exist
            UnsupportedFormat: If the extension has no parser
            FormatError: If the contents are malformed
        """
        if not os.path.exists(file_path):
            raise FileNotFoundError(f"File not found: {file_path}")
        parser = self.parser_for(get_file_extension(file_path))
        logger.debug("loading %s with %s", file_path, type(parser).__name__)
        return parser.apply(file_path)

    def load_text(self, text: str, file_format: str = "poset") -> Any:
        return self.parser_for(file_format).apply_text(text)

    def load_poset(self, file_path: str | Path) -> Poset:
        """A poset from a ``.poset`` file or a poset matrix in a ``.pm`` file.

        Raises:
            InvalidMatrix: If the matrix does not encode a poset.
        """
        loaded = self.load(file_path)
        if isinstance(loaded, ZeroOneMatrix):
            return poset_from_matrix(loaded)
        if not isinstance(loaded, Poset):
            raise UnsupportedFormat(f"{file_path} does not describe a poset")
        return loaded

    def load_directory(
        self, dir_path: str | Path, pattern: str = "*.poset"
    ) -> list[tuple[Path, Any]]:
        """Every matching file under ``dir_path``, sorted by path."""
        paths = sorted(Path(dir_path).rglob(pattern))
        logger.info("loading %d files from %s", len(paths), dir_path)
        return [(path, self.load(path)) for path in paths]

    def dump(self, obj: Any, file_format: str) -> str:
        return self.parser_for(file_format).dump(obj)

    def export_json(
        self, payload: dict[str, Any] | list[dict[str, Any]], output_file: str | Path
    ) -> None:
        """
        Export a payload (usually a ``to_dict()`` result) as byte-stable JSON.
        Args:
            payload: Data to export
            output_file: Path to the output file
        """
        write_json(output_file, payload)
