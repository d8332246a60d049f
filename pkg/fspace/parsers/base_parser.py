from pathlib import Path
from typing import Any, TextIO

from fspace.errors import FormatError


class BaseParser:
    """
    Base class for the text file formats.
    """

    extension = ""

    def apply(self, file_input: str | Path | TextIO) -> Any:
        """Parse a file.

        Args:
            file_input: Either a file path or a text stream.

        Raises:
            FormatError: If the file is not UTF-8 text.
        """
        if isinstance(file_input, (str, Path)):
            try:
                with open(file_input, encoding="utf-8") as f:
                    text = f.read()
            except UnicodeDecodeError as exc:
                raise FormatError(
                    f"{file_input} is not UTF-8 text (byte {exc.start}: {exc.reason})"
                ) from exc
            return self.apply_text(text)
        return self.apply_text(file_input.read())

    def apply_text(self, text: str) -> Any:
        raise NotImplementedError("Subclasses must implement this method.")

    def dump(self, obj: Any) -> str:
        raise NotImplementedError("Subclasses must implement this method.")
