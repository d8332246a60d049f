"""
Text helpers shared by the file-format parsers.
"""

import os
from collections.abc import Iterator
from pathlib import Path

from fspace.errors import FormatError


def get_file_extension(file_path: str | Path) -> str:
    return os.path.splitext(file_path)[1].lower()[1:]


def data_lines(text: str) -> Iterator[tuple[int, str]]:
    """(1-based line number, stripped line), skipping blanks and '#' comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def parse_index(token: str, n: int, line: int) -> int:
    """A 1-based point index token, returned 0-based."""
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"expected a point index, got {token!r}", line) from None
    if not 1 <= value <= n:
        raise FormatError(f"point index {value} is out of range 1..{n}", line)
    return value - 1
