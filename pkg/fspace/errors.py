"""
Exception hierarchy for fspace.

Domain errors derive from ``FspaceError`` (a ``ValueError``) and map to exit
code 1 on the command line; malformed input derives from ``FormatError`` and
maps to exit code 2.
"""

from typing import Any


class FspaceError(ValueError):
    """Base class for every domain error raised by fspace."""

    exit_code = 1


class FormatError(FspaceError):
    """Malformed input text or matrix shape.

    Args:
        message: Description of the problem.
        line: 1-based line number in the offending file, if known.
    """

    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NonSquare(FormatError):
    pass


class NonBinaryEntry(FormatError):
    pass


class UnsupportedFormat(FormatError):
    pass


class ConfigError(FspaceError):
    pass


class InvalidPoset(FspaceError):
    """The relation given is not a partial order on a nonempty set."""


class InvalidComplex(FspaceError):
    """Facets are empty, nested, or name unknown vertices."""


class InvalidPoint(FspaceError):
    """A point index is out of range or repeated."""


class InvalidMatrix(FspaceError):
    """A 0/1 matrix fails one of the three membership conditions.

    The failing ``MembershipReport`` is available as ``report``.
    """

    def __init__(self, report: Any):
        self.report = report
        super().__init__(f"matrix is not a poset matrix: {report.describe()}")


class NonZeroDiagonal(FspaceError):
    pass


class SizeLimitExceeded(FspaceError):
    def __init__(self, what: str, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds the configured limit {limit}")


class NotAGroup(FspaceError):
    pass


class NotOrderPreserving(FspaceError):
    def __init__(self, element: int, pair: tuple[int, int]):
        self.element = element
        self.pair = pair
        i, j = pair
        super().__init__(
            f"permutation {element + 1} does not preserve the order on the pair "
            f"({i + 1}, {j + 1})"
        )


class NotFree(FspaceError):
    def __init__(self, element: int, point: int):
        self.element = element
        self.point = point
        super().__init__(
            f"permutation {element + 1} is not the identity but fixes point {point + 1}"
        )


class OrbitSizeMismatch(FspaceError):
    pass


class NotZ2(FspaceError):
    pass


class InternalInvariantViolation(RuntimeError):
    """A theorem-backed identity failed to hold; this is always a bug."""
