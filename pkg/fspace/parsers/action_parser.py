from dataclasses import dataclass

from fspace.errors import FormatError
from fspace.models.action import Permutation
from fspace.parsers.base_parser import BaseParser
from fspace.utils.text_utils import data_lines, parse_index


@dataclass(frozen=True)
class ActionSpec:
    """Parsed group elements; validate against a poset with ``validate_action``."""

    names: tuple[str, ...]
    images: tuple[Permutation, ...]


class ActionParser(BaseParser):
    """
    ``.act`` files: one element per line, ``name: p(1) p(2) ... p(n)`` in
    1-based image notation. The first line is expected to be the identity.
    """

    extension = "act"

    def apply_text(self, text: str) -> ActionSpec:
        names: list[str] = []
        images: list[Permutation] = []
        size: int | None = None
        for number, line in data_lines(text):
            name, sep, rest = line.partition(":")
            if not sep or not name.strip():
                raise FormatError(f"expected 'name: images', got {line!r}", number)
            tokens = rest.split()
            if size is None:
                size = len(tokens)
            if not tokens or len(tokens) != size:
                raise FormatError(f"expected {size} images, got {len(tokens)}", number)
            if name.strip() in names:
                raise FormatError(f"element {name.strip()!r} is listed twice", number)
            names.append(name.strip())
            images.append(tuple(parse_index(token, size, number) for token in tokens))
        if not images:
            raise FormatError("action file lists no elements")
        return ActionSpec(tuple(names), tuple(images))

    def dump(self, spec: ActionSpec) -> str:
        lines = [
            f"{name}: " + " ".join(str(v + 1) for v in perm)
            for name, perm in zip(spec.names, spec.images)
        ]
        return "\n".join(lines) + "\n"
