from fspace.errors import FormatError, InvalidPoset
from fspace.models.poset import Poset, default_labels
from fspace.order import covers
from fspace.parsers.base_parser import BaseParser
from fspace.utils.text_utils import data_lines, parse_index

LABELS_PREFIX = "labels:"


def _cycle_line(n: int, relations: list[tuple[int, int]], numbers: list[int]) -> int | None:
    """Line of the first relation that closes a cycle."""
    for k in range(1, len(relations) + 1):
        try:
            Poset.from_relations(n, relations[:k])
        except InvalidPoset:
            return numbers[k - 1]
    return None


class PosetParser(BaseParser):
    """
    ``.poset`` files: a point count, an optional ``labels:`` line, then one
    ``i j`` line (1-based) per relation x_i < x_j. The closure is taken, so
    cover relations are enough.
    """

    extension = "poset"

    def apply_text(self, text: str) -> Poset:
        lines = list(data_lines(text))
        if not lines:
            raise FormatError("missing point count")
        number, first = lines[0]
        try:
            n = int(first)
        except ValueError:
            raise FormatError(f"expected the point count, got {first!r}", number) from None
        if n < 1:
            raise FormatError(f"point count must be positive, got {n}", number)

        labels: list[str] | None = None
        relations: list[tuple[int, int]] = []
        numbers: list[int] = []
        for number, line in lines[1:]:
            if line.lower().startswith(LABELS_PREFIX):
                if labels is not None or relations:
                    raise FormatError("the labels line must follow the point count", number)
                labels = line[len(LABELS_PREFIX):].split()
                if len(labels) != n:
                    raise FormatError(f"expected {n} labels, got {len(labels)}", number)
                if len(set(labels)) != n:
                    raise FormatError("point labels must be distinct", number)
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise FormatError(f"expected a relation 'i j', got {line!r}", number)
            i, j = (parse_index(token, n, number) for token in tokens)
            if i == j:
                raise FormatError(f"relation {i + 1} {j + 1} relates a point to itself", number)
            relations.append((i, j))
            numbers.append(number)
        try:
            return Poset.from_relations(n, relations, labels)
        except InvalidPoset as exc:
            raise FormatError(str(exc), _cycle_line(n, relations, numbers)) from exc

    def dump(self, poset: Poset) -> str:
        """Point count, labels when not the defaults, and the cover relations."""
        lines = [str(poset.n)]
        if poset.labels != default_labels(poset.n):
            lines.append(f"{LABELS_PREFIX} " + " ".join(poset.labels))
        lines.extend(f"{i + 1} {j + 1}" for i, j in covers(poset))
        return "\n".join(lines) + "\n"
