"""
Finite groups acting on a poset by permutations of its points.
"""

from dataclasses import dataclass
from typing import Any

from fspace.models.poset import Poset

Permutation = tuple[int, ...]


def compose(first: Permutation, second: Permutation) -> Permutation:
    """Product read left to right: apply ``first``, then ``second``."""
    return tuple(second[first[x]] for x in range(len(first)))


def invert(perm: Permutation) -> Permutation:
    inverse = [0] * len(perm)
    for x, image in enumerate(perm):
        inverse[image] = x
    return tuple(inverse)


@dataclass(frozen=True)
class GroupAction:
    """A validated free action of a permutation group on a poset.

    ``elements[0]`` is the identity. ``table[i][j]`` is the index of the
    product ``g_i·g_j`` (g_i applied first). Built by
    ``fspace.actions.validate_action``.
    """

    poset: Poset
    elements: tuple[Permutation, ...]
    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, perm: Permutation) -> int:
        return self.elements.index(perm)

    def inverse_index(self, i: int) -> int:
        return self.index_of(invert(self.elements[i]))

    def product_index(self, i: int, j: int) -> int:
        return self.table[i][j]

    def orbit(self, point: int) -> tuple[int, ...]:
        return tuple(sorted({g[point] for g in self.elements}))

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "elements": {
                name: [image + 1 for image in perm]
                for name, perm in zip(self.names, self.elements)
            },
            "table": [[self.names[k] for k in row] for row in self.table],
        }
