"""
Finite abstract simplicial complexes given by their facets.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any

from fspace.errors import InvalidComplex

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on named vertices, stored as sorted vertex-index facets.

    Invariants: at least one facet, every facet nonempty, no facet contained
    in another. Use ``from_facets`` to build one from redundant input.
    """

    vertices: tuple[str, ...]
    facets: tuple[Simplex, ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidComplex("vertex names must be distinct")
        facets = tuple(sorted(tuple(sorted(set(f))) for f in self.facets))
        if not facets:
            raise InvalidComplex("a complex needs at least one facet")
        for facet in facets:
            if not facet:
                raise InvalidComplex("facets must be nonempty")
            if facet[0] < 0 or facet[-1] >= len(self.vertices):
                raise InvalidComplex(f"facet {facet} uses an unknown vertex")
        for a, b in combinations(facets, 2):
            if set(a) <= set(b) or set(b) <= set(a):
                raise InvalidComplex(
                    f"facet {self.name_of(a)} and {self.name_of(b)} are nested"
                )
        used = {v for f in facets for v in f}
        if len(used) != len(self.vertices):
            raise InvalidComplex("every vertex must lie in some facet")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def from_facets(
        cls, facets: Iterable[Iterable[str]], vertices: Sequence[str] | None = None
    ) -> "SimplicialComplex":
        """Build a complex from named facets, dropping non-maximal ones.

        Vertices are numbered in first-appearance order unless given.
        """
        named = [tuple(dict.fromkeys(f)) for f in facets]
        names = list(vertices) if vertices is not None else []
        if vertices is None:
            for facet in named:
                for v in facet:
                    if v not in names:
                        names.append(v)
        index = {v: i for i, v in enumerate(names)}
        try:
            sets = {frozenset(index[v] for v in facet) for facet in named if facet}
        except KeyError as exc:
            raise InvalidComplex(f"unknown vertex {exc.args[0]!r}") from None
        maximal = [s for s in sets if not any(s < other for other in sets)]
        return cls(tuple(names), tuple(tuple(sorted(s)) for s in maximal))

    def name_of(self, simplex: Simplex) -> str:
        return "{" + ",".join(self.vertices[v] for v in simplex) + "}"

    @cached_property
    def simplices(self) -> tuple[Simplex, ...]:
        """Every nonempty face, ordered by dimension then lexicographically."""
        faces: set[Simplex] = set()
        for facet in self.facets:
            for size in range(1, len(facet) + 1):
                faces.update(combinations(facet, size))
        return tuple(sorted(faces, key=lambda s: (len(s), s)))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def f_vector(self) -> list[int]:
        """Number of d-simplices for d = 0 .. dimension."""
        counts = [0] * (self.dimension + 1)
        for simplex in self.simplices:
            counts[len(simplex) - 1] += 1
        return counts

    def to_dict(self) -> dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "facets": [[self.vertices[v] for v in f] for f in self.facets],
            "fVector": self.f_vector(),
        }
