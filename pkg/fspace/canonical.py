"""
Canonical labelling of posets, shared by homeomorphism tests and enumeration.

Points are first coloured by (|U|, |F|, height) and the colouring is refined
by the colour multisets of the punctured down- and up-sets until stable. The
canonical order then places colour classes in colour order and, within each
class, searches for the lexicographically least matrix by backtracking.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from fspace.models.poset import Poset
from fspace.order import matrix_from_poset, point_heights


@dataclass(frozen=True)
class CanonicalForm:
    """``order[k]`` is the point placed at canonical position k; ``key`` is
    the size followed by the reordered matrix read segment by segment."""

    key: tuple[int, ...]
    order: tuple[int, ...]


def _rank(signatures: list[tuple]) -> list[int]:
    ranks = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
    return [ranks[sig] for sig in signatures]


def refined_colours(p: Poset) -> list[int]:
    """Stable colouring invariant under relabelling."""
    heights = point_heights(p)
    down = [np.flatnonzero(p.leq[:, i]) for i in range(p.n)]
    up = [np.flatnonzero(p.leq[i, :]) for i in range(p.n)]
    colours = _rank([(len(down[i]), len(up[i]), heights[i]) for i in range(p.n)])
    while True:
        signatures = [
            (
                colours[i],
                tuple(sorted(colours[j] for j in down[i] if j != i)),
                tuple(sorted(colours[j] for j in up[i] if j != i)),
            )
            for i in range(p.n)
        ]
        refined = _rank(signatures)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


def _twins(m: np.ndarray, u: int, v: int) -> bool:
    """Swapping u and v is an automorphism of the matrix."""
    others = [w for w in range(m.shape[0]) if w not in (u, v)]
    return (
        m[u, v] == m[v, u]
        and np.array_equal(m[u, others], m[v, others])
        and np.array_equal(m[others, u], m[others, v])
    )


def _search(m: np.ndarray, colours: list[int]) -> CanonicalForm:
    n = m.shape[0]
    slots = sorted(range(n), key=lambda i: colours[i])
    cell_of_slot = [colours[i] for i in slots]
    best: list[tuple[int, ...] | None] = [None]
    best_order: list[tuple[int, ...]] = [()]

    def segment(order: list[int], v: int) -> tuple[int, ...]:
        return tuple(int(m[v, w]) for w in order) + tuple(int(m[w, v]) for w in order)

    def extend(order: list[int], prefix: tuple[int, ...], remaining: set[int]) -> None:
        current = best[0]
        if current is not None and prefix > current[: len(prefix)]:
            return
        depth = len(order)
        if depth == n:
            if current is None or prefix < current:
                best[0] = prefix
                best_order[0] = tuple(order)
            return
        cell = cell_of_slot[depth]
        candidates = sorted(v for v in remaining if colours[v] == cell)
        by_segment = {v: segment(order, v) for v in candidates}
        least = min(by_segment.values())
        tried: list[int] = []
        for v in candidates:
            if by_segment[v] != least:
                continue
            if any(_twins(m, u, v) for u in tried):
                continue
            tried.append(v)
            order.append(v)
            remaining.discard(v)
            extend(order, prefix + least, remaining)
            remaining.add(v)
            order.pop()

    extend([], (), set(range(n)))
    assert best[0] is not None
    return CanonicalForm((n,) + best[0], best_order[0])


@lru_cache(maxsize=65536)
def canonical_form(p: Poset) -> CanonicalForm:
    """Labelling-independent key with the point order that realises it.

    Two posets are homeomorphic iff their keys are equal.
    """
    m = matrix_from_poset(p).entries
    return _search(m, refined_colours(p))


def canonical_key(p: Poset) -> tuple[int, ...]:
    return canonical_form(p).key


def canonical_poset(p: Poset) -> Poset:
    """The poset reordered into canonical order, with default labels."""
    return p.reordered(canonical_form(p).order).with_labels()
