"""
Order-theoretic operations on posets and the poset ↔ 0/1 matrix encoding.

A poset on points x_1..x_n is encoded by the matrix with entry 0 at (i, j)
iff x_i ≤ x_j and 1 otherwise. All indices here are 0-based.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import networkx as nx
import numpy as np

from fspace.errors import (
    InternalInvariantViolation,
    InvalidMatrix,
    InvalidPoint,
    NonZeroDiagonal,
)
from fspace.models.poset import MembershipReport, Poset, SumProfile, ZeroOneMatrix

MatrixInput = ZeroOneMatrix | np.ndarray | Sequence[Sequence[int]]


def _as_matrix(m: MatrixInput) -> ZeroOneMatrix:
    return m if isinstance(m, ZeroOneMatrix) else ZeroOneMatrix(m)


def check_point(p: Poset, i: int) -> None:
    if not 0 <= i < p.n:
        raise InvalidPoint(f"point index {i + 1} is out of range 1..{p.n}")


def matrix_from_poset(p: Poset) -> ZeroOneMatrix:
    return ZeroOneMatrix((~p.leq).astype(np.int8))


def validate_membership(m: MatrixInput) -> MembershipReport:
    """Check the three conditions that make a 0/1 matrix a poset matrix.

    Conditions are checked in order (diagonal, asymmetry of zeros, composition
    of zeros); within condition 3 the first witness in (i, j, k) order wins.

    Raises:
        NonSquare: If the input is not square.
        NonBinaryEntry: If an entry is not 0 or 1.
    """
    a = _as_matrix(m).entries
    n = a.shape[0]
    for i in range(n):
        if a[i, i] != 0:
            return MembershipReport(False, 1, ((i, i),))
    for i in range(n):
        for j in range(i + 1, n):
            if a[i, j] == 0 and a[j, i] == 0:
                return MembershipReport(False, 2, ((i, j), (j, i)))
    zero = a == 0
    for i in range(n):
        for j in np.flatnonzero(zero[i]):
            bad = np.flatnonzero(zero[j] & ~zero[i])
            if bad.size:
                k = int(bad[0])
                return MembershipReport(False, 3, ((i, int(j)), (int(j), k), (i, k)))
    return MembershipReport(True)


def poset_from_matrix(m: MatrixInput, labels: Sequence[str] | None = None) -> Poset:
    """Inverse of ``matrix_from_poset``.

    Raises:
        InvalidMatrix: If a membership condition fails; the report is attached.
    """
    matrix = _as_matrix(m)
    report = validate_membership(matrix)
    if not report.ok:
        raise InvalidMatrix(report)
    return Poset(matrix.entries == 0, tuple(labels) if labels else ())


def validate_boolean_idempotent(m: MatrixInput) -> bool:
    """True iff B = 1 − m satisfies B·B = B under Boolean arithmetic.

    Raises:
        NonZeroDiagonal: If m has a nonzero diagonal entry.
    """
    a = _as_matrix(m).entries
    if a.diagonal().any():
        i = int(np.flatnonzero(a.diagonal())[0])
        raise NonZeroDiagonal(f"diagonal entry ({i + 1}, {i + 1}) is not zero")
    b = (1 - a).astype(np.int64)
    return bool(np.array_equal((b @ b) > 0, b > 0))


def opposite(p: Poset) -> Poset:
    return Poset(p.leq.T, p.labels)


def down_set(p: Poset, i: int) -> tuple[int, ...]:
    """U_{x_i}: every point below or equal to x_i."""
    check_point(p, i)
    return tuple(int(j) for j in np.flatnonzero(p.leq[:, i]))


def up_set(p: Poset, i: int) -> tuple[int, ...]:
    """F_{x_i}: every point above or equal to x_i."""
    check_point(p, i)
    return tuple(int(j) for j in np.flatnonzero(p.leq[i, :]))


def cset(p: Poset, i: int) -> tuple[int, ...]:
    """C_{x_i} = U_{x_i} ∩ F_{x_i}, which is always {x_i} in a poset."""
    return tuple(sorted(set(down_set(p, i)) & set(up_set(p, i))))


def punctured_down_set(p: Poset, i: int) -> tuple[int, ...]:
    return tuple(j for j in down_set(p, i) if j != i)


def punctured_up_set(p: Poset, i: int) -> tuple[int, ...]:
    return tuple(j for j in up_set(p, i) if j != i)


def induced_subposet(p: Poset, indices: Sequence[int]) -> Poset:
    """The induced order on ``indices`` (kept in the given order, labels kept)."""
    points = [int(i) for i in indices]
    for i in points:
        check_point(p, i)
    if len(set(points)) != len(points):
        raise InvalidPoint(f"repeated point in {[i + 1 for i in points]}")
    if not points:
        raise InvalidPoint("an induced subposet needs at least one point")
    return Poset(p.leq[np.ix_(points, points)], tuple(p.labels[i] for i in points))


def covers(p: Poset) -> list[tuple[int, int]]:
    """Hasse edges (i, j), x_i ≺ x_j, sorted.

    (i, j) is a cover iff row i plus column j of the matrix vanishes exactly
    at positions i and j.
    """
    m = matrix_from_poset(p).entries.astype(np.int64)
    # zeros[i, j, k] <=> m[i, k] + m[k, j] == 0 <=> x_i <= x_k <= x_j
    zeros = (m[:, None, :] + m.T[None, :, :]) == 0
    counts = zeros.sum(axis=2)
    strict = p.leq.copy()
    np.fill_diagonal(strict, False)
    return [(int(i), int(j)) for i, j in np.argwhere(strict & (counts == 2))]


def linear_extension(p: Poset) -> list[int]:
    """Points sorted by down-set size (then index); a linear extension."""
    sizes = p.leq.sum(axis=0)
    return sorted(range(p.n), key=lambda i: (int(sizes[i]), i))


def point_heights(p: Poset) -> list[int]:
    heights = [0] * p.n
    for i in linear_extension(p):
        below = [j for j in np.flatnonzero(p.leq[:, i]) if j != i]
        heights[i] = max((heights[j] + 1 for j in below), default=0)
    return heights


def point_height(p: Poset, i: int) -> int:
    """Height of U_{x_i}: length of the longest chain ending at x_i."""
    check_point(p, i)
    return point_heights(p)[i]


def height(p: Poset) -> int:
    return max(point_heights(p))


def _comparability_matching(p: Poset) -> tuple[nx.Graph, dict[Any, Any], set[Any]]:
    graph = nx.Graph()
    left = {("l", i) for i in range(p.n)}
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((("r", i) for i in range(p.n)), bipartite=1)
    graph.add_edges_from((("l", i), ("r", j)) for i, j in p.relations())
    matching = nx.algorithms.bipartite.maximum_matching(graph, top_nodes=left)
    return graph, matching, left


def chain_cover(p: Poset) -> list[tuple[int, ...]]:
    """A minimum partition of the points into chains, from a maximum matching."""
    _, matching, _ = _comparability_matching(p)
    successor = {
        u[1]: v[1] for u, v in matching.items() if u[0] == "l" and v[0] == "r"
    }
    has_predecessor = set(successor.values())
    chains = []
    for start in range(p.n):
        if start in has_predecessor:
            continue
        chain = [start]
        while chain[-1] in successor:
            chain.append(successor[chain[-1]])
        chains.append(tuple(chain))
    return chains


def width(p: Poset) -> int:
    """Size of a maximum antichain (Dilworth: n minus a maximum matching)."""
    _, matching, left = _comparability_matching(p)
    matched = sum(1 for u in matching if u in left)
    return p.n - matched


def max_antichain(p: Poset) -> tuple[int, ...]:
    """A maximum antichain: the points untouched by a minimum vertex cover."""
    graph, matching, left = _comparability_matching(p)
    cover = nx.algorithms.bipartite.to_vertex_cover(graph, matching, top_nodes=left)
    antichain = tuple(
        i for i in range(p.n) if ("l", i) not in cover and ("r", i) not in cover
    )
    if len(antichain) != width(p):
        raise InternalInvariantViolation("vertex cover does not give a maximum antichain")
    return antichain


def incomparability_graph(p: Poset) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(p.n))
    comparable = p.leq | p.leq.T
    graph.add_edges_from(
        (i, j) for i in range(p.n) for j in range(i + 1, p.n) if not comparable[i, j]
    )
    return graph


def width_by_cliques(p: Poset) -> int:
    """Width as the largest clique of the incomparability graph (exponential)."""
    return max(len(c) for c in nx.find_cliques(incomparability_graph(p)))


def components(p: Poset) -> list[tuple[int, ...]]:
    """Connected components of the comparability graph, ordered by least point."""
    graph = nx.Graph()
    graph.add_nodes_from(range(p.n))
    graph.add_edges_from(p.relations())
    parts = [tuple(sorted(c)) for c in nx.connected_components(graph)]
    return sorted(parts)


@dataclass(frozen=True)
class BlockForm:
    """Points reordered into consecutive blocks, with the reordered matrix."""

    order: tuple[int, ...]
    blocks: tuple[int, ...]
    matrix: ZeroOneMatrix

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": [i + 1 for i in self.order],
            "blocks": list(self.blocks),
            "rows": self.matrix.rows(),
        }


def component_block_form(p: Poset) -> BlockForm:
    """Reorder points component by component.

    Off-diagonal blocks of the result are all ones; the poset is disconnected
    iff there is more than one block.
    """
    parts = components(p)
    order = tuple(i for part in parts for i in part)
    matrix = matrix_from_poset(p.reordered(order))
    start = 0
    bounds = []
    for part in parts:
        bounds.append((start, start + len(part)))
        start += len(part)
    for a, (s1, e1) in enumerate(bounds):
        for b, (s2, e2) in enumerate(bounds):
            if a != b and not matrix.entries[s1:e1, s2:e2].all():
                raise InternalInvariantViolation(
                    "points of different components are comparable"
                )
    return BlockForm(order, tuple(len(part) for part in parts), matrix)


def width_block_form(p: Poset) -> BlockForm:
    """Reorder points so that a maximum antichain of size l comes first.

    The leading l×l block has ones off the diagonal and every later point is
    comparable to some leading point.
    """
    antichain = max_antichain(p)
    rest = tuple(i for i in range(p.n) if i not in antichain)
    order = antichain + rest
    matrix = matrix_from_poset(p.reordered(order))
    size = len(antichain)
    lead = matrix.entries[:size, :size]
    if not (lead + np.eye(size, dtype=np.int8)).all():
        raise InternalInvariantViolation("leading block is not an antichain")
    for k in range(size, p.n):
        if (matrix.entries[k, :size] & matrix.entries[:size, k]).all():
            raise InternalInvariantViolation(
                f"{p.labels[order[k]]} extends the maximum antichain"
            )
    return BlockForm(order, (size, p.n - size), matrix)


@dataclass(frozen=True)
class ExtremalPoints:
    minimal: tuple[int, ...]
    maximal: tuple[int, ...]
    minimum: int | None
    maximum: int | None

    def to_dict(self, labels: Sequence[str]) -> dict[str, Any]:
        return {
            "minimal": [labels[i] for i in self.minimal],
            "maximal": [labels[i] for i in self.maximal],
            "minimum": labels[self.minimum] if self.minimum is not None else None,
            "maximum": labels[self.maximum] if self.maximum is not None else None,
        }


def extremal_points(p: Poset) -> ExtremalPoints:
    """Minimal/maximal points and the minimum/maximum, read off row and column sums."""
    m = matrix_from_poset(p).entries.astype(np.int64)
    rows, cols = m.sum(axis=1), m.sum(axis=0)
    n = p.n
    minimal = tuple(i for i in range(n) if cols[i] == n - 1)
    maximal = tuple(i for i in range(n) if rows[i] == n - 1)
    minimum = next((i for i in range(n) if rows[i] == 0), None)
    maximum = next((i for i in range(n) if cols[i] == 0), None)
    return ExtremalPoints(minimal, maximal, minimum, maximum)


def is_chain_sequence(p: Poset, indices: Sequence[int]) -> bool:
    """True iff ``indices`` lists distinct points forming x_{i1} < ... < x_{ik}."""
    for i in indices:
        check_point(p, i)
    if len(set(indices)) != len(indices):
        return False
    m = matrix_from_poset(p).entries
    return all(m[a, b] == 0 for a, b in zip(indices, indices[1:]))


def is_chain(p: Poset) -> bool:
    return bool((p.leq | p.leq.T).all())


def sum_profile(p: Poset) -> SumProfile:
    m = matrix_from_poset(p).entries.astype(np.int64)
    return SumProfile(
        tuple(int(v) for v in m.sum(axis=1)),
        tuple(int(v) for v in m.sum(axis=0)),
        int(m.sum()),
    )
