"""
Core data model: finite posets, their 0/1 matrices, and small report types.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from fspace.errors import (
    InternalInvariantViolation,
    InvalidPoset,
    NonBinaryEntry,
    NonSquare,
)


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def _read_only(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class Poset:
    """A labelled finite partial order.

    Points are identified by their 0-based position; labels are display
    metadata only. ``leq[i, j]`` is True iff point i is below or equal to
    point j.

    Args:
        leq: n×n boolean relation (copied and made read-only).
        labels: Distinct point names. Defaults to ``x1 .. xn``.
    """

    leq: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        leq = np.asarray(self.leq)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise InvalidPoset(f"relation must be square, got shape {leq.shape}")
        n = leq.shape[0]
        if n == 0:
            raise InvalidPoset("a poset needs at least one point")
        leq = _read_only(leq.astype(bool))
        object.__setattr__(self, "leq", leq)

        labels = tuple(str(label) for label in self.labels) or default_labels(n)
        if len(labels) != n:
            raise InvalidPoset(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise InvalidPoset("point labels must be distinct")
        object.__setattr__(self, "labels", labels)

        if not leq.diagonal().all():
            i = int(np.flatnonzero(~leq.diagonal())[0])
            raise InvalidPoset(f"relation is not reflexive at {labels[i]}")
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = (int(v) for v in np.argwhere(both)[0])
            raise InvalidPoset(
                f"relation is not antisymmetric: {labels[i]} and {labels[j]}"
            )
        as_int = leq.astype(np.int64)
        composed = (as_int @ as_int) > 0
        if (composed & ~leq).any():
            i, k = (int(v) for v in np.argwhere(composed & ~leq)[0])
            raise InvalidPoset(
                f"relation is not transitive: {labels[i]} and {labels[k]} "
                "are linked through a third point but not related"
            )

    @property
    def n(self) -> int:
        return int(self.leq.shape[0])

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.labels, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, labels={list(self.labels)})"

    def less(self, i: int, j: int) -> bool:
        """Strict order test."""
        return i != j and bool(self.leq[i, j])

    def relations(self) -> list[tuple[int, int]]:
        """All strict pairs (i, j) with i < j in the order, sorted."""
        strict = self.leq.copy()
        np.fill_diagonal(strict, False)
        return [(int(i), int(j)) for i, j in np.argwhere(strict)]

    def reordered(self, order: Sequence[int]) -> "Poset":
        """Point k of the result is point ``order[k]`` of this poset."""
        index = np.asarray(order, dtype=np.int64)
        if sorted(index.tolist()) != list(range(self.n)):
            raise InvalidPoset(f"{list(order)} is not a permutation of the points")
        return Poset(
            self.leq[np.ix_(index, index)],
            tuple(self.labels[i] for i in index),
        )

    def with_labels(self, labels: Sequence[str] | None = None) -> "Poset":
        return Poset(self.leq, tuple(labels) if labels else ())

    @classmethod
    def from_relations(
        cls,
        n: int,
        relations: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Poset":
        """Build a poset from strict pairs (i, j) meaning x_i < x_j.

        The reflexive-transitive closure is taken; pairs may be any subset of
        the order (cover relations are the usual input).

        Raises:
            InvalidPoset: On n < 1, out-of-range indices, or a cyclic relation.
        """
        if n < 1:
            raise InvalidPoset("a poset needs at least one point")
        leq = np.eye(n, dtype=bool)
        for i, j in relations:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidPoset(f"relation ({i + 1}, {j + 1}) is out of range 1..{n}")
            if i == j:
                raise InvalidPoset(f"relation ({i + 1}, {j + 1}) relates a point to itself")
            leq[i, j] = True
        # Warshall closure
        for k in range(n):
            leq |= np.outer(leq[:, k], leq[k, :])
        cyclic = leq & leq.T
        np.fill_diagonal(cyclic, False)
        if cyclic.any():
            i, j = (int(v) for v in np.argwhere(cyclic)[0])
            names = labels if labels else default_labels(n)
            raise InvalidPoset(
                f"relations contain a cycle through {names[i]} and {names[j]}"
            )
        return cls(leq, tuple(labels) if labels else ())

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "labels": list(self.labels),
            "relations": [[i + 1, j + 1] for i, j in self.relations()],
        }


def _as_binary_array(entries: Any) -> np.ndarray:
    if isinstance(entries, np.ndarray):
        entries = entries.tolist()
    rows = list(entries)
    if not rows:
        raise NonSquare("matrix is empty")
    n = len(rows)
    for r, row in enumerate(rows):
        if not isinstance(row, Sequence):
            raise NonSquare(f"row {r + 1} is not a sequence of entries")
        if len(row) != n:
            raise NonSquare(f"row {r + 1} has {len(row)} entries, expected {n}")
        for c, value in enumerate(row):
            if isinstance(value, str) or value not in (0, 1):
                raise NonBinaryEntry(
                    f"entry ({r + 1}, {c + 1}) is {value!r}, expected 0 or 1"
                )
    return np.array(rows, dtype=np.int8)


@dataclass(frozen=True, eq=False)
class ZeroOneMatrix:
    """A square 0/1 matrix, not necessarily the matrix of a poset.

    Raises:
        NonSquare: If the entries are not an n×n grid with n ≥ 1.
        NonBinaryEntry: If an entry is outside {0, 1}.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _read_only(_as_binary_array(self.entries)))

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZeroOneMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def __getitem__(self, index: tuple[int, int]) -> int:
        return int(self.entries[index])

    def rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def transpose(self) -> "ZeroOneMatrix":
        return ZeroOneMatrix(self.entries.T)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "rows": self.rows()}

    def __str__(self) -> str:
        return "\n".join("".join(str(v) for v in row) for row in self.rows())


@dataclass(frozen=True)
class SumProfile:
    """Row sums R, column sums C and their common total Σ."""

    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        if sum(self.row_sums) != self.total or sum(self.col_sums) != self.total:
            raise InternalInvariantViolation(
                "row and column sums do not add up to the total"
            )

    def multiset_key(self) -> tuple[tuple[int, ...], tuple[int, ...], int]:
        """Invariant under relabelling: sorted sums plus the total."""
        return tuple(sorted(self.row_sums)), tuple(sorted(self.col_sums)), self.total

    def to_dict(self) -> dict[str, Any]:
        return {
            "rowSums": list(self.row_sums),
            "colSums": list(self.col_sums),
            "total": self.total,
        }


@dataclass(frozen=True)
class MembershipReport:
    """Result of checking the three matrix conditions of a poset encoding.

    ``condition`` is 1 (zero diagonal), 2 (no symmetric off-diagonal zeros) or
    3 (zeros compose); ``witness`` holds the 0-based entries involved.
    """

    ok: bool
    condition: int | None = None
    witness: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        cells = [f"a[{i + 1}][{j + 1}]" for i, j in self.witness]
        if self.condition == 1:
            return f"condition 1 violated: {cells[0]}=1 on the diagonal"
        if self.condition == 2:
            return f"condition 2 violated: {cells[0]}=0 and {cells[1]}=0"
        return (
            f"condition 3 violated: {cells[0]}=0 and {cells[1]}=0 "
            f"but {cells[2]}=1"
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "condition": self.condition,
            "witness": [[i + 1, j + 1] for i, j in self.witness],
        }
