"""
Exact integer linear algebra on small square matrices.

Everything here works with Python integers; no value is ever rounded.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from math import factorial
from typing import Any

import numpy as np

from fspace.errors import FspaceError, InternalInvariantViolation, NonSquare
from fspace.models.polynomial import IntPolynomial
from fspace.models.poset import Poset, ZeroOneMatrix
from fspace.order import matrix_from_poset

IntMatrix = ZeroOneMatrix | Poset | np.ndarray | Sequence[Sequence[int]]


def int_rows(m: IntMatrix) -> list[list[int]]:
    """A fresh list-of-lists copy of a square integer matrix.

    Posets are replaced by their 0/1 matrix. An empty input is the 0×0 matrix.
    """
    if isinstance(m, Poset):
        m = matrix_from_poset(m)
    if isinstance(m, ZeroOneMatrix):
        m = m.entries
    if isinstance(m, np.ndarray):
        m = m.tolist()
    rows = [[int(v) for v in row] for row in m]
    if any(len(row) != len(rows) for row in rows):
        raise NonSquare(f"expected a square matrix, got {len(rows)} rows of uneven length")
    return rows


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    The 0×0 determinant is 1.
    """
    a = int_rows(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def cofactor_determinant(m: IntMatrix) -> int:
    """Laplace expansion along the first row (exponential)."""
    a = int_rows(m)

    def expand(rows: list[list[int]]) -> int:
        if not rows:
            return 1
        total = 0
        for j, value in enumerate(rows[0]):
            if value == 0:
                continue
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * value * expand(minor)
        return total

    return expand(a)


def rank(m: IntMatrix) -> int:
    """Rank over the rationals by fraction-free elimination."""
    a = int_rows(m)
    n = len(a)
    r = 0
    previous = 1
    for c in range(n):
        pivot = next((i for i in range(r, n) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // previous
            a[i][c] = 0
        previous = a[r][c]
        r += 1
        if r == n:
            break
    return r


def rank_bar(p: Poset) -> int:
    """n minus the rank of the poset's matrix."""
    return p.n - rank(p)


def _as_array(m: IntMatrix, dtype: Any) -> np.ndarray:
    rows = int_rows(m)
    array = np.zeros((len(rows), len(rows)), dtype=dtype)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            array[i, j] = value
    return array


def shifted(m: IntMatrix, shift: int) -> list[list[int]]:
    """m + shift·I."""
    a = int_rows(m)
    for i in range(len(a)):
        a[i][i] += shift
    return a


def char_poly(m: IntMatrix) -> IntPolynomial:
    """p(λ) = det(m − λI), by n+1 exact evaluations and interpolation.

    The values det(m − kI), k = 0..n, are turned into forward differences;
    the j-th difference divided by j! is the coefficient of the falling
    factorial λ(λ−1)…(λ−j+1).
    """
    n = len(int_rows(m))
    values = [determinant(shifted(m, -k)) for k in range(n + 1)]
    result = IntPolynomial.constant(0)
    falling = IntPolynomial.constant(1)
    differences = values
    for j in range(n + 1):
        quotient, remainder = divmod(differences[0], factorial(j))
        if remainder:
            raise InternalInvariantViolation(
                f"forward difference {differences[0]} is not divisible by {j}!"
            )
        result = result + falling * quotient
        falling = falling * IntPolynomial.linear(j)
        differences = [b - a for a, b in zip(differences, differences[1:])]
    if result.leading_coefficient != (-1) ** n or result(0) != values[0]:
        raise InternalInvariantViolation("interpolated polynomial fails its checks")
    return result


def matrix_power(m: IntMatrix, k: int) -> np.ndarray:
    """Exact m^k as an object-dtype array of Python integers."""
    if k < 0:
        raise FspaceError(f"power must be nonnegative, got {k}")
    a = _as_array(m, object)
    result = np.identity(a.shape[0], dtype=np.int64).astype(object)
    for _ in range(k):
        result = result @ a
    return result


def trace_power(m: IntMatrix, k: int) -> int:
    return int(sum(matrix_power(m, k).diagonal()))


def symmetric_part(m: IntMatrix) -> np.ndarray:
    """Entrywise product m ∘ mᵀ: edges present in both directions."""
    a = _as_array(m, np.int64)
    return a * a.T


def _exact_quotient(value: int, divisor: int, what: str) -> int:
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise InternalInvariantViolation(f"{what} = {value} is not divisible by {divisor}")
    return quotient


def three_cycle_count(m: IntMatrix) -> int:
    """Directed 3-cycles of the loop-free digraph with adjacency m."""
    return _exact_quotient(trace_power(m, 3), 3, "tr(M^3)")


@dataclass(frozen=True)
class AntichainCounts:
    a2: int
    a3: int

    def to_dict(self) -> dict[str, Any]:
        return {"a2": self.a2, "a3": self.a3}


def antichain_counts(p: Poset) -> AntichainCounts:
    """2- and 3-point antichains from traces.

    A2 = tr(M²)/2. Three-point antichains are the triangles of the
    bidirectional part S = M ∘ Mᵀ, so A3 = tr(S³)/6; tr(M³) itself also
    counts each induced "chain of two plus a point" three times.
    """
    m = matrix_from_poset(p)
    a2 = _exact_quotient(trace_power(m, 2), 2, "tr(M^2)")
    a3 = _exact_quotient(trace_power(symmetric_part(m), 3), 6, "tr(S^3)")
    return AntichainCounts(a2, a3)
