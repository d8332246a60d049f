"""
Sums of determinants over induced subposets and det(M + I).

Γ^i is the sum of det over the induced subposets with n − i points; the
empty subposet contributes 1, so the Γ^i add up to det(M + I).
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any

import numpy as np

from fspace.config import resolve_limit
from fspace.errors import InvalidPoint, SizeLimitExceeded
from fspace.homotopy import homeomorphic
from fspace.linalg import antichain_counts, determinant, shifted
from fspace.models.poset import Poset
from fspace.order import induced_subposet, matrix_from_poset

logger = logging.getLogger(__name__)

# the 3-point poset {y1 < y2, y3}
_CHAIN_PLUS_POINT = Poset.from_relations(3, [(0, 1)])


def det_plus_identity(p: Poset) -> int:
    """det(M + I); 1 for chains and 0 otherwise."""
    return determinant(shifted(p, 1))


def _check_size(p: Poset, limit: int | None) -> None:
    cap = resolve_limit(limit, "gamma_limit")
    if p.n > cap:
        raise SizeLimitExceeded("subposet determinant sums", p.n, cap)


def _subset_determinant(m: np.ndarray, subset: tuple[int, ...]) -> int:
    if not subset:
        return 1
    return determinant(m[np.ix_(subset, subset)])


def gamma(p: Poset, i: int, limit: int | None = None) -> int:
    """Γ^i: sum of det over all induced subposets with n − i points.

    Raises:
        InvalidPoint: If i is outside 0..n.
        SizeLimitExceeded: If n is above ``limit`` (default from the config).
    """
    if not 0 <= i <= p.n:
        raise InvalidPoint(f"codimension {i} is outside 0..{p.n}")
    _check_size(p, limit)
    m = matrix_from_poset(p).entries
    return sum(_subset_determinant(m, s) for s in combinations(range(p.n), p.n - i))


@dataclass(frozen=True)
class GammaTable:
    n: int
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    @property
    def total(self) -> int:
        return sum(self.values)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "gamma": list(self.values), "total": self.total}


def gamma_table(p: Poset, limit: int | None = None) -> GammaTable:
    """Γ^0 .. Γ^n in one pass over all 2^n subsets."""
    _check_size(p, limit)
    m = matrix_from_poset(p).entries
    values = [0] * (p.n + 1)
    for size in range(p.n + 1):
        values[p.n - size] = sum(
            _subset_determinant(m, s) for s in combinations(range(p.n), size)
        )
    logger.debug("gamma table for n=%d: %s", p.n, values)
    return GammaTable(p.n, tuple(values))


@dataclass(frozen=True)
class PatternCounts:
    a2: int
    a3: int
    l32: int

    def to_dict(self) -> dict[str, Any]:
        return {"a2": self.a2, "a3": self.a3, "l32": self.l32}


def count_patterns(p: Poset) -> PatternCounts:
    """2- and 3-point antichains, and induced copies of {y1 < y2, y3}."""
    counts = antichain_counts(p)
    l32 = sum(
        1
        for triple in combinations(range(p.n), 3)
        if homeomorphic(induced_subposet(p, triple), _CHAIN_PLUS_POINT)
    )
    return PatternCounts(counts.a2, counts.a3, l32)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class GammaReport:
    table: GammaTable
    patterns: PatternCounts
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "table": self.table.to_dict(),
            "patterns": self.patterns.to_dict(),
            "checks": [check.to_dict() for check in self.checks],
            "passed": self.passed,
        }


def verify_gamma_formulas(p: Poset, limit: int | None = None) -> GammaReport:
    """Check the closed forms for Γ at codimension 1, 2, 3 and the total.

    Identities whose codimension exceeds n are skipped.
    """
    table = gamma_table(p, limit)
    patterns = count_patterns(p)
    n = p.n
    checks = []
    if n >= 1:
        checks.append(IdentityCheck("gamma[n-1] = 0", 0, table[n - 1]))
    if n >= 2:
        checks.append(IdentityCheck("gamma[n-2] = -A2", -patterns.a2, table[n - 2]))
    if n >= 3:
        checks.append(
            IdentityCheck(
                "gamma[n-3] = L32 + 2*A3", patterns.l32 + 2 * patterns.a3, table[n - 3]
            )
        )
    checks.append(IdentityCheck("sum(gamma) = det(M+I)", det_plus_identity(p), table.total))
    return GammaReport(table, patterns, tuple(checks))
