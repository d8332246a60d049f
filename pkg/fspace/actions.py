"""
Free order-preserving group actions and the block structure they force.

Permutation products are read left to right: ``g·h`` applies g first.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from fspace.errors import (
    InternalInvariantViolation,
    NotAGroup,
    NotFree,
    NotOrderPreserving,
    NotZ2,
    OrbitSizeMismatch,
)
from fspace.linalg import determinant
from fspace.models.action import GroupAction, Permutation, compose, invert
from fspace.models.poset import Poset, ZeroOneMatrix
from fspace.order import matrix_from_poset


def validate_action(
    p: Poset, perms: Sequence[Sequence[int]], names: Sequence[str] | None = None
) -> GroupAction:
    """Check that ``perms`` (0-based images) is a group acting freely by automorphisms.

    Checks run in this order: permutations with the identity first and closed
    under products, order preservation, freeness, orbit size.

    Raises:
        NotAGroup: Bad permutation, identity not first, repeats, or no closure.
        NotOrderPreserving: Some element breaks x ≤ y ⇔ g(x) ≤ g(y).
        NotFree: Some non-identity element fixes a point.
        OrbitSizeMismatch: n is not a multiple of the group order.
    """
    n = p.n
    elements: list[Permutation] = []
    for k, perm in enumerate(perms):
        images = tuple(int(v) for v in perm)
        if sorted(images) != list(range(n)):
            raise NotAGroup(f"element {k + 1} is not a permutation of 1..{n}")
        elements.append(images)
    if not elements:
        raise NotAGroup("the group has no elements")
    identity = tuple(range(n))
    if elements[0] != identity:
        raise NotAGroup("the first element must be the identity")
    if len(set(elements)) != len(elements):
        raise NotAGroup("the elements are not distinct")
    position = {g: k for k, g in enumerate(elements)}
    table = []
    for g in elements:
        row = []
        for h in elements:
            product = compose(g, h)
            if product not in position:
                raise NotAGroup(
                    f"product of elements {position[g] + 1} and {position[h] + 1} "
                    "is not in the group"
                )
            row.append(position[product])
        table.append(tuple(row))

    for k, g in enumerate(elements):
        moved = p.leq[np.ix_(g, g)]
        if not np.array_equal(moved, p.leq):
            i, j = (int(v) for v in np.argwhere(moved != p.leq)[0])
            raise NotOrderPreserving(k, (i, j))
    for k, g in enumerate(elements[1:], start=1):
        fixed = [x for x in range(n) if g[x] == x]
        if fixed:
            raise NotFree(k, fixed[0])
    if n % len(elements):
        raise OrbitSizeMismatch(
            f"{n} points cannot split into orbits of size {len(elements)}"
        )
    labels = tuple(names) if names else tuple(f"g{k + 1}" for k in range(len(elements)))
    return GroupAction(p, tuple(elements), labels, tuple(table))


def fundamental_domain(a: GroupAction) -> tuple[int, ...]:
    """The lowest point of every orbit."""
    seen: set[int] = set()
    domain = []
    for x in range(a.poset.n):
        if x not in seen:
            domain.append(x)
            seen.update(a.orbit(x))
    return tuple(domain)


@dataclass(frozen=True)
class BlockForm:
    """Points ordered D, g_2 D, ..., g_m D and the matrix cut into m×m blocks."""

    domain: tuple[int, ...]
    order: tuple[int, ...]
    matrix: ZeroOneMatrix
    group_order: int

    @property
    def block_size(self) -> int:
        return len(self.domain)

    def block(self, i: int, j: int) -> np.ndarray:
        b = self.block_size
        return self.matrix.entries[i * b:(i + 1) * b, j * b:(j + 1) * b]

    def to_dict(self, names: Sequence[str]) -> dict[str, Any]:
        return {
            "domain": [x + 1 for x in self.domain],
            "order": [x + 1 for x in self.order],
            "blockSize": self.block_size,
            "blocks": {
                f"A{i + 1},{j + 1}": self.block(i, j).tolist()
                for i in range(self.group_order)
                for j in range(self.group_order)
            },
            "elements": list(names),
        }


def block_form(p: Poset, a: GroupAction) -> BlockForm:
    """Reorder the points by orbits and verify A_{i,j} = A_{1,s} for g_s = g_j·g_i⁻¹.

    Raises:
        InternalInvariantViolation: If a block disagrees with the first block row.
    """
    domain = fundamental_domain(a)
    order = tuple(g[d] for g in a.elements for d in domain)
    form = BlockForm(domain, order, matrix_from_poset(p.reordered(order)), a.order)
    for i in range(a.order):
        inverse = invert(a.elements[i])
        for j in range(a.order):
            s = a.index_of(compose(a.elements[j], inverse))
            if not np.array_equal(form.block(i, j), form.block(0, s)):
                raise InternalInvariantViolation(
                    f"block ({i + 1}, {j + 1}) differs from block (1, {s + 1})"
                )
    return form


@dataclass(frozen=True)
class Z2Factorization:
    plus_det: int
    minus_det: int
    det: int

    @property
    def product(self) -> int:
        return self.plus_det * self.minus_det

    def to_dict(self) -> dict[str, Any]:
        return {
            "detPlus": self.plus_det,
            "detMinus": self.minus_det,
            "product": self.product,
            "det": self.det,
        }


def z2_det_factorization(p: Poset, a: GroupAction) -> Z2Factorization:
    """det M = det(A11 + A12) · det(A11 − A12) for a free involution.

    Raises:
        NotZ2: If the group does not have order 2.
    """
    if a.order != 2:
        raise NotZ2(f"the group has order {a.order}, expected 2")
    form = block_form(p, a)
    a11 = form.block(0, 0).astype(np.int64)
    a12 = form.block(0, 1).astype(np.int64)
    result = Z2Factorization(determinant(a11 + a12), determinant(a11 - a12), determinant(p))
    if result.product != result.det:
        raise InternalInvariantViolation(
            f"block determinants multiply to {result.product}, not {result.det}"
        )
    return result


@dataclass(frozen=True)
class OrbitSumReport:
    group_order: int
    down_total: int
    up_total: int

    @property
    def divisible(self) -> bool:
        m = self.group_order
        return self.down_total % m == 0 and self.up_total % m == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "groupOrder": self.group_order,
            "downTotal": self.down_total,
            "upTotal": self.up_total,
            "divisible": self.divisible,
        }


def orbit_sum_check(p: Poset, a: GroupAction) -> OrbitSumReport:
    """Σ|U_x| and Σ|F_x|, both multiples of |G| under a free action."""
    down_total = int(p.leq.sum(axis=0).sum())
    up_total = int(p.leq.sum(axis=1).sum())
    report = OrbitSumReport(a.order, down_total, up_total)
    if not report.divisible:
        raise InternalInvariantViolation(
            f"orbit sums {report.down_total} are not multiples of {a.order}"
        )
    return report
