"""
Named poset families and random constructions.
"""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from fspace.errors import FspaceError
from fspace.models.action import Permutation
from fspace.models.poset import Poset
from fspace.order import opposite, punctured_down_set, up_set


def chain(n: int) -> Poset:
    """x1 < x2 < ... < xn."""
    return Poset.from_relations(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return Poset.from_relations(n, [])


def fence(n: int) -> Poset:
    """The zigzag x1 < x2 > x3 < x4 > ..."""
    relations = [(k, k + 1) if k % 2 == 0 else (k + 1, k) for k in range(n - 1)]
    return Poset.from_relations(n, relations)


def cyclic_blowup(p: Poset, m: int) -> tuple[Poset, list[Permutation]]:
    """Replace every point by an m-point antichain, cyclically permuted.

    Point (d, g) has index d·m + g and lies below (e, h) iff d < e in p. The
    returned permutations are the m rotations g ↦ g + s mod m, identity first.
    """
    if m < 1:
        raise FspaceError(f"copy count must be positive, got {m}")
    n = p.n * m
    leq = np.zeros((n, n), dtype=bool)
    for d in range(p.n):
        for e in range(p.n):
            if p.less(d, e):
                leq[d * m:(d + 1) * m, e * m:(e + 1) * m] = True
    np.fill_diagonal(leq, True)
    labels = [f"{label}.{g + 1}" for label in p.labels for g in range(m)]
    perms = [
        tuple(d * m + (g + s) % m for d in range(p.n) for g in range(m)) for s in range(m)
    ]
    return Poset(leq, tuple(labels)), perms


def sphere_model_with_action(n: int) -> tuple[Poset, list[Permutation]]:
    """The 2(n+1)-point model of the n-sphere with its antipodal involution."""
    if n < 0:
        raise FspaceError(f"sphere dimension must be nonnegative, got {n}")
    blown, perms = cyclic_blowup(chain(n + 1), 2)
    return blown.with_labels(), perms


def sphere_model(n: int) -> Poset:
    """Two incomparable points per height 0..n, each above every lower point."""
    return sphere_model_with_action(n)[0]


def disjoint_copies(p: Poset, m: int) -> tuple[Poset, list[Permutation]]:
    """m disjoint copies of p, permuted cyclically. Copy c occupies c·n .. c·n + n − 1."""
    if m < 1:
        raise FspaceError(f"copy count must be positive, got {m}")
    n = p.n
    leq = np.zeros((n * m, n * m), dtype=bool)
    for c in range(m):
        leq[c * n:(c + 1) * n, c * n:(c + 1) * n] = p.leq
    labels = [f"{label}.{c + 1}" for c in range(m) for label in p.labels]
    perms = [
        tuple(((c + s) % m) * n + i for c in range(m) for i in range(n)) for s in range(m)
    ]
    return Poset(leq, tuple(labels)), perms


def circle8() -> Poset:
    """x1 < x5 > x2 < x6 > x3 < x7 > x4 < x8 > x1."""
    return Poset.from_relations(
        8, [(0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (0, 7)]
    )


def twocircles8() -> Poset:
    """Two disjoint 4-point circles: x1, x2 < x5, x6 and x3, x4 < x7, x8."""
    return Poset.from_relations(
        8, [(0, 4), (1, 4), (1, 5), (0, 5), (2, 6), (3, 6), (3, 7), (2, 7)]
    )


def weakbeat4() -> Poset:
    """a < b < x and a < c < x: x is a weak beat point but not a beat point."""
    return Poset.from_relations(4, [(0, 1), (0, 2), (1, 3), (2, 3)], ["a", "b", "c", "x"])


SIZED_FAMILIES: dict[str, Callable[[int], Poset]] = {
    "chain": chain,
    "antichain": antichain,
    "fence": fence,
    "sphere_model": sphere_model,
}

FIXED_FAMILIES: dict[str, Callable[[], Poset]] = {
    "circle8": circle8,
    "twocircles8": twocircles8,
    "weakbeat4": weakbeat4,
}

FAMILY_NAMES = tuple(SIZED_FAMILIES) + tuple(FIXED_FAMILIES)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    size: int | None = None

    def __post_init__(self) -> None:
        if self.name not in FAMILY_NAMES:
            raise FspaceError(
                f"Unknown family: {self.name} (expected one of {', '.join(FAMILY_NAMES)})"
            )
        if self.name in SIZED_FAMILIES and self.size is None:
            raise FspaceError(f"family {self.name} needs a size")


def make_family(spec: FamilySpec) -> Poset:
    if spec.name in FIXED_FAMILIES:
        return FIXED_FAMILIES[spec.name]()
    assert spec.size is not None
    return SIZED_FAMILIES[spec.name](spec.size)


def random_poset(
    n: int, rng: np.random.Generator | None = None, density: float = 0.3
) -> Poset:
    """Transitive closure of random pairs i < j (by index), each kept with ``density``."""
    rng = rng if rng is not None else np.random.default_rng()
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Poset.from_relations(n, pairs)


def _fresh_label(p: Poset) -> str:
    k = p.n + 1
    while f"x{k}" in p.labels:
        k += 1
    return f"x{k}"


def _attach_below(p: Poset, x: int, rng: np.random.Generator) -> Poset:
    """New point y < x with F_y = {y} ∪ F_x and a random ideal of Û_x below it."""
    below = punctured_down_set(p, x)
    chosen = [z for z in below if rng.random() < 0.5]
    ideal = {w for z in chosen for w in below if p.leq[w, z]}
    n = p.n
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = p.leq
    leq[n, n] = True
    for w in up_set(p, x):
        leq[n, w] = True
    for z in ideal:
        leq[z, n] = True
    return Poset(leq, p.labels + (_fresh_label(p),))


def attach_beat_point(p: Poset, rng: np.random.Generator | None = None) -> Poset:
    """Add a point that is a beat point of the result; removing it gives p back.

    The new point goes below a random x (its up-set is F_x plus itself) or,
    with equal probability, dually above it.
    """
    rng = rng if rng is not None else np.random.default_rng()
    x = int(rng.integers(p.n))
    if rng.random() < 0.5:
        return _attach_below(p, x, rng)
    return opposite(_attach_below(opposite(p), x, rng))
