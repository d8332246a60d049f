"""
Posets up to isomorphism, by two independent methods, and the fence check.
"""

import logging
from functools import lru_cache
from itertools import product

import numpy as np

from fspace.canonical import canonical_form, canonical_poset
from fspace.config import resolve_limit
from fspace.errors import FspaceError, SizeLimitExceeded
from fspace.families import fence
from fspace.linalg import char_poly
from fspace.models.polynomial import IntPolynomial
from fspace.models.poset import Poset
from fspace.order import poset_from_matrix, validate_membership

logger = logging.getLogger(__name__)

# 3^(n(n-1)/2) candidate matrices
BRUTEFORCE_ENUMERATION_LIMIT = 5


def ideals(p: Poset) -> list[tuple[int, ...]]:
    """Every down-closed subset, the empty one included."""
    found = []
    for mask in range(1 << p.n):
        members = [i for i in range(p.n) if mask >> i & 1]
        below = (int(j) for i in members for j in np.flatnonzero(p.leq[:, i]))
        if all(mask >> j & 1 for j in below):
            found.append(tuple(members))
    return found


def _add_maximal_point(p: Poset, ideal: tuple[int, ...]) -> Poset:
    n = p.n
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = p.leq
    leq[n, n] = True
    leq[list(ideal), n] = True
    return Poset(leq)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Poset, ...]:
    if n == 1:
        return (Poset(np.ones((1, 1), dtype=bool)),)
    found: dict[tuple[int, ...], Poset] = {}
    for smaller in _classes(n - 1):
        for ideal in ideals(smaller):
            candidate = _add_maximal_point(smaller, ideal)
            key = canonical_form(candidate).key
            if key not in found:
                found[key] = canonical_poset(candidate)
    logger.debug("enumeration: %d classes on %d points", len(found), n)
    return tuple(found[key] for key in sorted(found))


def enumerate_posets(n: int, limit: int | None = None) -> list[Poset]:
    """One representative per isomorphism class of n-point posets.

    Every poset arises from a smaller one by adding a maximal point above a
    down-closed set; candidates are deduplicated by canonical form. The result
    is sorted by canonical key and each poset is in canonical order.

    Raises:
        SizeLimitExceeded: If n is above ``limit`` (default from the config).
    """
    if n < 1:
        raise FspaceError(f"poset size must be positive, got {n}")
    cap = resolve_limit(limit, "enumeration_limit")
    if n > cap:
        raise SizeLimitExceeded("poset enumeration", n, cap)
    classes = list(_classes(n))
    logger.info("enumerated %d posets on %d points", len(classes), n)
    return classes


def enumerate_posets_bruteforce(n: int, limit: int | None = None) -> list[Poset]:
    """The same classes from raw 0/1 matrices.

    Each unordered pair of points is incomparable or ordered one way or the
    other; candidates failing the composition condition are dropped and the
    rest deduplicated by canonical form.
    """
    if n < 1:
        raise FspaceError(f"poset size must be positive, got {n}")
    cap = limit if limit is not None else BRUTEFORCE_ENUMERATION_LIMIT
    if n > cap:
        raise SizeLimitExceeded("brute-force poset enumeration", n, cap)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found: dict[tuple[int, ...], Poset] = {}
    for states in product((0, 1, 2), repeat=len(pairs)):
        m = np.zeros((n, n), dtype=np.int8)
        for (i, j), state in zip(pairs, states):
            # 0: incomparable, 1: x_i < x_j, 2: x_j < x_i
            m[i, j] = 1 if state != 1 else 0
            m[j, i] = 1 if state != 2 else 0
        if not validate_membership(m).ok:
            continue
        poset = poset_from_matrix(m)
        key = canonical_form(poset).key
        if key not in found:
            found[key] = canonical_poset(poset)
    return [found[key] for key in sorted(found)]


def fence_closed_form(n: int) -> IntPolynomial:
    """(−1)^n λ (λ − (n − 2)) (λ + 1)^(n − 2)."""
    lam = IntPolynomial.variable()
    return (-1) ** n * lam * IntPolynomial.linear(n - 2) * IntPolynomial.linear(-1) ** (n - 2)


def fence_charpoly_check(n: int) -> bool:
    """char_poly(fence(n)) equals the closed form up to a global sign."""
    if n < 2:
        raise FspaceError(f"fences need at least 2 points, got {n}")
    actual = char_poly(fence(n))
    expected = fence_closed_form(n)
    return actual == expected or actual == -expected
