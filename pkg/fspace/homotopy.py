"""
Beat points, weak beat points, core and weak reductions, and homeomorphism.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any

import numpy as np

from fspace.canonical import canonical_form
from fspace.complexes import reduced_euler_of_poset
from fspace.config import resolve_limit
from fspace.errors import InternalInvariantViolation, SizeLimitExceeded
from fspace.linalg import determinant, rank_bar
from fspace.models.poset import Poset, SumProfile
from fspace.order import (
    check_point,
    induced_subposet,
    matrix_from_poset,
    punctured_down_set,
    punctured_up_set,
    sum_profile,
)

logger = logging.getLogger(__name__)

UP = "up"
DOWN = "down"
BOTH = "both"

BEAT = "beat"
WEAK_BEAT = "weak-beat"


def _kind(up: bool, down: bool) -> str:
    return BOTH if up and down else UP if up else DOWN


@dataclass(frozen=True)
class BeatPointReport:
    """A beat point with its witnesses.

    ``up_witness`` is the minimum of F̂ (rows r_i − r_j = −e_i);
    ``down_witness`` the maximum of Û (columns c_i − c_j = −e_i).
    """

    index: int
    kind: str
    up_witness: int | None = None
    down_witness: int | None = None

    @property
    def witness(self) -> int:
        if self.up_witness is not None:
            return self.up_witness
        assert self.down_witness is not None
        return self.down_witness

    def to_dict(self, labels: tuple[str, ...]) -> dict[str, Any]:
        return {
            "index": self.index + 1,
            "label": labels[self.index],
            "kind": self.kind,
            "witness": labels[self.witness],
        }


def _row_witness(m: np.ndarray, i: int) -> int | None:
    """Some j with m[i] − m[j] = −e_i, if one exists."""
    target = np.zeros(m.shape[0], dtype=np.int64)
    target[i] = -1
    for j in range(m.shape[0]):
        if j != i and np.array_equal(m[i] - m[j], target):
            return j
    return None


def _order_minimum(p: Poset, points: tuple[int, ...]) -> int | None:
    for j in points:
        if all(p.leq[j, k] for k in points):
            return j
    return None


def _order_maximum(p: Poset, points: tuple[int, ...]) -> int | None:
    for j in points:
        if all(p.leq[k, j] for k in points):
            return j
    return None


def find_beat_points(p: Poset) -> list[BeatPointReport]:
    """Beat points by the row/column criterion, checked against the order.

    Point i is an up beat point iff some row r_j satisfies r_i − r_j = −e_i,
    and a down beat point iff some column satisfies c_i − c_j = −e_i.
    """
    m = matrix_from_poset(p).entries.astype(np.int64)
    reports = []
    for i in range(p.n):
        up = _row_witness(m, i)
        down = _row_witness(m.T, i)
        if up != _order_minimum(p, punctured_up_set(p, i)):
            raise InternalInvariantViolation(f"row criterion disagrees at {p.labels[i]}")
        if down != _order_maximum(p, punctured_down_set(p, i)):
            raise InternalInvariantViolation(f"column criterion disagrees at {p.labels[i]}")
        if up is not None or down is not None:
            reports.append(BeatPointReport(i, _kind(up is not None, down is not None), up, down))
    return reports


def remove_point(p: Poset, i: int) -> Poset:
    check_point(p, i)
    return induced_subposet(p, [j for j in range(p.n) if j != i])


@dataclass(frozen=True)
class ReductionStep:
    """One removal, indexed in the original poset."""

    index: int
    label: str
    move: str
    kind: str
    witness: int | None = None
    sign_flips: int = 1

    def to_dict(self, labels: tuple[str, ...]) -> dict[str, Any]:
        data: dict[str, Any] = {
            "index": self.index + 1,
            "label": self.label,
            "move": self.move,
            "kind": self.kind,
        }
        if self.witness is not None:
            data["witness"] = labels[self.witness]
        return data


@dataclass(frozen=True)
class ReductionTrace:
    original: Poset
    steps: tuple[ReductionStep, ...]
    final: Poset
    kept: tuple[int, ...] = field(default_factory=tuple)

    @property
    def sign_flips(self) -> int:
        return sum(step.sign_flips for step in self.steps)

    def to_dict(self) -> dict[str, Any]:
        return {
            "steps": [step.to_dict(self.original.labels) for step in self.steps],
            "signFlips": self.sign_flips,
            "final": self.final.to_dict(),
        }


def core(p: Poset) -> tuple[Poset, ReductionTrace]:
    """Remove the lowest-index beat point until none is left."""
    current = p
    alive = list(range(p.n))
    steps = []
    while current.n > 1:
        beats = find_beat_points(current)
        if not beats:
            break
        beat = beats[0]
        original = alive[beat.index]
        steps.append(
            ReductionStep(original, p.labels[original], BEAT, beat.kind, alive[beat.witness])
        )
        logger.debug("core: removing beat point %s (%s)", p.labels[original], beat.kind)
        current = remove_point(current, beat.index)
        del alive[beat.index]
    return current, ReductionTrace(p, tuple(steps), current, tuple(alive))


def is_contractible(p: Poset) -> bool:
    return core(p)[0].n == 1


@dataclass(frozen=True)
class WeakBeatPointReport:
    index: int
    kind: str

    def to_dict(self, labels: tuple[str, ...]) -> dict[str, Any]:
        return {"index": self.index + 1, "label": labels[self.index], "kind": self.kind}


def find_weak_beat_points(p: Poset) -> list[WeakBeatPointReport]:
    """Points whose punctured down-set or up-set is nonempty and contractible."""
    reports = []
    for i in range(p.n):
        below = punctured_down_set(p, i)
        above = punctured_up_set(p, i)
        down = bool(below) and is_contractible(induced_subposet(p, below))
        up = bool(above) and is_contractible(induced_subposet(p, above))
        if up or down:
            reports.append(WeakBeatPointReport(i, _kind(up, down)))
    weak = {r.index for r in reports}
    for beat in find_beat_points(p):
        if beat.index not in weak:
            raise InternalInvariantViolation(
                f"beat point {p.labels[beat.index]} is not a weak beat point"
            )
    return reports


def _check_removal(before: Poset, after: Poset, label: str) -> None:
    if determinant(before) != -determinant(after):
        raise InternalInvariantViolation(f"removing {label} did not flip the determinant")
    if rank_bar(before) != rank_bar(after):
        raise InternalInvariantViolation(f"removing {label} changed the rank defect")


def weak_reduce(
    p: Poset, prefer_beat_points: bool = False, check_invariants: bool = False
) -> tuple[Poset, ReductionTrace]:
    """Remove weak beat points until none is left.

    By default the lowest-index weak beat point goes first, recorded as a
    ``beat`` move when it is also a beat point. With ``prefer_beat_points``
    any beat point is removed before a weak beat point.

    Args:
        p: The poset to reduce.
        prefer_beat_points: Remove beat points first.
        check_invariants: Verify the determinant sign flip and the rank
            defect after every removal.
    """
    current = p
    alive = list(range(p.n))
    steps = []
    while current.n > 1:
        beats = {b.index: b for b in find_beat_points(current)}
        weak: list[WeakBeatPointReport] = []
        if prefer_beat_points and beats:
            index = min(beats)
        else:
            weak = find_weak_beat_points(current)
            if not weak:
                break
            index = weak[0].index
        original = alive[index]
        if index in beats:
            beat = beats[index]
            step = ReductionStep(original, p.labels[original], BEAT, beat.kind, alive[beat.witness])
        else:
            kind = next(w.kind for w in weak if w.index == index)
            step = ReductionStep(original, p.labels[original], WEAK_BEAT, kind)
        logger.debug("weak_reduce: removing %s as a %s move", step.label, step.move)
        reduced = remove_point(current, index)
        if check_invariants:
            _check_removal(current, reduced, step.label)
        steps.append(step)
        current = reduced
        del alive[index]
    return current, ReductionTrace(p, tuple(steps), current, tuple(alive))


@dataclass(frozen=True)
class InvariantsBundle:
    abs_det: int
    det: int
    rank_bar: int
    reduced_euler: int
    sum_profile: SumProfile

    @property
    def consistent(self) -> bool:
        return self.abs_det == abs(self.reduced_euler)

    def to_dict(self) -> dict[str, Any]:
        return {
            "absDet": self.abs_det,
            "det": self.det,
            "rankBar": self.rank_bar,
            "reducedEuler": self.reduced_euler,
            "sumProfile": self.sum_profile.to_dict(),
            "consistent": self.consistent,
        }


def invariants_bundle(p: Poset) -> InvariantsBundle:
    det = determinant(p)
    return InvariantsBundle(
        abs_det=abs(det),
        det=det,
        rank_bar=rank_bar(p),
        reduced_euler=reduced_euler_of_poset(p),
        sum_profile=sum_profile(p),
    )


def find_homeomorphism(p: Poset, q: Poset) -> tuple[int, ...] | None:
    """A bijection tau with x ≤ y in p iff tau(x) ≤ tau(y) in q, or None."""
    if p.n != q.n:
        return None
    form_p, form_q = canonical_form(p), canonical_form(q)
    if form_p.key != form_q.key:
        return None
    tau = [0] * p.n
    for a, b in zip(form_p.order, form_q.order):
        tau[a] = b
    if not np.array_equal(p.leq, q.leq[np.ix_(tau, tau)]):
        raise InternalInvariantViolation("canonical orders do not give an isomorphism")
    return tuple(tau)


def homeomorphic(p: Poset, q: Poset) -> bool:
    return find_homeomorphism(p, q) is not None


def find_homeomorphism_bruteforce(
    p: Poset, q: Poset, limit: int | None = None
) -> tuple[int, ...] | None:
    """Permutation search over all n! bijections.

    Raises:
        SizeLimitExceeded: If n is above ``limit`` (default from the config).
    """
    cap = resolve_limit(limit, "bruteforce_limit")
    if p.n > cap:
        raise SizeLimitExceeded("brute-force homeomorphism search", p.n, cap)
    if p.n != q.n:
        return None
    for tau in permutations(range(p.n)):
        if np.array_equal(p.leq, q.leq[np.ix_(tau, tau)]):
            return tuple(tau)
    return None
