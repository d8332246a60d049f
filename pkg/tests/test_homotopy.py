import pytest

from fspace.canonical import canonical_key, canonical_poset, refined_colours
from fspace.errors import SizeLimitExceeded
from fspace.families import (
    antichain,
    attach_beat_point,
    chain,
    circle8,
    fence,
    random_poset,
    sphere_model,
    twocircles8,
    weakbeat4,
)
from fspace.homotopy import (
    BEAT,
    WEAK_BEAT,
    core,
    find_beat_points,
    find_homeomorphism,
    find_homeomorphism_bruteforce,
    find_weak_beat_points,
    homeomorphic,
    invariants_bundle,
    is_contractible,
    remove_point,
    weak_reduce,
)
from fspace.linalg import char_poly, determinant, rank_bar
from fspace.order import sum_profile


def labels_of(p, reports):
    return [p.labels[r.index] for r in reports]


class TestBeatPoints:
    def test_chain(self):
        beats = find_beat_points(chain(3))
        assert labels_of(chain(3), beats) == ["x1", "x2", "x3"]
        assert [b.kind for b in beats] == ["up", "both", "down"]
        assert [b.witness for b in beats] == [1, 2, 1]

    def test_vposet(self, vposet):
        beats = find_beat_points(vposet)
        assert labels_of(vposet, beats) == ["x1", "x2"]
        assert all(b.kind == "up" for b in beats)

    def test_minimal_models_have_none(self, s1):
        assert find_beat_points(s1) == []
        assert find_beat_points(circle8()) == []
        assert find_beat_points(antichain(2)) == []

    def test_single_point_has_none(self):
        assert find_beat_points(chain(1)) == []

    def test_report_dict(self):
        report = find_beat_points(chain(3))[0]
        assert report.to_dict(chain(3).labels) == {
            "index": 1,
            "label": "x1",
            "kind": "up",
            "witness": "x2",
        }

    def test_attached_point_is_a_beat_point(self, rng):
        for _ in range(20):
            p = random_poset(5, rng)
            q = attach_beat_point(p, rng)
            assert q.n - 1 in {b.index for b in find_beat_points(q)}
            assert remove_point(q, q.n - 1) == p
            assert determinant(q) == -determinant(p)
            assert rank_bar(q) == rank_bar(p)


class TestWeakBeatPoints:
    def test_weakbeat4(self):
        p = weakbeat4()
        assert labels_of(p, find_beat_points(p)) == ["b", "c"]
        weak = find_weak_beat_points(p)
        assert labels_of(p, weak) == ["a", "b", "c", "x"]
        assert [w.kind for w in weak] == ["up", "both", "both", "down"]

    def test_circle_has_none(self, s1):
        assert find_weak_beat_points(s1) == []

    def test_beat_points_are_weak_beat_points(self, rng):
        for _ in range(20):
            p = random_poset(6, rng)
            weak = {w.index for w in find_weak_beat_points(p)}
            assert {b.index for b in find_beat_points(p)} <= weak


class TestReductions:
    def test_core_of_chain(self):
        reduced, trace = core(chain(3))
        assert reduced.labels == ("x3",)
        assert [step.label for step in trace.steps] == ["x1", "x2"]
        assert [step.witness for step in trace.steps] == [1, 2]
        assert trace.kept == (2,)
        assert trace.sign_flips == 2

    def test_core_of_minimal_model_is_itself(self, s1):
        reduced, trace = core(s1)
        assert reduced == s1
        assert trace.steps == ()

    def test_contractibility(self, s1, vposet):
        assert is_contractible(chain(1))
        assert is_contractible(chain(4))
        assert is_contractible(vposet)
        assert not is_contractible(s1)
        assert not is_contractible(antichain(2))
        assert not is_contractible(sphere_model(2))

    def test_core_is_beat_point_free(self, rng):
        for _ in range(20):
            reduced, trace = core(random_poset(7, rng))
            assert reduced.n == 1 or find_beat_points(reduced) == []
            assert len(trace.steps) + reduced.n == 7

    def test_weak_reduce_default_order(self):
        reduced, trace = weak_reduce(weakbeat4())
        assert reduced.n == 1
        assert [step.label for step in trace.steps] == ["a", "b", "c"]
        assert [step.move for step in trace.steps] == [WEAK_BEAT, BEAT, BEAT]

    def test_weak_reduce_prefers_beat_points(self):
        reduced, trace = weak_reduce(weakbeat4(), prefer_beat_points=True)
        assert reduced.labels == ("x",)
        assert [step.label for step in trace.steps] == ["b", "a", "c"]
        assert all(step.move == BEAT for step in trace.steps)

    def test_weak_reduce_checks_invariants(self):
        reduced, trace = weak_reduce(weakbeat4(), check_invariants=True)
        assert reduced.n == 1
        assert trace.to_dict()["signFlips"] == 3

    def test_trace_dict(self):
        _, trace = core(chain(2))
        data = trace.to_dict()
        assert data["steps"] == [
            {"index": 1, "label": "x1", "move": "beat", "kind": "up", "witness": "x2"}
        ]
        assert data["final"]["labels"] == ["x2"]


class TestInvariantsBundle:
    def test_s1(self, s1):
        bundle = invariants_bundle(s1)
        assert (bundle.abs_det, bundle.det, bundle.rank_bar) == (1, 1, 0)
        assert bundle.reduced_euler == -1
        assert bundle.consistent
        assert bundle.to_dict()["sumProfile"]["total"] == 8

    def test_chain(self):
        bundle = invariants_bundle(chain(3))
        assert (bundle.abs_det, bundle.rank_bar, bundle.reduced_euler) == (0, 1, 0)

    def test_consistency_on_random_posets(self, rng):
        for _ in range(20):
            assert invariants_bundle(random_poset(7, rng)).consistent


class TestHomeomorphism:
    def test_relabelled_copy(self, s1):
        q = s1.reordered([2, 0, 3, 1])
        tau = find_homeomorphism(s1, q)
        assert tau is not None
        for i in range(4):
            for j in range(4):
                assert s1.leq[i, j] == q.leq[tau[i], tau[j]]

    def test_circle_counterexample(self):
        assert sum_profile(circle8()).multiset_key() == sum_profile(twocircles8()).multiset_key()
        assert not homeomorphic(circle8(), twocircles8())
        assert find_homeomorphism_bruteforce(circle8(), twocircles8()) is None

    def test_sizes_must_match(self):
        assert find_homeomorphism(chain(2), chain(3)) is None
        assert find_homeomorphism_bruteforce(chain(2), chain(3)) is None

    def test_agrees_with_bruteforce(self, rng):
        for _ in range(30):
            p = random_poset(5, rng)
            q = random_poset(5, rng) if rng.random() < 0.5 else p.reordered(rng.permutation(5))
            expected = find_homeomorphism_bruteforce(p, q) is not None
            assert homeomorphic(p, q) == expected

    def test_homeomorphic_posets_share_invariants(self, rng):
        for _ in range(10):
            p = random_poset(6, rng)
            q = p.reordered(rng.permutation(6))
            assert homeomorphic(p, q)
            assert char_poly(p) == char_poly(q)
            assert sum_profile(p).multiset_key() == sum_profile(q).multiset_key()

    def test_bruteforce_limit(self):
        with pytest.raises(SizeLimitExceeded) as excinfo:
            find_homeomorphism_bruteforce(chain(4), chain(4), limit=3)
        assert (excinfo.value.size, excinfo.value.limit) == (4, 3)


class TestCanonicalForm:
    def test_key_ignores_labels_and_order(self, s1):
        assert canonical_key(s1) == canonical_key(s1.with_labels())
        assert canonical_key(s1) == canonical_key(s1.reordered([3, 2, 1, 0]))
        assert canonical_key(s1) != canonical_key(fence(4))

    def test_canonical_poset_is_a_fixed_point(self, rng):
        for _ in range(10):
            p = random_poset(6, rng)
            q = canonical_poset(p)
            assert canonical_poset(q) == q
            assert homeomorphic(p, q)

    def test_colours_separate_heights(self):
        colours = refined_colours(chain(3))
        assert len(set(colours)) == 3
