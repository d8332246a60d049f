import numpy as np
import pytest

from fspace.digraph import scc_count, to_digraph
from fspace.errors import FspaceError
from fspace.families import (
    FAMILY_NAMES,
    FamilySpec,
    attach_beat_point,
    chain,
    circle8,
    cyclic_blowup,
    disjoint_copies,
    fence,
    make_family,
    random_poset,
    sphere_model,
    sphere_model_with_action,
)
from fspace.homotopy import find_beat_points, homeomorphic
from fspace.order import components, covers, height


class TestNamedFamilies:
    def test_fence(self):
        assert covers(fence(4)) == [(0, 1), (2, 1), (2, 3)]
        assert height(fence(4)) == 1

    def test_sphere_model(self, s1):
        assert sphere_model(0).n == 2
        assert homeomorphic(sphere_model(1), s1)
        for n in range(4):
            p = sphere_model(n)
            assert p.n == 2 * (n + 1)
            assert height(p) == n
            assert find_beat_points(p) == []
            assert scc_count(to_digraph(p)) == n + 1

    def test_sphere_action_is_antipodal(self):
        _, perms = sphere_model_with_action(1)
        assert perms == [(0, 1, 2, 3), (1, 0, 3, 2)]

    def test_bad_sizes(self):
        with pytest.raises(FspaceError):
            sphere_model(-1)
        with pytest.raises(FspaceError):
            cyclic_blowup(chain(2), 0)
        with pytest.raises(FspaceError):
            disjoint_copies(chain(2), 0)


class TestConstructions:
    def test_cyclic_blowup_labels(self):
        p, perms = cyclic_blowup(chain(2), 2)
        assert p.labels == ("x1.1", "x1.2", "x2.1", "x2.2")
        assert p.less(0, 3) and not p.less(0, 1)
        assert perms[1] == (1, 0, 3, 2)

    def test_disjoint_copies(self):
        p, perms = disjoint_copies(chain(2), 2)
        assert components(p) == [(0, 1), (2, 3)]
        assert p.labels == ("x1.1", "x2.1", "x1.2", "x2.2")
        assert perms == [(0, 1, 2, 3), (2, 3, 0, 1)]

    def test_random_poset_is_reproducible(self):
        first = random_poset(8, np.random.default_rng(5))
        second = random_poset(8, np.random.default_rng(5))
        assert first == second

    def test_random_poset_extremes(self):
        assert covers(random_poset(5, np.random.default_rng(0), density=0.0)) == []
        assert random_poset(5, np.random.default_rng(0), density=1.0) == chain(5)

    def test_attach_beat_point_grows_by_one(self, rng):
        p = circle8()
        q = attach_beat_point(p, rng)
        assert q.n == 9
        assert q.labels[:8] == p.labels
        assert q.labels[8] == "x9"


class TestFamilySpec:
    def test_names(self):
        assert set(FAMILY_NAMES) == {
            "chain", "antichain", "fence", "sphere_model", "circle8", "twocircles8", "weakbeat4",
        }

    def test_make_family(self):
        assert make_family(FamilySpec("fence", 5)) == fence(5)
        assert make_family(FamilySpec("circle8")) == circle8()

    def test_unknown_family(self):
        with pytest.raises(FspaceError, match="Unknown family"):
            FamilySpec("hypercube", 3)

    def test_sized_family_needs_a_size(self):
        with pytest.raises(FspaceError, match="needs a size"):
            FamilySpec("chain")
