import pytest

from conftest import random_interval_set
from sumfree.constructions import endpoint_combination, extremal_base
from sumfree.intervals import Interval, IntervalSet
from sumfree.predicates import forbidden_region, is_k_sum_free
from sumfree.rationals import rational


def S(text):
    return IntervalSet.parse(text)


class TestPredicate:
    def test_extremal_base_is_sum_free(self):
        ok, witness = is_k_sum_free(extremal_base(), 3)
        assert ok and witness is None

    def test_empty_set(self):
        ok, witness = is_k_sum_free(IntervalSet.empty(), 3)
        assert ok and witness is None

    def test_excluded_endpoint_combination(self):
        bad = endpoint_combination(0b010)
        ok, w = is_k_sum_free(bad, 3)
        assert not ok
        assert (w.x, w.y, w.z) == (rational(8, 177), rational(2, 3), rational(14, 59))
        assert w.x + w.y == 3 * w.z

    def test_unit_interval_fails_with_interior_witness(self):
        ok, w = is_k_sum_free(S("(0,1)"), 3)
        assert not ok
        assert w.holds_in(S("(0,1)"))

    def test_witness_soundness_random(self, rng):
        for _ in range(300):
            a = random_interval_set(rng, lo=0, hi=2)
            for k in (1, 3, 4):
                ok, w = is_k_sum_free(a, k)
                if not ok:
                    assert w.k == k and w.holds_in(a)

    def test_k2_trivially_false_for_nonempty(self, rng):
        ok, w = is_k_sum_free(S("(1/4,1/3)"), 2)
        assert not ok and w.x + w.y == 2 * w.z
        for _ in range(50):
            a = random_interval_set(rng, lo=0, hi=2)
            if a.is_empty:
                continue
            ok, w = is_k_sum_free(a, 2)
            assert not ok and w.holds_in(a)

    def test_k_validation(self):
        with pytest.raises(ValueError):
            is_k_sum_free(S("(0,1)"), 0)

    def test_reformulations_agree(self, rng):
        # (1/3)(A+A) missing A is the same as (3A - A) missing A
        third = rational(1, 3)
        for _ in range(200):
            a = random_interval_set(rng, lo=0, hi=2)
            if a.is_empty:
                continue
            ok, _ = is_k_sum_free(a, 3)
            via_z = a.minkowski(a).dilate(third).intersect(a).is_empty
            via_x = a.dilate(3).minkowski(a.reflect()).intersect(a).is_empty
            assert ok == via_z == via_x

    def test_small_instance_component_oracle(self, rng):
        # components pairwise: A is k-sum-free iff no (I+J) meets k*K
        for _ in range(300):
            a = random_interval_set(rng, max_components=3, lo=0, hi=1)
            if a.is_empty:
                continue
            for k in (1, 3, 4):
                comps = a.components
                clash = False
                for i, I in enumerate(comps):
                    for J in comps[i:]:
                        sij = IntervalSet([I.sum(J)])
                        for K in comps:
                            scaled = IntervalSet([K]).dilate(k)
                            if not sij.intersect(scaled).is_empty:
                                clash = True
                ok, _ = is_k_sum_free(a, k)
                assert ok == (not clash)


class TestForbiddenRegion:
    def test_first_interval(self):
        U = S("(8/177,4/59)")
        assert U.dilate(3).minkowski(U.reflect()) == S("(4/59,28/177)")

    def test_middle_and_top(self):
        V = S("(28/177,14/59)")
        top = S("(2/3,1)")
        third = rational(1, 3)
        union = V.dilate(3).minkowski(V.reflect()).union(
            top.minkowski(top).dilate(third))
        assert union == S("(14/59,2/3)")

    def test_cross_term(self):
        V, top = S("(28/177,14/59)"), S("(2/3,1)")
        assert V.dilate(3).minkowski(top.reflect()) == S("(-31/59,8/177)")

    def test_extremal_base_avoids_own_region(self):
        a0 = extremal_base()
        assert forbidden_region(a0).intersect(a0).is_empty

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            forbidden_region(IntervalSet.empty())

    def test_disjointness_characterizes_sum_freeness(self, rng):
        # conflict-free against the z-part of the region is the predicate
        third = rational(1, 3)
        for _ in range(150):
            a = random_interval_set(rng, lo=0, hi=2)
            if a.is_empty:
                continue
            ok, _ = is_k_sum_free(a, 3)
            assert ok == a.minkowski(a).dilate(third).intersect(a).is_empty
