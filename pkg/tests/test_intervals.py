import pytest
from hypothesis import given, settings

from conftest import interval_sets, random_interval_set, random_rational, rationals
from sumfree.intervals import EmptySetError, Interval, IntervalSet, ParseError
from sumfree.rationals import rational

A0_TEXT = "(8/177,4/59)|(28/177,14/59)|(2/3,1)"


def S(text):
    return IntervalSet.parse(text)


class TestNormalize:
    def test_open_endpoints_do_not_touch(self):
        s = IntervalSet([Interval(rational(0), rational(1, 2)),
                         Interval(rational(1, 2), rational(1))])
        assert len(s) == 2
        assert str(s) == "(0,1/2)|(1/2,1)"

    def test_adjacency_merge(self):
        s = IntervalSet([Interval(rational(0), rational(1, 2), False, True),
                         Interval(rational(1, 2), rational(1))])
        assert str(s) == "(0,1)"

    def test_lowest_terms(self):
        s = IntervalSet([Interval(rational(3, 6), rational(2, 2))])
        assert str(s) == "(1/2,1)"

    def test_degenerate_dropped(self):
        assert IntervalSet([Interval(rational(1), rational(0))]).is_empty
        assert IntervalSet([Interval(rational(1), rational(1))]).is_empty
        assert not IntervalSet([Interval(rational(1), rational(1), True, True)]).is_empty

    def test_overlap_merge_keeps_closedness(self):
        s = IntervalSet([Interval(rational(0), rational(2), True, False),
                         Interval(rational(1), rational(2), False, True)])
        assert str(s) == "[0,2]"

    @settings(max_examples=150)
    @given(interval_sets())
    def test_idempotent(self, s):
        assert IntervalSet(s.components) == s

    def test_singleton_absorbed(self):
        s = S("(0,1/2)").union(IntervalSet.point(rational(1, 2)))
        assert str(s) == "(0,1/2]"


class TestMeasure:
    def test_extremal_set(self):
        assert S(A0_TEXT).measure() == rational(77, 177)

    def test_empty(self):
        assert IntervalSet.empty().measure() == 0

    def test_single_component(self):
        assert S("(8/177,4/59)").measure() == rational(4, 177)

    def test_points_are_null(self):
        assert S("[1/2,1/2]").measure() == 0

    def test_additive_on_disjoint(self, rng):
        for _ in range(200):
            a = random_interval_set(rng)
            b = random_interval_set(rng).difference(a)
            assert a.union(b).measure() == a.measure() + b.measure()


class TestDilateTranslateReflect:
    def test_dilate(self):
        assert str(S("(2/3,1)").dilate(3)) == "(2,3)"

    def test_dilate_identity(self):
        assert S(A0_TEXT).dilate(1) == S(A0_TEXT)

    def test_dilate_measure_exact(self):
        assert S(A0_TEXT).dilate(59).measure() == rational(77, 3)

    def test_dilate_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            S("(0,1)").dilate(0)
        with pytest.raises(ValueError):
            S("(0,1)").dilate(rational(-1, 2))

    @settings(max_examples=100)
    @given(interval_sets(), rationals(min_value=1, max_value=5, max_denominator=30))
    def test_dilation_scales_measure(self, s, alpha):
        if alpha > 0:
            assert s.dilate(alpha).measure() == alpha * s.measure()

    def test_translate(self):
        assert str(S("(0,1)").translate(rational(1, 3))) == "(1/3,4/3)"
        assert IntervalSet.empty().translate(5).is_empty
        assert str(S("[1/2,1/2]").translate(rational(1, 2))) == "[1,1]"

    def test_reflect(self):
        assert str(S("(1,2)|[3,4]").reflect()) == "[-4,-3]|(-2,-1)"
        assert S("(1,2)").reflect().reflect() == S("(1,2)")


class TestMinkowski:
    def test_open_plus_open(self):
        assert str(S("(2/3,1)").minkowski(S("(2/3,1)"))) == "(4/3,2)"

    def test_cross_component(self):
        got = S("(8/177,4/59)").minkowski(S("(2/3,1)"))
        assert str(got) == "(42/59,63/59)"

    def test_zero_singleton_identity(self):
        assert S("[0,0]").minkowski(S(A0_TEXT)) == S(A0_TEXT)

    def test_empty_absorbs(self):
        assert S("(0,1)").minkowski(IntervalSet.empty()).is_empty

    def test_closedness_semantics(self):
        # an endpoint of a sum is attained iff both sides attain theirs
        assert str(S("(0,1]").minkowski(S("[2,3]"))) == "(2,4]"
        assert str(S("[0,1)").minkowski(S("[2,3)"))) == "[2,4)"

    def test_commutative(self, rng):
        for _ in range(50):
            a, b = random_interval_set(rng), random_interval_set(rng)
            assert a.minkowski(b) == b.minkowski(a)

    def test_associative(self, rng):
        for _ in range(30):
            a, b, c = (random_interval_set(rng, max_components=3) for _ in range(3))
            if a.is_empty or b.is_empty or c.is_empty:
                continue
            assert a.minkowski(b).minkowski(c) == a.minkowski(b.minkowski(c))

    def test_dilate_distributes(self, rng):
        for _ in range(50):
            a, b = random_interval_set(rng), random_interval_set(rng)
            alpha = rational(rng.randint(1, 20), rng.randint(1, 20))
            assert a.minkowski(b).dilate(alpha) == a.dilate(alpha).minkowski(b.dilate(alpha))

    def test_superadditive_measure(self, rng):
        # mu(A+B) >= mu(A) + mu(B) for nonempty bounded sets
        for _ in range(200):
            a, b = random_interval_set(rng), random_interval_set(rng)
            if a.is_empty or b.is_empty:
                continue
            assert a.minkowski(b).measure() >= a.measure() + b.measure()

    def test_min_lower_bound(self, rng):
        # mu(A+B) >= min(2 mu(A) + mu(B), mu(A) + diam(B)) when mu(A) <= mu(B)
        for _ in range(200):
            a, b = random_interval_set(rng), random_interval_set(rng)
            if a.is_empty or b.is_empty:
                continue
            if a.measure() > b.measure():
                a, b = b, a
            bound = min(2 * a.measure() + b.measure(), a.measure() + b.diameter())
            assert a.minkowski(b).measure() >= bound


class TestBooleanOps:
    def test_intersect_extremal_top(self):
        assert str(S(A0_TEXT).intersect(S("[2/3,1]"))) == "(2/3,1)"

    def test_union_empty(self):
        assert S(A0_TEXT).union(IntervalSet.empty()) == S(A0_TEXT)

    def test_difference_endpoint_residue(self):
        assert str(S("[2/3,1]").difference(S("(2/3,1)"))) == "[2/3,2/3]|[1,1]"

    def test_symmetric_difference(self):
        a, b = S("(0,2)"), S("(1,3)")
        assert a.symmetric_difference(b) == a.union(b).difference(a.intersect(b))

    def test_membership_oracle(self, rng):
        # constructed result sets agree pointwise with direct logic
        for _ in range(60):
            a, b = random_interval_set(rng), random_interval_set(rng)
            u, i, d = a.union(b), a.intersect(b), a.difference(b)
            for _ in range(40):
                x = random_rational(rng)
                in_a = any(c.contains(x) for c in a.components)
                in_b = any(c.contains(x) for c in b.components)
                assert u.contains(x) == (in_a or in_b)
                assert i.contains(x) == (in_a and in_b)
                assert d.contains(x) == (in_a and not in_b)

    @settings(max_examples=100)
    @given(interval_sets(), interval_sets())
    def test_demorgan_via_difference(self, a, b):
        box = IntervalSet.interval(-3, 4, True, True)
        lhs = box.difference(a.union(b))
        rhs = box.difference(a).intersect(box.difference(b))
        assert lhs == rhs


class TestExtrema:
    def test_extremal_set_extrema(self):
        a0 = S(A0_TEXT)
        assert a0.inf() == rational(8, 177)
        assert a0.sup() == 1
        assert a0.diameter() == 1 - rational(8, 177)

    def test_diameter(self):
        assert S("(1/4,1/2)|(3/4,1)").diameter() == rational(3, 4)

    def test_empty_rejected(self):
        for op in ("inf", "sup", "diameter"):
            with pytest.raises(EmptySetError):
                getattr(IntervalSet.empty(), op)()


class TestTextFormat:
    def test_canonical_round_trip(self):
        for text in (A0_TEXT, "{}", "[0,0]", "(-31/59,8/177)", "[1/2,1)|(1,2]"):
            assert str(IntervalSet.parse(text)) == text

    def test_parse_normalizes(self):
        assert str(S("(2/3,1)|(8/177,4/59)|(1/2,2/2)")) == "(8/177,4/59)|(1/2,1)"
        assert str(S("( 3/6 , 2/2 )")) == "(1/2,1)"

    def test_round_trip_random(self, rng):
        for _ in range(200):
            s = random_interval_set(rng)
            assert IntervalSet.parse(str(s)) == s

    def test_parse_error_position(self):
        with pytest.raises(ParseError) as err:
            IntervalSet.parse("(0,1)|junk")
        assert err.value.pos == 6
        with pytest.raises(ParseError):
            IntervalSet.parse("")
        with pytest.raises(ParseError) as err:
            IntervalSet.parse("(1/0,2)")
        assert "denominator" in str(err.value)

    def test_canonical_equality_is_set_equality(self, rng):
        for _ in range(100):
            s = random_interval_set(rng)
            shuffled = list(s.components)
            rng.shuffle(shuffled)
            assert IntervalSet(shuffled) == s


class TestImmutability:
    def test_setattr_blocked(self):
        s = S("(0,1)")
        with pytest.raises(AttributeError):
            s.components = ()

    def test_hashable(self):
        assert len({S("(0,1)"), S("(0,2/2)"), S("(0,1)"), S("[0,1)")}) == 2
