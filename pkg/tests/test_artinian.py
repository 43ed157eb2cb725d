from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bassforge.artinian import (
    BettiWindow,
    M3Spec,
    bas1_seed,
    divides_check,
    extremal_recurrence,
    extremal_window,
    m3_bound_check,
    prop_growth_rate,
    prop_s_rate,
    scholium_rate,
    syzygy_length,
    waypoints_aer3,
)
from bassforge.errors import GorensteinCase, InvalidSpec, NonpositiveTerm, PreconditionViolated
from bassforge.surd import QuadraticSurd

from oracles import consistent_window


def valid_specs(top=8):
    for e in range(2, top + 1):
        for r in range(2, top + 1):
            for a in range(r + 1):
                try:
                    yield M3Spec(a, e, r)
                except InvalidSpec:
                    pass


class TestSpec:
    def test_a_bounded_by_r(self):
        with pytest.raises(InvalidSpec):
            M3Spec(4, 3, 3)

    def test_a_zero_forces_e_eq_r(self):
        with pytest.raises(InvalidSpec):
            M3Spec(0, 3, 4)
        M3Spec(0, 4, 4)

    def test_socle_outside_square(self):
        with pytest.raises(InvalidSpec):
            M3Spec(1, 3, 4)

    def test_json(self):
        s = M3Spec(2, 3, 3)
        assert M3Spec.from_json(s.to_json()) == s


class TestSyzygyLength:
    def test_examples(self):
        assert syzygy_length(3, 2, [2]).length == 4
        assert syzygy_length(4, 8, [2, 2]).length == 8
        assert syzygy_length(5, 10, BettiWindow((2,))).length == 0

    def test_residue(self):
        sl = syzygy_length(4, 6, [3, 4, 5])
        assert sl.matches_sign and sl.index == 3

    def test_empty(self):
        with pytest.raises(PreconditionViolated):
            syzygy_length(3, 2, [])


class TestDivides:
    def test_rule_i(self):
        r = divides_check(4, 4, [2, 1])
        assert any(v.rule == "i" and v.index == 1 for v in r.violations)

    def test_rule_ii(self):
        r = divides_check(4, 4, [3, 2])
        assert [v.rule for v in r.violations][0] == "ii"

    def test_rule_iii_on_prefix(self):
        # lR = 4, lM = 6 and b_0 = 1 would give M_1 length 4 - 6 < 0
        r = divides_check(4, 6, [1, 1])
        assert not r.consistent
        assert [(v.rule, v.index) for v in r.violations] == [("iii", 0)]

    def test_consistent(self):
        assert divides_check(4, 6, [2, 1]).consistent is True

    @given(st.integers(2, 9), st.integers(1, 40), st.lists(st.integers(0, 4), min_size=1, max_size=8))
    def test_generated_windows(self, lR, lM, slack):
        betti = consistent_window(lR, lM, slack)
        assert syzygy_length(lR, lM, betti).length > 0
        assert divides_check(lR, lM, betti).consistent


class TestBounds:
    def test_waypoints(self):
        spec, window, flags = waypoints_aer3()
        assert window.values == (3, 6, 10, 12)
        r = m3_bound_check(spec, window, no_summand=flags)
        assert r.consistent, r.violations
        assert bas1_seed(spec) == (3, 6)

    def test_waypoint_values(self):
        spec, _, _ = waypoints_aer3()
        lR = spec.length
        assert lR == 7
        # b_2 = 4 l(R) - 18 and b_3 = r(b_2 - b_1)
        assert 4 * lR - 18 == 10
        assert spec.r * (10 - 6) == 12

    def test_extremal_module(self):
        r = m3_bound_check(M3Spec(2, 3, 2), [1, 3, 7, 15], bass=False)
        assert r.consistent
        assert "equality at i = 2" in r.notes and "equality at i = 3" in r.notes

    def test_equality_needs_m2_zero(self):
        r = m3_bound_check(M3Spec(3, 3, 3), [3, 6, 9], no_summand={1, 2})
        assert not r.consistent
        assert r.violations[0].rule == "betti2_iff"

    def test_betti3_violation(self):
        r = m3_bound_check(M3Spec(2, 3, 2), [1, 3, 6], bass=False)
        assert [v.rule for v in r.violations] == ["betti3"]

    def test_betti1_violation(self):
        r = m3_bound_check(M3Spec(3, 3, 3), [3, 5, 12])
        assert "betti1" in [v.rule for v in r.violations]

    def test_bas3(self):
        r = m3_bound_check(M3Spec(3, 3, 3), [3, 6, 10, 11])
        assert "bas3" in [v.rule for v in r.violations]

    def test_betti2(self):
        r = m3_bound_check(M3Spec(3, 3, 3), [3, 2], m2_kills=True, bass=False)
        assert "betti2" in [v.rule for v in r.violations]


class TestExtremal:
    def test_examples(self):
        assert extremal_recurrence(3, 2, 1, 3, 4).values == (1, 3, 7, 15, 31)
        assert extremal_recurrence(2, 1, 1, 1, 6).values == (1,) * 7

    def test_collapse(self):
        with pytest.raises(NonpositiveTerm) as info:
            extremal_recurrence(2, 2, 1, 1, 5)
        assert info.value.index == 2

    def test_example_two_window(self):
        w = extremal_window(M3Spec(0, 4, 4), 10)
        assert w.values[:3] == (4, 15, 60)

    def test_never_flagged_by_divides(self):
        for spec in valid_specs(6):
            try:
                w = extremal_window(spec, 20).values
            except NonpositiveTerm:
                continue
            # M = E has the length of R; its second syzygy then has
            # length lR (b_1 - b_0 + 1)
            lR = spec.length
            assert syzygy_length(lR, lR, w[:2]).length == lR * (w[1] - w[0] + 1)
            assert divides_check(lR, lR, w).consistent, spec


class TestScholium:
    def test_examples(self):
        assert scholium_rate(M3Spec(0, 4, 4)) == 4
        assert scholium_rate(M3Spec(1, 3, 2)) == Fraction(5, 4)
        assert scholium_rate(M3Spec(5, 5, 5)) == QuadraticSurd(5, 1, 2, 5)

    def test_rational_collapse(self):
        A = scholium_rate(M3Spec(4, 4, 4))
        assert A.is_rational() and A == 2

    def test_branches(self):
        assert scholium_rate(M3Spec(4, 3, 4)) == Fraction(4, 3)
        assert scholium_rate(M3Spec(3, 3, 3)) == 2
        assert scholium_rate(M3Spec(3, 4, 3)) == Fraction(8, 3)
        assert scholium_rate(M3Spec(2, 5, 2)) == 3

    def test_gorenstein(self):
        with pytest.raises(GorensteinCase):
            scholium_rate(M3Spec(1, 3, 1))

    @pytest.mark.parametrize("r", range(4, 13))
    def test_fixed_point(self, r):
        A = scholium_rate(M3Spec(r, r, r))
        assert r * (1 - 1 / A) == A

    def test_above_one(self):
        for spec in valid_specs(12):
            assert scholium_rate(spec) > 1, spec


class TestRates:
    def test_prop_s(self):
        assert prop_s_rate(5, 4) == Fraction(5, 3)
        assert prop_s_rate(3, 2) == 3
        with pytest.raises(PreconditionViolated):
            prop_s_rate(2, 4)

    def test_prop_growth(self):
        assert prop_growth_rate(2, 1, 5) == Fraction(5, 4)
        assert prop_growth_rate(3, 0, 4) == 4
        with pytest.raises(PreconditionViolated):
            prop_growth_rate(2, 2, 5)


def test_betti_window_rejects_zero():
    with pytest.raises(NonpositiveTerm):
        BettiWindow((3, 0))
