from fractions import Fraction
from math import comb

import pytest

from bassforge.errors import IndexOutOfRange, InvalidPoincare, PreconditionViolated
from bassforge.fiber import fiber_bass, zero_dim_hypersurface
from bassforge.series import RationalFunction
from bassforge.teter import (
    RhoTable,
    TeterSpec,
    lemma_a_check,
    r_min,
    rho,
    teter_bass,
    teter_bass_rf,
    teter_growth_check,
)

from oracles import expand, rho as rho_oracle


def cover(e):
    """1/(1-t)^e."""
    return TeterSpec(RationalFunction.of([1], [(-1) ** k * comb(e, k) for k in range(e + 1)]))


def ci_cover(e):
    return TeterSpec(RationalFunction.of([comb(e, k) for k in range(e + 1)]))


class TestSpec:
    def test_edim_read_off(self):
        assert cover(4).edim == 4

    def test_field_rejected(self):
        with pytest.raises(InvalidPoincare):
            TeterSpec(RationalFunction.of([1]))

    def test_constant_term(self):
        with pytest.raises(InvalidPoincare):
            TeterSpec(RationalFunction.of([2], [1, -1]))

    def test_edim_mismatch(self):
        with pytest.raises(InvalidPoincare):
            TeterSpec(RationalFunction.of([1], [1, -2, 1]), edim=3)


class TestBass:
    def test_two(self):
        spec = cover(2)
        assert teter_bass(spec, 4).coeffs == (2, 3, 6, 12, 24)
        f = teter_bass_rf(spec)
        assert f.same_function(RationalFunction.of([2, -1], [1, -2]))

    def test_three(self):
        assert teter_bass(cover(3), 3).coeffs == (3, 6, 13, 30)
        assert teter_bass(cover(3), 30).coeffs == tuple(expand([3, -3, 1], [1, -3, 2, -1], 30))

    @pytest.mark.parametrize("e", range(2, 8))
    def test_mu0_is_edim(self, e):
        assert teter_bass(cover(e), 0)[0] == e
        assert teter_bass(ci_cover(e), 0)[0] == e

    def test_agrees_with_fiber(self):
        H = zero_dim_hypersurface()
        assert teter_bass(cover(2), 60) == fiber_bass(H, H, 60)


class TestRho:
    @pytest.mark.parametrize("e", range(1, 13))
    def test_rho_zero(self, e):
        assert rho(e, 0) == e

    @pytest.mark.parametrize("e", range(1, 17))
    def test_rho_top(self, e):
        assert rho(e, e) == 2 ** (e - 1)

    def test_values(self):
        assert rho(2, 1) == 1
        assert rho(10, 4) == Fraction(191, 105) == rho_oracle(10, 4)

    def test_range(self):
        with pytest.raises(IndexOutOfRange):
            rho(3, 4)
        with pytest.raises(IndexOutOfRange):
            rho(3, -1)

    @pytest.mark.parametrize("e", range(2, 17))
    def test_convex(self, e):
        for i in range(1, e):
            assert rho(e, i - 1) + rho(e, i + 1) >= 2 * rho(e, i)

    @pytest.mark.parametrize("e", range(3, 17))
    def test_displayed_inequalities(self, e):
        assert rho(e, 1) <= Fraction(e, 2)
        assert all(rho(e, i) > 1 for i in range(1, e // 2 + 1))
        assert all(rho(e, i) <= rho(e, i + 1) for i in range(e // 2, e))


class TestRMin:
    def test_small(self):
        assert r_min(1).minimum == 1
        t = r_min(2)
        assert t.minimum == 1 and t.argmin == 1

    @pytest.mark.parametrize("e", range(3, 10))
    def test_half_edim(self, e):
        t = r_min(e)
        assert t.argmin == e // 2 and t.minimum == rho(e, e // 2)

    def test_ten(self):
        t = r_min(10)
        assert t.argmin == 4 and t.minimum == Fraction(191, 105)

    @pytest.mark.parametrize("e", range(3, 17))
    def test_global_min_over_window(self, e):
        t = r_min(e)
        assert t.minimum > 1
        assert t.minimum == min(rho_oracle(e, i) for i in range(1, e // 2 + 1))
        assert t.values[0] == e and len(t.values) == e + 1

    def test_json(self):
        t = r_min(7)
        assert RhoTable.from_json(t.to_json()) == t


class TestAuxiliaryPolynomial:
    def test_examples(self):
        r = lemma_a_check(3, Fraction(4, 3), 20)
        assert r.non_negative and not r.strictly_positive and r.complete
        assert r.coefficients[2] == 0 == r.coefficients[3]
        assert lemma_a_check(3, 1, 20).strictly_positive
        r = lemma_a_check(3, 2, 20)
        assert not r.non_negative and r.first_violation == 2 and r.coefficients[2] == -2

    @pytest.mark.parametrize("e", range(2, 13))
    def test_at_and_below_rate(self, e):
        R = r_min(e).minimum
        assert lemma_a_check(e, R).non_negative
        assert lemma_a_check(e, R - Fraction(1, 1000)).strictly_positive

    @pytest.mark.parametrize("e", range(2, 10))
    def test_coefficient_formula(self, e):
        A = Fraction(7, 5)
        c = lemma_a_check(e, A, e + 10).coefficients
        for i in range(e):
            assert c[i + 1] == sum(comb(e - 1, j) for j in range(i + 2)) - A * comb(e, i)
        assert all(x == 2 ** (e - 1) for x in c[e + 2:])

    def test_order_too_small(self):
        with pytest.raises(PreconditionViolated):
            lemma_a_check(4, 1, 5)


class TestGrowth:
    def test_two(self):
        r = teter_growth_check(cover(2), 100)
        assert r.passed and r.branch == "closed_form"

    @pytest.mark.parametrize("e", range(3, 7))
    def test_polynomial_ring_cover(self, e):
        r = teter_growth_check(cover(e), 100)
        assert r.passed and r.rate == r_min(e).minimum

    @pytest.mark.parametrize("e", range(4, 7))
    def test_binomial_cover(self, e):
        assert teter_growth_check(ci_cover(e), 100).passed

    def test_binomial_cover_three(self):
        # mu = 3, 3, 4, 12, ...: flat first step, so (1 - 4/3 t) I dips at degree 1
        assert teter_bass(ci_cover(3), 3).coeffs == (3, 3, 4, 12)
        r = teter_growth_check(ci_cover(3), 100)
        assert not r.passed and r.first_violation == 1
