import json

import pytest

from bassforge.errors import InvalidSpec, PreconditionViolated
from bassforge.fiber import (
    FiberComponent,
    classify_exception,
    fiber_bass,
    fiber_component,
    fiber_depth,
    fiber_poincare,
    series1_V,
    series1_check_b,
    w_condition_check,
    zero_dim_hypersurface,
)
from bassforge.golod import GolodSpec, golod_bass_series
from bassforge.series import Polynomial, RationalFunction, first_nonpositive, rf_expand

from oracles import binomial_row

H = zero_dim_hypersurface()
R1, R2 = FiberComponent.regular(1), FiberComponent.regular(2)


def singular(p_num, p_den, i_num, i_den, depth):
    return FiberComponent.singular(RationalFunction.of(p_num, p_den),
                                   RationalFunction.of(i_num, i_den), depth)


def golod_component(d, e, h):
    # P_k of a Golod ring: (1+t)^e / (1 - sum c_i t^(i+1))
    from bassforge.golod import golod_bass_rf, ranks_merge
    spec = GolodSpec(d, e, h)
    c = ranks_merge(spec).c
    P = RationalFunction(Polynomial((1, 1)) ** e, Polynomial([1, 0] + [-x for x in c[1:]]))
    return FiberComponent.singular(P, golod_bass_rf(spec), d, e)


class TestComponent:
    def test_regular_zero_rejected(self):
        with pytest.raises(InvalidSpec):
            FiberComponent.regular(0)

    def test_bass_must_start_at_depth(self):
        with pytest.raises(InvalidSpec):
            singular([1], [1, -1], [0, 1], [1], 0)

    def test_poincare_constant_term(self):
        with pytest.raises(InvalidSpec):
            singular([2], [1, -1], [1], [1], 0)

    def test_json_round_trip(self, tmp_path):
        for comp in (R2, H, golod_component(1, 3, (1, 2))):
            text = json.dumps(comp.to_json())
            back = FiberComponent.from_json(json.loads(text))
            assert back.to_json() == comp.to_json()

    def test_edim_inferred(self):
        assert H.component_edim == 1
        assert golod_component(0, 3, (1, 1, 1)).component_edim == 3


class TestPoincare:
    def test_examples(self):
        line = singular([1], [1, -1], [1], [1], 0)
        assert fiber_poincare(line, line, 4).coeffs == (1, 2, 4, 8, 16)
        assert fiber_poincare(R1, R1, 4).coeffs == (1, 2, 2, 2, 2)
        two = singular([1], [1, -2], [1], [1], 0)
        assert fiber_poincare(two, line, 3).coeffs == (1, 3, 9, 27)

    def test_edim_adds(self):
        G = golod_component(0, 3, (1, 2, 1))
        for S, T in ((G, H), (R2, G), (R1, R2)):
            assert fiber_poincare(S, T, 3)[1] == S.component_edim + T.component_edim


class TestBass:
    def test_examples(self):
        assert fiber_bass(H, H, 4).coeffs == (2, 3, 6, 12, 24)
        assert fiber_bass(H, R1, 5).coeffs == (1, 2, 2, 4, 6, 10)
        assert fiber_bass(R1, R1, 5).coeffs == (0, 1, 0, 0, 0, 0)

    def test_agrees_with_golod(self):
        assert fiber_bass(H, R1, 60) == golod_bass_series(GolodSpec(0, 2, (1, 1)), 60)

    @pytest.mark.parametrize("e", [2, 3, 4, 5])
    def test_example_two_ladder(self, e):
        comp = H
        for _ in range(e - 2):
            comp = fiber_component(H, comp)
        s = fiber_bass(H, comp, 40)
        assert s[0] == e
        assert all(s[i] == e ** (i - 1) * (e * e - 1) for i in range(1, 41))

    def test_symmetric(self):
        G = golod_component(1, 3, (1, 2))
        assert fiber_bass(G, R2, 20) == fiber_bass(R2, G, 20)

    @pytest.mark.parametrize("S,T", [
        (R1, R2),
        (H, R1),
        (R2, R2),
        (R1, FiberComponent.regular(3)),
        (H, H),
    ], ids=["r1r2", "hr1", "r2r2", "r1r3", "hh"])
    def test_depth(self, S, T):
        s = fiber_bass(S, T, 10)
        assert s.valuation() == fiber_depth(S.component_depth, T.component_depth)


def test_fiber_depth():
    assert fiber_depth(0, 5) == 0
    assert fiber_depth(2, 3) == 1
    assert fiber_depth(1, 1) == 1


class TestClassify:
    def test_table(self):
        assert classify_exception(R1, R1).tag == "Hypersurface"
        assert classify_exception(R1, R2).tag == "GolodException"
        assert classify_exception(R2, R1).tag == "GolodException"
        assert classify_exception(H, R1).tag == "GolodException"
        assert classify_exception(golod_component(0, 2, (1, 2)), R1).tag == "General"
        assert classify_exception(R2, R2).tag == "General"

    def test_exception_values(self):
        s = fiber_bass(R1, R2, 10)
        d = fiber_depth(1, 2)
        assert s[d + 1] == 2 == s[d + 2]


CORPUS = {
    "golod-reg2": (golod_component(0, 2, (1, 2)), R2),
    "golod-reg1": (golod_component(0, 3, (1, 1, 1)), R1),
    "golod-golod": (golod_component(0, 2, (1, 2)), golod_component(1, 3, (1, 1))),
    "hyper-hyper": (H, H),
    "hyper-reg3": (H, FiberComponent.regular(3)),
    "reg2-reg2": (R2, R2),
    "reg1-reg3": (R1, FiberComponent.regular(3)),
    "golod-hyper": (golod_component(2, 4, (1, 3)), H),
}


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_increasing_certificate(name):
    S, T = CORPUS[name]
    assert classify_exception(S, T).tag == "General"
    d = fiber_depth(S.component_depth, T.component_depth)
    f = rf_expand(RationalFunction.of([1, -1]) * fiber_component(S, T).bass_rf(), 60)
    assert first_nonpositive(f, d) is None


class TestSeries1:
    C = [i + 2 for i in range(60)]

    def test_V_example(self):
        r = series1_V(self.C, 4)
        assert r.series.coeffs == (1, 0, 2, 3, 8) and r.passed

    def test_V_certificate(self):
        r = series1_V(self.C, 40)
        assert r.passed
        assert r.series[1] == 0 and r.series[2] == 2

    @pytest.mark.parametrize("c", [
        [i + 2 for i in range(45)],
        [2 ** (i + 1) for i in range(45)],
        [3 * i + 3 for i in range(45)],
    ], ids=["linear", "exponential", "steep"])
    def test_families(self, c):
        v = series1_V(c, 40)
        assert v.passed and v.series[1] == 0 and v.series[2] == c[0]
        for W in (RationalFunction(Polynomial((1, 1)) ** 3),
                  RationalFunction.of([1], [1, -2]),
                  RationalFunction.of([1], [1, -1])):
            assert series1_check_b(W, c, 40).passed

    def test_third_term_needs_c1_large(self):
        # v_3 = c_1 exactly, so v_3 > c_0^(3/2) needs c_1^2 > c_0^3
        r = series1_V([i + 3 for i in range(45)], 40)
        assert not r.passed and r.first_violation == 3 and r.reason == "exponential"
        assert r.series[3] == 4

    def test_c0_too_small(self):
        with pytest.raises(PreconditionViolated):
            series1_V([1, 2, 3, 4, 5], 4)

    def test_not_increasing(self):
        with pytest.raises(PreconditionViolated):
            series1_V([3, 3, 4, 5, 6], 4)

    def test_too_short(self):
        with pytest.raises(PreconditionViolated):
            series1_V([2, 3], 10)

    def test_b_examples(self):
        r = series1_check_b(RationalFunction(Polynomial((1, 1)) ** 3), self.C, 30)
        assert r.passed and r.degree1 == 2
        r = series1_check_b(RationalFunction.of([1], [1, -2]), self.C, 30)
        assert r.passed and r.degree1 == 1

    def test_b_rejects(self):
        with pytest.raises(PreconditionViolated):
            series1_check_b(RationalFunction.of([1, -1]), self.C, 30)


class TestWCondition:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_binomial(self, n):
        assert w_condition_check(RationalFunction.of(binomial_row(n)), 50)

    def test_constant_one_fails(self):
        # (1+t)^0 = 1 leaves 1 - t + t^2 itself
        assert not w_condition_check(RationalFunction.of([1]), 50)

    @pytest.mark.parametrize("num,den", [
        ([1], [1, -1]),
        ([1, 1], [1, -1]),
        ([1], [1, -1, -1]),
        ([1], [1, -2, 1]),
        ([2, 1, -1], [1, -1, -2]),
        ([1, 0, 1], [1, -1]),
    ])
    def test_nondecreasing_fixtures(self, num, den):
        f = RationalFunction.of(num, den)
        s = rf_expand(f, 50)
        assert all(s[i + 1] >= s[i] for i in range(50))
        assert w_condition_check(f, 50)

    def test_fails(self):
        assert not w_condition_check(RationalFunction.of([1, -1]), 50)
