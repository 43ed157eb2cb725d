"""Teter rings ``Q/Soc Q`` and the rate machinery ``rho_e(i)``, ``R_e``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import IndexOutOfRange, InvalidPoincare, PreconditionViolated
from .series import Polynomial, PowerSeries, RationalFunction, TVAR, rf_expand


@dataclass(frozen=True)
class TeterSpec:
    poincare_q: RationalFunction
    edim: int | None = None

    def __post_init__(self):
        P = self.poincare_q
        if P.den[0] == 0:
            raise InvalidPoincare("Poincare series has a pole at t = 0")
        head = rf_expand(P, 1)
        if head[0] != 1:
            raise InvalidPoincare(f"constant term must be 1, got {head[0]}")
        e = head[1]
        if e.denominator != 1 or e < 2:
            raise InvalidPoincare(f"degree-1 coefficient {e} must be an integer >= 2")
        if self.edim is not None and self.edim != e:
            raise InvalidPoincare(f"edim {self.edim} disagrees with degree-1 coefficient {e}")
        object.__setattr__(self, "edim", int(e))

    def to_json(self) -> dict:
        return {"poincare_q": self.poincare_q.to_json(), "edim": self.edim}

    @classmethod
    def from_json(cls, data: dict) -> TeterSpec:
        return cls(RationalFunction.from_json(data["poincare_q"]), data.get("edim"))


def teter_bass_rf(spec: TeterSpec) -> RationalFunction:
    P = spec.poincare_q
    # (P - 1)/t: the numerator of P - 1 vanishes at 0 because P(0) = 1
    num = (P.num - P.den) // Polynomial((0, 1))
    shifted = RationalFunction(num, P.den)
    return shifted / (1 - TVAR * TVAR * P)


def teter_bass(spec: TeterSpec, order: int) -> PowerSeries:
    return rf_expand(teter_bass_rf(spec), order)


def rho(e: int, i: int) -> Fraction:
    if e < 1:
        raise IndexOutOfRange("e must be positive")
    if not 0 <= i <= e:
        raise IndexOutOfRange(f"i = {i} outside 0..{e}")
    return Fraction(sum(comb(e - 1, j) for j in range(i + 2)), comb(e, i))


@dataclass(frozen=True)
class RhoTable:
    e: int
    values: tuple[Fraction, ...]
    argmin: int
    minimum: Fraction

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "values": [str(v) for v in self.values],
            "argmin": self.argmin,
            "minimum": str(self.minimum),
        }

    @classmethod
    def from_json(cls, data: dict) -> RhoTable:
        return cls(
            int(data["e"]),
            tuple(Fraction(v) for v in data["values"]),
            int(data["argmin"]),
            Fraction(data["minimum"]),
        )


def r_min(e: int) -> RhoTable:
    if e < 1:
        raise IndexOutOfRange("e must be positive")
    values = tuple(rho(e, i) for i in range(e + 1))
    if e <= 2:
        # R_1 = R_2 = 1, attained at i = e - 1 and i = 1 respectively
        return RhoTable(e, values, e - 1 if e == 1 else 1, Fraction(1))
    window = range(1, e // 2 + 1)
    best = min(window, key=lambda i: (values[i], i))
    return RhoTable(e, values, best, values[best])


@dataclass(frozen=True)
class LemmaAReport:
    non_negative: bool
    strictly_positive: bool
    first_violation: int | None
    complete: bool
    coefficients: tuple[Fraction, ...] = field(default=(), repr=False)

    def to_json(self) -> dict:
        return {
            "non_negative": self.non_negative,
            "strictly_positive": self.strictly_positive,
            "first_violation": self.first_violation,
            "complete": self.complete,
            "coefficients": [str(c) for c in self.coefficients],
        }


def lemma_a_check(e: int, A, order: int | None = None) -> LemmaAReport:
    """Scan ``(1 - A t + A t^3)(1 + t)^(e-1)/(1 - t)``.

    Past degree ``e + 1`` the coefficients are constantly ``2^(e-1)``, so any
    order ``>= e + 2`` gives a verdict for the whole series.
    """
    if e < 2:
        raise PreconditionViolated("e must be at least 2")
    if order is None:
        order = e + 2
    if order < e + 2:
        raise PreconditionViolated(f"order must be at least e + 2 = {e + 2}")
    A = Fraction(A)
    f = RationalFunction(
        Polynomial((1, -A, 0, A)) * Polynomial((1, 1)) ** (e - 1), Polynomial((1, -1))
    )
    coeffs = rf_expand(f, order).coeffs
    tail_ok = all(c == 2 ** (e - 1) for c in coeffs[e + 2 :])
    neg = next((i for i, c in enumerate(coeffs) if c < 0), None)
    nonpos = next((i for i, c in enumerate(coeffs) if c <= 0), None)
    return LemmaAReport(neg is None, nonpos is None, neg, tail_ok, coeffs)


@dataclass(frozen=True)
class TeterGrowthReport:
    passed: bool
    edim: int
    rate: Fraction
    branch: str  # "closed_form" for e = 2, "rate" otherwise
    order: int
    first_violation: int | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "edim": self.edim,
            "rate": str(self.rate),
            "branch": self.branch,
            "order": self.order,
            "first_violation": self.first_violation,
            "reason": self.reason,
        }


def teter_growth_check(spec: TeterSpec, order: int) -> TeterGrowthReport:
    e = spec.edim
    mu = teter_bass(spec, order)
    R = r_min(e).minimum
    if e == 2:
        expected = [2] + [3 * 2 ** (i - 1) for i in range(1, order + 1)]
        bad = next((i for i in range(order + 1) if mu[i] != expected[i]), None)
        return TeterGrowthReport(bad is None, e, R, "closed_form", order, bad,
                                 None if bad is None else "closed form")
    if mu[0] != e:
        return TeterGrowthReport(False, e, R, "rate", order, 0, "mu_0 != edim")
    scaled = rf_expand((1 - R * TVAR) * teter_bass_rf(spec), order)
    bad = next((i for i in range(order + 1) if scaled[i] < 0), None)
    if bad is not None:
        return TeterGrowthReport(False, e, R, "rate", order, bad, "negative coefficient")
    bad = next((i for i in range(order) if mu[i + 1] <= mu[i]), None)
    if bad is not None:
        return TeterGrowthReport(False, e, R, "rate", order, bad + 1, "not increasing")
    return TeterGrowthReport(True, e, R, "rate", order)
