"""Poincare and Bass series of fiber products ``S x_k T``.

Regular components carry only their dimension; singular components are
given by closed-form rational functions for ``P_k`` and the Bass series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidSpec, PreconditionViolated
from .series import (
    Polynomial,
    PowerSeries,
    RationalFunction,
    TVAR,
    first_negative,
    rf_expand,
)


@dataclass(frozen=True)
class FiberComponent:
    kind: str  # "regular" or "singular"
    dim: int | None = None
    poincare: RationalFunction | None = None
    bass: RationalFunction | None = None
    depth: int | None = None
    edim: int | None = None

    def __post_init__(self):
        if self.kind == "regular":
            if self.dim is None or self.dim < 1:
                # Regular(0) is the field itself, for which the fiber product is not defined
                raise InvalidSpec("regular component needs dim >= 1")
        elif self.kind == "singular":
            if self.poincare is None or self.bass is None:
                raise InvalidSpec("singular component needs poincare and bass series")
            if self.depth is None or self.depth < 0:
                raise InvalidSpec("singular component needs a non-negative depth")
            if self.edim is None or self.edim < 1:
                raise InvalidSpec("singular component needs a positive edim")
            if self.poincare.den[0] == 0 or self.poincare.num[0] != self.poincare.den[0]:
                raise InvalidSpec("poincare series must have constant term 1")
            bass = rf_expand(self.bass, self.depth)
            if any(bass[i] != 0 for i in range(self.depth)) or bass[self.depth] == 0:
                raise InvalidSpec(f"bass series must start at index depth = {self.depth}")
        else:
            raise InvalidSpec(f"unknown component kind {self.kind!r}")

    @classmethod
    def regular(cls, dim: int) -> FiberComponent:
        return cls("regular", dim=dim)

    @classmethod
    def singular(cls, poincare, bass, depth: int, edim: int | None = None) -> FiberComponent:
        if edim is None:
            edim = int(rf_expand(poincare, 1)[1])
        return cls("singular", poincare=poincare, bass=bass, depth=depth, edim=edim)

    @property
    def is_regular(self) -> bool:
        return self.kind == "regular"

    @property
    def component_depth(self) -> int:
        return self.dim if self.is_regular else self.depth

    @property
    def component_edim(self) -> int:
        return self.dim if self.is_regular else self.edim

    def poincare_rf(self) -> RationalFunction:
        if self.is_regular:
            return RationalFunction(Polynomial((1, 1)) ** self.dim)
        return self.poincare

    def bass_rf(self) -> RationalFunction:
        if self.is_regular:
            return RationalFunction(Polynomial.monomial(self.dim, 1))
        return self.bass

    def is_zero_dim_hypersurface(self) -> bool:
        if self.is_regular:
            return False
        return self.poincare.same_function(RationalFunction(Polynomial((1,)), Polynomial((1, -1))))

    def to_json(self) -> dict:
        if self.is_regular:
            return {"kind": "regular", "dim": self.dim}
        return {
            "kind": "singular",
            "poincare": self.poincare.to_json(),
            "bass": self.bass.to_json(),
            "depth": self.depth,
            "edim": self.edim,
        }

    @classmethod
    def from_json(cls, data: dict) -> FiberComponent:
        kind = data.get("kind")
        if kind == "regular":
            return cls.regular(int(data["dim"]))
        if kind == "singular":
            return cls.singular(
                RationalFunction.from_json(data["poincare"]),
                RationalFunction.from_json(data["bass"]),
                int(data["depth"]),
                int(data["edim"]) if "edim" in data else None,
            )
        raise InvalidSpec(f"unknown component kind {kind!r}")


def zero_dim_hypersurface() -> FiberComponent:
    """``k[x]/(x^2)``: ``P = 1/(1-t)``, ``I = 1``."""
    return FiberComponent.singular(
        RationalFunction(Polynomial((1,)), Polynomial((1, -1))),
        RationalFunction(Polynomial((1,))),
        depth=0,
        edim=1,
    )


def fiber_poincare_rf(S: FiberComponent, T: FiberComponent) -> RationalFunction:
    one = RationalFunction(Polynomial((1,)))
    return one / (one / S.poincare_rf() + one / T.poincare_rf() - one)


def fiber_poincare(S: FiberComponent, T: FiberComponent, order: int) -> PowerSeries:
    return rf_expand(fiber_poincare_rf(S, T), order)


def _quotient_term(C: FiberComponent) -> RationalFunction:
    # contribution of one component to I^R / P^R
    if C.is_regular:
        n = C.dim
        return -RationalFunction(Polynomial.monomial(n + 1, 1), Polynomial((1, 1)) ** n)
    return C.bass_rf() / C.poincare_rf()


def fiber_bass_rf(S: FiberComponent, T: FiberComponent) -> RationalFunction:
    quotient = TVAR + _quotient_term(S) + _quotient_term(T)
    return quotient * fiber_poincare_rf(S, T)


def fiber_bass(S: FiberComponent, T: FiberComponent, order: int) -> PowerSeries:
    return rf_expand(fiber_bass_rf(S, T), order)


def fiber_depth(depth_s: int, depth_t: int) -> int:
    return min(depth_s, depth_t, 1)


def fiber_component(S: FiberComponent, T: FiberComponent) -> FiberComponent:
    """The fiber product packaged as a singular component, so it can be fed back in."""
    return FiberComponent.singular(
        fiber_poincare_rf(S, T),
        fiber_bass_rf(S, T),
        fiber_depth(S.component_depth, T.component_depth),
        S.component_edim + T.component_edim,
    )


@dataclass(frozen=True)
class FiberClassification:
    tag: str  # "Hypersurface", "GolodException" or "General"

    def to_json(self) -> dict:
        return {"tag": self.tag}


def classify_exception(S: FiberComponent, T: FiberComponent) -> FiberClassification:
    def is_line(C):
        return C.is_regular and C.dim == 1

    if is_line(S) and is_line(T):
        return FiberClassification("Hypersurface")
    for a, b in ((S, T), (T, S)):
        if is_line(a) and (b.is_zero_dim_hypersurface() or (b.is_regular and b.dim == 2)):
            return FiberClassification("GolodException")
    return FiberClassification("General")


def _coeff_list(c: Sequence, n: int) -> list[Fraction]:
    c = [Fraction(x) for x in c]
    if len(c) < n:
        raise PreconditionViolated(f"need at least {n} coefficients c_i, got {len(c)}")
    return c


def _check_c(c: list[Fraction]):
    if c[0] <= 1:
        raise PreconditionViolated("c_0 must exceed 1")
    for i in range(1, len(c)):
        if c[i] <= c[i - 1]:
            raise PreconditionViolated(f"c must be strictly increasing (fails at index {i})")


@dataclass(frozen=True)
class Series1Report:
    passed: bool
    series: PowerSeries
    first_violation: int | None = None
    reason: str | None = None


def series1_V(c: Sequence, order: int) -> Series1Report:
    """Expand ``V = 1/(1 - t^2 sum c_i t^i)`` and certify its growth claims.

    ``c`` must supply at least ``order - 1`` entries; nothing is extrapolated.
    """
    c = _coeff_list(c, max(order - 1, 1))
    _check_c(c)
    den = Polynomial([1, 0] + [-x for x in c[: max(order - 1, 1)]])
    v = rf_expand(RationalFunction(Polynomial((1,)), den), order)
    checks = [(0, v[0] == 1, "v0"), (1, order < 1 or v[1] == 0, "v1")]
    if order >= 2:
        checks.append((2, v[2] == c[0], "v2"))
    for i, ok, why in checks:
        if not ok:
            return Series1Report(False, v, i, why)
    for i in range(2, order):
        if not v[i + 1] > v[i]:
            return Series1Report(False, v, i + 1, "increasing")
    for i in range(3, order + 1):
        # v_i > sqrt(c0)^i, compared after squaring (v_i > 0 here)
        if not (v[i] > 0 and v[i] ** 2 > c[0] ** i):
            return Series1Report(False, v, i, "exponential")
    return Series1Report(True, v)


@dataclass(frozen=True)
class Series1bReport:
    passed: bool
    degree1: Fraction
    first_violation: int | None = None


def w_condition_check(W: RationalFunction, order: int) -> bool:
    poly = RationalFunction(Polynomial((1, -1, 1)))
    return first_negative(rf_expand(poly * W, order), 0) is None


def series1_check_b(W: RationalFunction, c: Sequence, order: int) -> Series1bReport:
    w = rf_expand(W, order)
    if w[0] == 0:
        raise PreconditionViolated("W must have order 0")
    if not w_condition_check(W, order):
        raise PreconditionViolated("(1 - t + t^2) W has a negative coefficient")
    c = _coeff_list(c, max(order - 1, 1))
    _check_c(c)
    V = RationalFunction(Polynomial((1,)), Polynomial([1, 0] + [-x for x in c[: max(order - 1, 1)]]))
    prod = rf_expand(RationalFunction(Polynomial((1, -1))) * V * W, order)
    deg1 = prod[1] if order >= 1 else Fraction(0)
    if order >= 1 and deg1 != w[1] - w[0]:
        return Series1bReport(False, deg1, 1)
    for i in range(order + 1):
        if i != 1 and prod[i] <= 0:
            return Series1bReport(False, deg1, i)
    return Series1bReport(True, deg1)
