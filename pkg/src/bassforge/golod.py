"""Bass series of Golod rings from reduced Koszul homology ranks.

A Golod ring of depth ``d`` and embedding dimension ``e`` is described by
the vector ``h = (h_0, ..., h_{e-d-1})`` with ``h_0 = 1``; the full Koszul
ranks are recovered as ``c_i = h_i + h_{i-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GorensteinCase, InvalidSpec, IrrationalResidue, PreconditionViolated
from .series import Polynomial, PowerSeries, RationalFunction, rf_expand
from .surd import QuadraticSurd, surd_pow


@dataclass(frozen=True)
class GolodSpec:
    depth: int
    edim: int
    h: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.h)
        object.__setattr__(self, "h", h)
        if self.depth < 0:
            raise InvalidSpec("depth must be non-negative")
        if self.edim < 1:
            raise InvalidSpec("embedding dimension must be positive")
        if len(h) != self.edim - self.depth:
            raise InvalidSpec(
                f"h must have e - d = {self.edim - self.depth} entries, got {len(h)}"
            )
        if h[0] != 1:
            raise InvalidSpec("h_0 must equal 1")
        if any(x <= 0 for x in h):
            raise InvalidSpec("every h_i must be positive")

    @property
    def codim(self) -> int:
        return self.edim - self.depth

    def h_at(self, i: int) -> int:
        return self.h[i] if 0 <= i < len(self.h) else 0

    def require_non_gorenstein(self):
        if self.codim < 2:
            raise GorensteinCase(
                f"e - d = {self.codim}: a Golod ring with e - d <= 1 is a hypersurface"
            )

    def to_json(self) -> dict:
        return {"depth": self.depth, "edim": self.edim, "h": list(self.h)}

    @classmethod
    def from_json(cls, data: dict) -> GolodSpec:
        return cls(int(data["depth"]), int(data["edim"]), tuple(data["h"]))


@dataclass(frozen=True)
class KoszulRanks:
    c: tuple[int, ...]

    def __post_init__(self):
        if not self.c or self.c[0] != 1:
            raise InvalidSpec("c_0 = rank H_0 must be 1")

    @property
    def edim(self) -> int:
        return len(self.c) - 1


def ranks_merge(spec: GolodSpec) -> KoszulRanks:
    """Koszul ranks ``c_i = h_i + h_{i-1}`` for ``0 <= i <= e``."""
    return KoszulRanks(tuple(spec.h_at(i) + spec.h_at(i - 1) for i in range(spec.edim + 1)))


def golod_upper_bound_rf(c: KoszulRanks | Sequence[int], e: int | None = None) -> RationalFunction:
    """The unreduced Golod upper bound as a rational function of t."""
    cs = tuple(c.c if isinstance(c, KoszulRanks) else c)
    if e is None:
        e = len(cs) - 1
    if cs[0] != 1:
        raise InvalidSpec("c_0 must equal 1")

    def ck(i):
        return cs[i] if 0 <= i < len(cs) else 0

    num = [ck(e - i) for i in range(e)] + [0, -1]
    den = [1, 0] + [-ck(i) for i in range(1, e + 1)]
    return RationalFunction(Polynomial(num), Polynomial(den))


def golod_upper_bound(c, e: int, order: int) -> PowerSeries:
    return rf_expand(golod_upper_bound_rf(c, e), order)


def golod_bass_rf(spec: GolodSpec) -> RationalFunction:
    """Reduced closed form of the Bass series (common factor 1+t removed)."""
    spec.require_non_gorenstein()
    d, e = spec.depth, spec.edim
    num = [0] * (e + 1)
    for i in range(e - d - 1):
        num[d + i] += spec.h[e - d - 1 - i]
    num[e - 1] += 1
    num[e] -= 1
    den = [1, -1] + [-spec.h[i] for i in range(1, e - d)]
    return RationalFunction(Polynomial(num), Polynomial(den))


def golod_bass_series(spec: GolodSpec, order: int) -> PowerSeries:
    return rf_expand(golod_bass_rf(spec), order)


@dataclass(frozen=True)
class RecurrenceReport:
    passed: bool
    failed_check: str | None = None  # "mud", "mue" or "mue+n"
    n: int | None = None


def bass_recurrence_check(spec: GolodSpec, series: PowerSeries) -> RecurrenceReport:
    """Check the initial value and the linear recurrences satisfied by the
    Bass numbers of a Golod ring against a given coefficient list."""
    spec.require_non_gorenstein()
    d, e, h = spec.depth, spec.edim, spec.h
    if series.order < e + 2:
        raise PreconditionViolated(f"need series order >= e + 2 = {e + 2}")
    mu = series.coeffs
    if mu[d] != h[e - d - 1]:
        return RecurrenceReport(False, "mud", None)
    expected = mu[e - 1] + sum(mu[d + i] * h[e - d - 1 - i] for i in range(e - d - 1)) - 1
    if mu[e] != expected:
        return RecurrenceReport(False, "mue", 0)
    for n in range(1, series.order - e + 1):
        expected = mu[e + n - 1] + sum(
            mu[d + i] * h[e - d - 1 + n - i] for i in range(n, n + e - d - 1)
        )
        if mu[e + n] != expected:
            return RecurrenceReport(False, "mue+n", n)
    return RecurrenceReport(True)


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class GolodRate:
    classification: str  # "termwise" or "fibonacci_exception"
    rate: Fraction | None
    order: int
    certified: bool
    first_violation: int | None = None


def golod_rate(spec: GolodSpec, order: int) -> GolodRate:
    """Termwise growth rate ``min mu_{i+1}/mu_i`` over ``d <= i < e``,
    certified against the expansion up to ``order``.

    The case ``e - d = 2, mu_d = 1`` has Bass numbers ``2F_i`` and is
    reported as ``fibonacci_exception`` instead of a rate.
    """
    spec.require_non_gorenstein()
    d, e = spec.depth, spec.edim
    mu = golod_bass_series(spec, max(order, e)).coeffs
    if e - d == 2 and mu[d] == 1:
        bad = next(
            (i for i in range(1, order - d + 1) if mu[d + i] != 2 * fibonacci(i)), None
        )
        return GolodRate("fibonacci_exception", None, order, bad is None, bad)
    rate = min(mu[i + 1] / mu[i] for i in range(d, e))
    bad = next((i for i in range(d, order) if mu[i + 1] < rate * mu[i]), None)
    return GolodRate("termwise", rate, order, bad is None and rate > 1, bad)


def codim2_rf(depth: int, r: int) -> RationalFunction:
    if r < 1:
        raise InvalidSpec("type r must be positive")
    return RationalFunction(Polynomial([r, 1, -1]).shift(depth), Polynomial([1, -1, -r]))


def codim2_bass(depth: int, r: int, order: int) -> PowerSeries:
    """Bass series ``t^d (r + t - t^2)/(1 - t - r t^2)`` of a codimension-2
    ring that is not a complete intersection."""
    return rf_expand(codim2_rf(depth, r), order)


def codim2_closed_form(r: int, i: int) -> Fraction:
    """``mu_{d+i}`` for ``i >= 3`` from the eigenvalue formula, in Q(sqrt(1+4r))."""
    if r < 1:
        raise InvalidSpec("type r must be positive")
    if i < 3:
        raise PreconditionViolated("closed form is stated for i >= 3")
    delta = QuadraticSurd.sqrt(1 + 4 * r)
    plus = surd_pow((1 + delta) / 2, i - 1)
    minus = surd_pow((1 - delta) / 2, i - 1)
    value = Fraction(r + 1, 2) / delta * ((2 * r - 1 + delta) * plus + (1 - 2 * r + delta) * minus)
    if not value.is_rational():
        raise IrrationalResidue(f"sqrt({value.D}) part did not cancel: {value}")
    return value.to_fraction()
