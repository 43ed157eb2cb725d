"""Exact truncated power series, dense polynomials and rational functions.

Coefficients are :class:`fractions.Fraction` throughout. A power series
carries its truncation order explicitly: coefficients of ``t^0 .. t^order``
are exact, nothing beyond is claimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import NotACommonRoot, ZeroConstantTerm

Rational = Fraction


def to_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact coefficient")


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rationals(text: str) -> list[Fraction]:
    """Parse a comma separated list such as ``"1,-2,1/3"``."""
    text = text.strip()
    if not text:
        return []
    return [Fraction(tok.strip()) for tok in text.split(",")]


class Verdict(NamedTuple):
    """Outcome of a scan: ``ok`` plus the first offending index, if any."""

    ok: bool
    first_violation: int | None = None

    def __bool__(self):
        return self.ok


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    cs = [to_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def monomial(cls, degree: int, c=1) -> Polynomial:
        return cls((0,) * degree + (c,))

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        # The zero polynomial gets degree -1.
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Polynomial((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> Polynomial:
        """Multiply by ``t^k``."""
        return Polynomial((0,) * k + self.coeffs)

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial(c / lead for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> Polynomial:
        return cls(to_rational(c) for c in data)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                power = "t" if i == 1 else f"t^{i}"
                body = power if mag == 1 else f"{format_rational(mag)}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Polynomial((x,))
    return NotImplemented


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(to_rational(c) for c in self.coeffs)
        if not cs:
            raise ValueError("a power series needs at least the t^0 coefficient")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, coeffs: Iterable, order: int | None = None) -> PowerSeries:
        """Build from leading coefficients, zero-padding up to ``order``."""
        cs = [to_rational(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> PowerSeries:
        return cls(tuple(p[i] for i in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient (None if all vanish)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __add__(self, other):
        return ps_add(self, _as_series(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return ps_add(self, -_as_series(other, self.order))

    def __rsub__(self, other):
        return ps_add(-self, _as_series(other, self.order))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PowerSeries(tuple(c * other for c in self.coeffs))
        return ps_mul(self, _as_series(other, self.order))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ps_div(self, _as_series(other, self.order))

    def __rtruediv__(self, other):
        return ps_div(_as_series(other, self.order), self)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> PowerSeries:
        return cls(tuple(to_rational(c) for c in data))

    def __str__(self):
        return ", ".join(format_rational(c) for c in self.coeffs)


def _as_series(x, order: int) -> PowerSeries:
    if isinstance(x, PowerSeries):
        return x
    if isinstance(x, Polynomial):
        return PowerSeries.from_polynomial(x, order)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return PowerSeries.of([x], order)
    raise TypeError(f"cannot treat {x!r} as a power series")


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order) + 1
    return PowerSeries(tuple(a.coeffs[i] + b.coeffs[i] for i in range(n)))


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order) + 1
    out = [Fraction(0)] * n
    for i in range(n):
        ai = a.coeffs[i]
        if ai:
            for j in range(n - i):
                out[i + j] += ai * b.coeffs[j]
    return PowerSeries(tuple(out))


def _divide(num, den, n: int) -> PowerSeries:
    # num, den indexable with zero default; den[0] != 0 checked by caller
    b0 = den[0]
    dlen = len(den)
    q: list[Fraction] = []
    for k in range(n):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, dlen - 1) + 1):
            bj = den[j]
            if bj:
                acc -= bj * q[k - j]
        q.append(acc / b0)
    return PowerSeries(tuple(q))


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """The unique ``q`` with ``q*b == a`` up to ``min(a.order, b.order)``."""
    if b.coeffs[0] == 0:
        raise ZeroConstantTerm("divisor has zero constant term")
    n = min(a.order, b.order) + 1
    return _divide(a.coeffs, b.coeffs, n)


@dataclass(frozen=True)
class RationalFunction:
    num: Polynomial
    den: Polynomial = Polynomial((1,))

    def __post_init__(self):
        num = self.num if isinstance(self.num, Polynomial) else Polynomial(self.num)
        den = self.den if isinstance(self.den, Polynomial) else Polynomial(self.den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, num: Iterable, den: Iterable = (1,)) -> RationalFunction:
        return cls(Polynomial(num), Polynomial(den))

    def expand(self, order: int) -> PowerSeries:
        return rf_expand(self, order)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def reduced(self) -> RationalFunction:
        """Cancel the polynomial gcd and scale so the denominator is
        normalized (constant term 1 when nonzero, otherwise monic)."""
        g = poly_gcd(self.num, self.den)
        num, den = self.num // g, self.den // g
        scale = den[0] if den[0] else den.coeffs[-1]
        return RationalFunction(num * (1 / scale), den * (1 / scale))

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        ).reduced()

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) + (-self)

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den).reduced()

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num).reduced()

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den**-n, self.num**-n).reduced()
        return RationalFunction(self.num**n, self.den**n).reduced()

    def same_function(self, other) -> bool:
        """Equality as functions (cross-multiplication)."""
        other = _as_rf(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RationalFunction:
        return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data["den"]))

    def __str__(self):
        return f"({self.num})/({self.den})"


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return RationalFunction(Polynomial((x,)))
    raise TypeError(f"cannot treat {x!r} as a rational function")


TVAR = RationalFunction(Polynomial((0, 1)))


def rf_expand(f: RationalFunction, order: int) -> PowerSeries:
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    if f.den[0] == 0:
        raise ZeroConstantTerm(f"denominator {f.den} vanishes at t = 0")
    return _divide(f.num.coeffs, f.den.coeffs, order + 1)


def cancel_linear_root(f: RationalFunction, root) -> RationalFunction:
    """Divide numerator and denominator exactly by the linear factor at ``root``.

    The factor is scaled to ``1 - t/root`` (or ``t`` for root 0) so that the
    constant terms survive unchanged.
    """
    root = to_rational(root)
    for name, p in (("numerator", f.num), ("denominator", f.den)):
        value = p(root)
        if value != 0:
            raise NotACommonRoot(f"{name} takes the value {format_rational(value)} at {format_rational(root)}")
    factor = Polynomial((1, -1 / root)) if root else Polynomial((0, 1))
    return RationalFunction(f.num // factor, f.den // factor)


def coeffwise_leq(a: PowerSeries, b: PowerSeries, start: int = 0) -> Verdict:
    """Check ``a_i <= b_i`` for ``start <= i <= min order``."""
    top = min(a.order, b.order)
    if start > top:
        raise ValueError(f"start index {start} beyond common order {top}")
    for i in range(start, top + 1):
        if a.coeffs[i] > b.coeffs[i]:
            return Verdict(False, i)
    return Verdict(True)


def first_negative(s: PowerSeries, start: int = 0) -> int | None:
    for i in range(start, s.order + 1):
        if s.coeffs[i] < 0:
            return i
    return None


def first_nonpositive(s: PowerSeries, start: int = 0) -> int | None:
    for i in range(start, s.order + 1):
        if s.coeffs[i] <= 0:
            return i
    return None
