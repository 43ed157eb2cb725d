"""Exact arithmetic in Q(sqrt(D)).

A :class:`QuadraticSurd` is ``(p + q*sqrt(D)) / s`` with integers ``p, q``,
``s > 0`` and ``D`` square-free. Rational values are stored with
``q = 0, D = 0`` so that callers never have to branch on rationality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import DivisionByZero, MixedRadicands


def square_free_split(n: int) -> tuple[int, int]:
    """Return ``(f, m)`` with ``n == f*f*m`` and ``m`` square-free."""
    if n < 0:
        raise ValueError("radicand must be non-negative")
    if n in (0, 1):
        return 1, n
    f, m = 1, n
    k = 2
    while k * k <= m:
        while m % (k * k) == 0:
            m //= k * k
            f *= k
        k += 1
    return f, m


def _sign(p: int, q: int, D: int) -> int:
    """Sign of ``p + q*sqrt(D)`` using one squaring step."""
    if q == 0 or D == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    if (p > 0) == (q > 0):
        return 1 if p > 0 else -1
    diff = p * p - q * q * D
    # |p| vs |q|sqrt(D); p carries the sign of the larger magnitude
    if diff == 0:
        return 0
    if p > 0:
        return 1 if diff > 0 else -1
    return -1 if diff > 0 else 1


@total_ordering
@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    p: int
    q: int = 0
    s: int = 1
    D: int = 0

    def __post_init__(self):
        p, q, s, D = (int(v) for v in (self.p, self.q, self.s, self.D))
        if s == 0:
            raise DivisionByZero("surd with zero denominator")
        if s < 0:
            p, q, s = -p, -q, -s
        f, D = square_free_split(D)
        q *= f
        if D == 1:
            p, q, D = p + q, 0, 0
        if q == 0 or D == 0:
            q, D = 0, 0
        g = math.gcd(math.gcd(p, q), s)
        if g > 1:
            p, q, s = p // g, q // g, s // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "D", D)

    @classmethod
    def rational(cls, x) -> QuadraticSurd:
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator, 0)

    @classmethod
    def sqrt(cls, n: int) -> QuadraticSurd:
        return cls(0, 1, 1, n)

    def is_rational(self) -> bool:
        return self.q == 0

    def to_fraction(self) -> Fraction:
        if self.q:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.s)

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self.p, -self.q, self.s, self.D)

    def __float__(self):
        return (self.p + self.q * math.sqrt(self.D)) / self.s

    def __hash__(self):
        return hash((self.p, self.q, self.s, self.D))

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_arith(self, other, "add")

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_arith(self, other, "sub")

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_arith(other, self, "sub")

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_arith(self, other, "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_arith(self, other, "div")

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_arith(other, self, "div")

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.q, self.s, self.D)

    def __pow__(self, n):
        return surd_pow(self, n)

    def sign(self) -> int:
        return _sign(self.p, self.q, self.D)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.D and other.D and self.D != other.D:
            return False
        return surd_cmp(self, other) == 0

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return surd_cmp(self, other) < 0

    # serialization

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "s": self.s, "D": self.D}

    @classmethod
    def from_json(cls, data: dict) -> QuadraticSurd:
        return cls(data["p"], data["q"], data["s"], data["D"])

    def render(self) -> str:
        if self.q == 0:
            return str(self.p) if self.s == 1 else f"{self.p}/{self.s}"
        if self.q == 1:
            rad = f"√{self.D}"
        elif self.q == -1:
            rad = f"-√{self.D}"
        else:
            rad = f"{self.q}√{self.D}"
        body = rad if self.p == 0 else f"{self.p}{'+' if self.q > 0 else ''}{rad}"
        return f"({body})/{self.s}" if self.s != 1 else f"({body})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QuadraticSurd(p={self.p}, q={self.q}, s={self.s}, D={self.D})"


def _coerce(x):
    if isinstance(x, QuadraticSurd):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QuadraticSurd.rational(x)
    return NotImplemented


def _common_radicand(a: QuadraticSurd, b: QuadraticSurd) -> int:
    if a.D and b.D and a.D != b.D:
        raise MixedRadicands(f"cannot combine sqrt({a.D}) with sqrt({b.D})")
    return a.D or b.D


def surd_arith(a: QuadraticSurd, b: QuadraticSurd, op: str) -> QuadraticSurd:
    D = _common_radicand(a, b)
    if op == "add":
        return QuadraticSurd(a.p * b.s + b.p * a.s, a.q * b.s + b.q * a.s, a.s * b.s, D)
    if op == "sub":
        return QuadraticSurd(a.p * b.s - b.p * a.s, a.q * b.s - b.q * a.s, a.s * b.s, D)
    if op == "mul":
        return QuadraticSurd(a.p * b.p + a.q * b.q * D, a.p * b.q + a.q * b.p, a.s * b.s, D)
    if op == "div":
        if b.p == 0 and b.q == 0:
            raise DivisionByZero("division by zero surd")
        # multiply through by the conjugate of b
        norm = b.p * b.p - b.q * b.q * D
        p = (a.p * b.p - a.q * b.q * D) * b.s
        q = (a.q * b.p - a.p * b.q) * b.s
        return QuadraticSurd(p, q, a.s * norm, D)
    raise ValueError(f"unknown operation {op!r}")


def surd_cmp(a: QuadraticSurd, b: QuadraticSurd) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    D = _common_radicand(a, b)
    return _sign(a.p * b.s - b.p * a.s, a.q * b.s - b.q * a.s, D)


def surd_pow(a: QuadraticSurd, n: int) -> QuadraticSurd:
    if n < 0:
        return surd_arith(QuadraticSurd(1), surd_pow(a, -n), "div")
    result, base = QuadraticSurd(1, 0, 1, a.D), a
    while n:
        if n & 1:
            result = surd_arith(result, base, "mul")
        base = surd_arith(base, base, "mul")
        n >>= 1
    return result


_SURD_RE = re.compile(
    r"""^\s*
    (?:\(\s*)?
    (?P<p>[+-]?\d+)?\s*
    (?:(?P<sgn>[+-])?\s*(?P<q>\d+)?\s*\*?\s*(?:sqrt|√)\s*\(?\s*(?P<D>\d+)\s*\)?)?
    \s*\)?\s*
    (?:/\s*(?P<s>\d+))?
    \s*$""",
    re.VERBOSE,
)


def parse_surd(text: str) -> QuadraticSurd:
    """Parse forms such as ``3/2``, ``(1+sqrt5)/2``, ``2-3*sqrt(7)`` or ``√5``."""
    m = _SURD_RE.match(text)
    if not m or (m.group("p") is None and m.group("D") is None):
        raise ValueError(f"cannot parse {text!r} as a quadratic surd")
    p = int(m.group("p") or 0)
    s = int(m.group("s") or 1)
    if m.group("D") is None:
        return QuadraticSurd(p, 0, s, 0)
    q = int(m.group("q") or 1)
    if m.group("sgn") == "-":
        q = -q
    elif m.group("sgn") is None and m.group("p") is not None:
        raise ValueError(f"missing sign between terms in {text!r}")
    return QuadraticSurd(p, q, s, int(m.group("D")))
