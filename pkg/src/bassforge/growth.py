"""Growth certificates for finite windows of a sequence.

Statements that hold "for all i >> 0" are reported as the smallest index
from which the property holds through the end of the window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonpositiveEntry
from .series import to_rational
from .surd import QuadraticSurd, parse_surd, surd_pow


def _as_surd(x) -> QuadraticSurd:
    if isinstance(x, QuadraticSurd):
        return x
    if isinstance(x, str):
        return parse_surd(x)
    return QuadraticSurd.rational(x)


def _prepare(seq: Sequence, start: int) -> list[Fraction]:
    values = [to_rational(x) for x in seq]
    if start < 0:
        raise ValueError("start index must be non-negative")
    for i in range(start, len(values)):
        if values[i] <= 0:
            raise NonpositiveEntry(f"entry {i} is {values[i]}, expected positive", i)
    return values


def _holds_from(values, start, pred) -> int | None:
    # smallest k >= start with pred(i) for every step k <= i < end
    k = len(values) - 1
    while k > start and pred(k - 1):
        k -= 1
    if k == len(values) - 1 and k > start:
        # the last step already fails; nothing holds on a non-trivial tail
        return None
    return k


@dataclass(frozen=True)
class GrowthReport:
    start_index: int
    nondecreasing_from: int | None
    increasing_from: int | None
    min_ratio: Fraction | None
    exp_base_certificate: QuadraticSurd | None

    def to_json(self) -> dict:
        return {
            "start_index": self.start_index,
            "nondecreasing_from": self.nondecreasing_from,
            "increasing_from": self.increasing_from,
            "min_ratio": None if self.min_ratio is None else str(self.min_ratio),
            "exp_base_certificate": (
                None if self.exp_base_certificate is None
                else self.exp_base_certificate.to_json()
            ),
        }

    @classmethod
    def from_json(cls, data: dict) -> GrowthReport:
        cert = data.get("exp_base_certificate")
        ratio = data.get("min_ratio")
        return cls(
            int(data["start_index"]),
            data.get("nondecreasing_from"),
            data.get("increasing_from"),
            None if ratio is None else Fraction(ratio),
            None if cert is None else QuadraticSurd.from_json(cert),
        )


def exp_certificate(values: Sequence, start: int, A) -> bool:
    """``a_i >= A^i`` at absolute index i for every i in the window."""
    A = _as_surd(A)
    power = surd_pow(A, start)
    for i in range(start, len(values)):
        if QuadraticSurd.rational(values[i]) < power:
            return False
        power = power * A
    return True


def analyze(seq: Sequence, start: int = 0, candidate=None) -> GrowthReport:
    values = _prepare(seq, start)
    if start >= len(values):
        return GrowthReport(start, None, None, None, None)
    nondec = _holds_from(values, start, lambda i: values[i + 1] >= values[i])
    inc = _holds_from(values, start, lambda i: values[i + 1] > values[i])
    if len(values) - start >= 2:
        min_ratio = min(values[i + 1] / values[i] for i in range(start, len(values) - 1))
    else:
        min_ratio = None
    base = candidate if candidate is not None else min_ratio
    cert = None
    if base is not None and exp_certificate(values, start, base):
        cert = _as_surd(base)
    return GrowthReport(start, nondec, inc, min_ratio, cert)


@dataclass(frozen=True)
class TermwiseCertificate:
    holds: bool
    first_violation: int | None = None
    rate: QuadraticSurd | None = None

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "first_violation": self.first_violation,
            "rate": None if self.rate is None else self.rate.to_json(),
        }


def certify_termwise(seq: Sequence, start: int, A) -> TermwiseCertificate:
    """Check ``a_{i+1} >= A a_i`` for every step in the window from ``start``.

    ``first_violation`` is the index i of the failing step i -> i+1.
    """
    values = _prepare(seq, start)
    A = _as_surd(A)
    for i in range(start, len(values) - 1):
        if QuadraticSurd.rational(values[i + 1]) < A * values[i]:
            return TermwiseCertificate(False, i, A)
    return TermwiseCertificate(True, None, A)


def first_valid_index(seq: Sequence, start: int, A) -> int | None:
    """Smallest index from which ``a_{i+1} >= A a_i`` holds to the window end."""
    values = _prepare(seq, start)
    A = _as_surd(A)
    return _holds_from(
        values, start, lambda i: QuadraticSurd.rational(values[i + 1]) >= A * values[i]
    )
