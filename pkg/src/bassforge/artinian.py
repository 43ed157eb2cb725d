"""Betti-sequence bounds over artinian rings, mostly with ``m^3 = 0``.

Notation: ``a = rank m^2``, ``e = rank m/m^2``, ``r = rank Soc R``.
Assumptions such as "k is not a direct summand of M_i" cannot be read off
numbers, so callers pass them in as flags.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GorensteinCase, InvalidSpec, NonpositiveTerm, PreconditionViolated
from .surd import QuadraticSurd


@dataclass(frozen=True)
class M3Spec:
    a: int
    e: int
    r: int

    def __post_init__(self):
        a, e, r = self.a, self.e, self.r
        if e < 2:
            raise InvalidSpec("embedding dimension must be at least 2")
        if r < 1 or a < 0:
            raise InvalidSpec("need r >= 1 and a >= 0")
        if a > r:
            raise InvalidSpec(f"a = {a} exceeds r = {r}: m^2 lies in the socle")
        if a == 0 and e != r:
            raise InvalidSpec("m^2 = 0 forces Soc R = m, so e = r")
        if a > 0 and r - a > e - 1:
            # socle elements outside m^2 span at most e - 1 dimensions of m/m^2
            raise InvalidSpec(f"r - a = {r - a} must be at most e - 1 when m^2 != 0")
        if a > e * (e + 1) // 2:
            raise InvalidSpec(f"a = {a} exceeds the number of degree-2 monomials")

    @property
    def length(self) -> int:
        return 1 + self.e + self.a

    @property
    def is_gorenstein(self) -> bool:
        return self.r == 1

    def to_json(self) -> dict:
        return {"a": self.a, "e": self.e, "r": self.r}

    @classmethod
    def from_json(cls, data: dict) -> M3Spec:
        return cls(int(data["a"]), int(data["e"]), int(data["r"]))


@dataclass(frozen=True)
class BettiWindow:
    values: tuple[int, ...]
    start_index: int = 0

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        for i, v in enumerate(values):
            if v < 1:
                raise NonpositiveTerm(f"b_{self.start_index + i} = {v} < 1", self.start_index + i)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def to_json(self) -> dict:
        return {"values": list(self.values), "start_index": self.start_index}

    @classmethod
    def from_json(cls, data: dict) -> BettiWindow:
        return cls(tuple(data["values"]), int(data.get("start_index", 0)))


def _betti_list(betti) -> list[int]:
    return list(betti.values if isinstance(betti, BettiWindow) else betti)


@dataclass(frozen=True)
class SyzygyLength:
    index: int  # j + 1
    length: int
    residue: int  # length mod lR
    matches_sign: bool  # residue is congruent to (-1)^(j+1) lM


def syzygy_length(lR: int, lM: int, betti) -> SyzygyLength:
    b = _betti_list(betti)
    if not b:
        raise PreconditionViolated("Betti window is empty")
    j = len(b) - 1
    length = sum((-1) ** (j - i) * b[i] for i in range(j + 1)) * lR + (-1) ** (j + 1) * lM
    return SyzygyLength(
        j + 1, length, length % lR, (length - (-1) ** (j + 1) * lM) % lR == 0
    )


@dataclass(frozen=True)
class Violation:
    rule: str
    index: int
    detail: str = ""

    def to_json(self) -> dict:
        return {"rule": self.rule, "index": self.index, "detail": self.detail}


@dataclass(frozen=True)
class CheckReport:
    consistent: bool
    violations: tuple[Violation, ...] = ()
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "consistent": self.consistent,
            "violations": [v.to_json() for v in self.violations],
            "notes": list(self.notes),
        }


def divides_check(lR: int, lM: int, betti) -> CheckReport:
    """Rules: (i) if lR divides lM no Betti number is 1; (ii) if lM = lR then
    b_1 >= b_0; (iii) every syzygy computed from a prefix has positive length."""
    b = _betti_list(betti)
    found = []
    if lM % lR == 0:
        for i, v in enumerate(b):
            if v == 1:
                found.append(Violation("i", i, "lR divides lM but beta_i = 1"))
    if lM == lR and len(b) >= 2 and b[1] < b[0]:
        found.append(Violation("ii", 1, f"beta_1 = {b[1]} < beta_0 = {b[0]}"))
    for j in range(len(b)):
        sl = syzygy_length(lR, lM, b[: j + 1])
        if sl.length <= 0:
            found.append(Violation("iii", j, f"length of M_{j + 1} is {sl.length}"))
    return CheckReport(not found, tuple(found))


def top_rank(spec: M3Spec) -> int:
    """rank(mE/m^2 E) for the injective hull E of k: ``e + a - r`` if m^2 != 0, else 1."""
    return spec.e + spec.a - spec.r if spec.a else 1


def bas1_seed(spec: M3Spec) -> tuple[int, int]:
    """``(b_0, b_1)`` for E when the first inequality is an equality."""
    return spec.r, spec.e * spec.r - top_rank(spec)


def m3_bound_check(
    spec: M3Spec,
    betti,
    no_summand: Iterable[int] = (),
    m2_kills: bool | None = None,
    top: int | None = None,
    s: int = 0,
    bass: bool = True,
) -> CheckReport:
    """Check the Betti inequalities for a module M over a ring with m^3 = 0.

    ``no_summand`` lists the syzygy indices i for which k is not a direct
    summand of M_i. ``m2_kills`` states whether m^2 M = 0; ``top`` is
    rank(mM/m^2 M) and ``s`` the number of copies of k split off M_1.
    With ``bass`` set, M is the injective hull E of k and the defaults for
    ``m2_kills`` and ``top`` come from the spec.
    """
    b = _betti_list(betti)
    e, a, r = spec.e, spec.a, spec.r
    flags = set(no_summand)
    if bass:
        if m2_kills is None:
            m2_kills = a == 0
        if top is None:
            top = top_rank(spec)
        if b and b[0] != r:
            return CheckReport(False, (Violation("b0", 0, f"b_0 of E must be r = {r}"),))
    found, notes = [], []
    if len(b) >= 2 and top is not None:
        bound = e * b[0] - top
        if b[1] < bound:
            found.append(Violation("betti1", 1, f"{b[1]} < {bound}"))
        elif 1 in flags and b[1] != bound:
            found.append(Violation("betti1_eq", 1, f"{b[1]} != {bound}"))
        elif b[1] == bound:
            notes.append(f"betti1 equality b_1 = {bound}")
    for i in range(2, len(b)):
        bound = e * b[i - 1] - a * b[i - 2]
        if b[i] < bound:
            found.append(Violation("betti3", i, f"{b[i]} < {bound}"))
            continue
        if i == 2:
            if {1, 2} <= flags and m2_kills is not None:
                # equality at i = 2 exactly when m^2 M = 0
                if (b[2] == bound) != m2_kills:
                    found.append(Violation(
                        "betti2_iff", 2,
                        f"equality {b[2] == bound} but m^2 M = 0 is {m2_kills}",
                    ))
        elif i in flags and i - 1 in flags and b[i] != bound:
            found.append(Violation("betti_eq", i, f"{b[i]} != {bound}"))
        if b[i] == bound:
            notes.append(f"equality at i = {i}")
    if a == r and len(b) >= 2:
        # with m^2 = Soc R, e b_1 >= r b_0 + s(e - 1) when m^2 M = 0
        if m2_kills and e * b[1] < r * b[0] + s * (e - 1):
            found.append(Violation("betti2", 1, f"{e * b[1]} < {r * b[0] + s * (e - 1)}"))
        if bass:
            for i in range(1, len(b) - 1):
                if b[i + 1] < r * (b[i] - b[i - 1]):
                    found.append(Violation("bas3", i + 1, f"{b[i + 1]} < {r * (b[i] - b[i - 1])}"))
    return CheckReport(not found, tuple(found), tuple(notes))


def extremal_recurrence(e: int, a: int, b0: int, b1: int, order: int) -> BettiWindow:
    """``b_i = e b_{i-1} - a b_{i-2}``; raises NonpositiveTerm on collapse."""
    if e < 2 or a < 0 or b0 < 1 or b1 < 1:
        raise PreconditionViolated("need e >= 2, a >= 0, b0 >= 1, b1 >= 1")
    b = [b0, b1][: order + 1]
    while len(b) <= order:
        nxt = e * b[-1] - a * b[-2]
        if nxt < 1:
            raise NonpositiveTerm(f"b_{len(b)} = {nxt} < 1", len(b))
        b.append(nxt)
    return BettiWindow(tuple(b))


def scholium_rate(spec: M3Spec) -> QuadraticSurd:
    a, e, r = spec.a, spec.e, spec.r
    if spec.is_gorenstein:
        raise GorensteinCase("r = 1: the ring is Gorenstein")
    if a == 0:
        return QuadraticSurd.rational(e)
    if a < r:
        return QuadraticSurd.rational(Fraction(r - a) + Fraction(r - a, a + e))
    if e < r:
        return QuadraticSurd.rational(Fraction(r, e))
    if e == r:
        if r <= 3:
            return QuadraticSurd.rational(2)
        return QuadraticSurd(r, 1, 2, r * r - 4 * r)
    if e == r + 1:
        return QuadraticSurd.rational(Fraction(r * r - 1, r))
    return QuadraticSurd.rational(e - r)


def extremal_window(spec: M3Spec, order: int) -> BettiWindow:
    """Window of ``extremal_recurrence`` seeded with ``bas1_seed``."""
    b0, b1 = bas1_seed(spec)
    return extremal_recurrence(spec.e, spec.a, b0, b1, order)


def prop_s_rate(r: int, l_small: int) -> Fraction:
    if l_small < 2:
        raise PreconditionViolated("length must be at least 2")
    if not r > l_small - 1:
        raise PreconditionViolated(f"need r > {l_small - 1}")
    return Fraction(r, l_small - 1)


def prop_growth_rate(r: int, soc_m2: int, lR: int) -> Fraction:
    if lR < 2:
        raise PreconditionViolated("length of R must be at least 2")
    if not 0 <= soc_m2 < r:
        raise PreconditionViolated("need 0 <= rank(m^2 cap Soc R) < r")
    return (r - soc_m2) * (1 + Fraction(1, lR - 1))


def waypoints_aer3() -> tuple[M3Spec, BettiWindow, frozenset[int]]:
    """Bass numbers forced when a = e = r = 3 and k splits off none of E_1..E_3."""
    return M3Spec(3, 3, 3), BettiWindow((3, 6, 10, 12)), frozenset({1, 2, 3})
