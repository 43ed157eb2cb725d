"""Command-line front end.

Exit status: 0 on success, 1 when a computation rejects its input (a JSON
error object is printed on stdout), 2 on command-line parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import artinian, fiber, golod, growth, teter
from .errors import BassforgeError, InvalidSpec
from .series import (
    Polynomial,
    PowerSeries,
    RationalFunction,
    format_rational,
    parse_rationals,
)
from .surd import parse_surd

DEFAULT_ORDER = 50


def default_order() -> int:
    raw = os.environ.get("BASSFORGE_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_ORDER
    return value if value >= 0 else DEFAULT_ORDER


@dataclass(frozen=True)
class SeriesReport:
    name: str
    series: PowerSeries
    info: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"report": "series", "name": self.name, "order": self.series.order,
                "coefficients": self.series.to_json(), "info": self.info}

    @classmethod
    def from_json(cls, data: dict) -> SeriesReport:
        return cls(data["name"], PowerSeries.from_json(data["coefficients"]), dict(data["info"]))


@dataclass(frozen=True)
class Fixture:
    name: str
    values: tuple[str, ...]
    expected: str
    passed: bool

    def to_json(self) -> dict:
        return {"name": self.name, "values": list(self.values),
                "expected": self.expected, "passed": self.passed}

    @classmethod
    def from_json(cls, data: dict) -> Fixture:
        return cls(data["name"], tuple(data["values"]), data["expected"], bool(data["passed"]))


# argument types: raising ArgumentTypeError turns bad input into exit status 2


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> list[Fraction]:
    try:
        return parse_rationals(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _surd(text: str):
    try:
        return parse_surd(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse rate {text!r}")


def _keyed_poly(text: str) -> tuple[str, list[Fraction]]:
    key, sep, rest = text.partition("=")
    if not sep or key not in ("num", "den"):
        raise argparse.ArgumentTypeError(f"expected num=... or den=..., got {text!r}")
    return key, _rational_list(rest)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--order", type=_nonneg_int, default=argparse.SUPPRESS)
    p.add_argument("--format", choices=("json", "csv", "table"), default=argparse.SUPPRESS)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="bassforge", parents=[common],
                                     description="Bass and Betti series growth toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("golod", parents=[common], help="Bass series of a Golod ring")
    p.add_argument("--depth", type=_nonneg_int, required=True)
    p.add_argument("--edim", type=_nonneg_int, required=True)
    p.add_argument("--h", type=_int_list, required=True)

    p = sub.add_parser("codim2", parents=[common], help="codimension-2 Bass series")
    p.add_argument("--depth", type=_nonneg_int, required=True)
    p.add_argument("--type", type=_nonneg_int, required=True, dest="rtype")

    p = sub.add_parser("fiber", parents=[common], help="fiber product of two components")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("teter", parents=[common], help="Bass series of a Teter ring")
    p.add_argument("--poincare-q", nargs="+", type=_keyed_poly, required=True)

    p = sub.add_parser("rho", parents=[common], help="rho_e(i) table and R_e")
    p.add_argument("--edim", type=_nonneg_int, required=True)

    p = sub.add_parser("artinian", parents=[common], help="m^3 = 0 sequence tools")
    art = p.add_subparsers(dest="action", required=True)
    q = art.add_parser("scholium", parents=[common])
    for flag in ("--a", "--e", "--r"):
        q.add_argument(flag, type=_nonneg_int, required=True)
    q = art.add_parser("extremal", parents=[common])
    for flag in ("--e", "--a", "--b0", "--b1"):
        q.add_argument(flag, type=_nonneg_int, required=True)
    q = art.add_parser("divides", parents=[common])
    q.add_argument("--lr", type=_nonneg_int, required=True)
    q.add_argument("--lm", type=_nonneg_int, required=True)
    q.add_argument("--betti", type=_int_list, required=True)

    p = sub.add_parser("analyze", parents=[common], help="growth report for a sequence")
    p.add_argument("--seq", type=_rational_list, required=True)
    p.add_argument("--from", type=_nonneg_int, default=0, dest="start")
    p.add_argument("--rate", type=_surd)

    p = sub.add_parser("reproduce", parents=[common], help="regenerate worked examples")
    p.add_argument("target", choices=("example1", "example2", "mugolod", "exceptions",
                                      "teter", "rtable", "all"))
    p.add_argument("--edim", type=_nonneg_int)
    return parser


# commands


def cmd_golod(args, order):
    spec = golod.GolodSpec(args.depth, args.edim, tuple(args.h))
    series = golod.golod_bass_series(spec, order)
    rate = golod.golod_rate(spec, order)
    info = {"spec": spec.to_json(), "classification": rate.classification,
            "rate": None if rate.rate is None else format_rational(rate.rate),
            "certified": rate.certified}
    return SeriesReport("golod", series, info)


def cmd_codim2(args, order):
    if args.rtype < 1:
        raise InvalidSpec("type r must be positive")
    return SeriesReport("codim2", golod.codim2_bass(args.depth, args.rtype, order),
                        {"depth": args.depth, "type": args.rtype})


def _load_component(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidSpec(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"{path} is not valid JSON: {exc.msg}")
    return fiber.FiberComponent.from_json(data)


def cmd_fiber(args, order):
    S, T = _load_component(args.left), _load_component(args.right)
    series = fiber.fiber_bass(S, T, order)
    info = {"depth": fiber.fiber_depth(S.component_depth, T.component_depth),
            "classification": fiber.classify_exception(S, T).tag,
            "poincare": fiber.fiber_poincare(S, T, order).to_json()}
    return SeriesReport("fiber", series, info)


def cmd_teter(args, order):
    parts = dict(args.poincare_q)
    P = RationalFunction(Polynomial(parts.get("num", [1])), Polynomial(parts.get("den", [1])))
    spec = teter.TeterSpec(P)
    check = teter.teter_growth_check(spec, order)
    return SeriesReport("teter", teter.teter_bass(spec, order),
                        {"edim": spec.edim, "growth": check.to_json()})


def cmd_rho(args, order):
    return teter.r_min(args.edim)


def cmd_artinian(args, order):
    if args.action == "scholium":
        spec = artinian.M3Spec(args.a, args.e, args.r)
        A = artinian.scholium_rate(spec)
        return {"spec": spec.to_json(), "rate": A.to_json(), "rendered": A.render()}
    if args.action == "extremal":
        window = artinian.extremal_recurrence(args.e, args.a, args.b0, args.b1, order)
        return SeriesReport("extremal", PowerSeries.of(window.values),
                            {"e": args.e, "a": args.a})
    return artinian.divides_check(args.lr, args.lm, args.betti)


def cmd_analyze(args, order):
    report = growth.analyze(args.seq, args.start)
    out = report.to_json()
    if args.rate is not None:
        cert = growth.certify_termwise(args.seq, args.start, args.rate)
        out["termwise"] = cert.to_json()
        out["termwise_from"] = growth.first_valid_index(args.seq, args.start, args.rate)
        out["exp_base_candidate"] = growth.analyze(args.seq, args.start, args.rate).to_json()[
            "exp_base_certificate"]
    return out


# reproduction fixtures


def _fx(name, values, expected, passed):
    return Fixture(name, tuple(format_rational(v) for v in values), expected, bool(passed))


def fixtures_example1(order):
    seq = golod.golod_bass_series(golod.GolodSpec(0, 2, (1, 1)), order)
    head = [1, 2, 2, 4, 6, 10]
    return [_fx("example1", seq.coeffs, "1, 2, 2, 4, 6, 10, ...",
                list(seq.coeffs[: len(head)]) == head[: order + 1])]


def fixtures_example2(order, edims):
    out = []
    H = fiber.zero_dim_hypersurface()
    comp = H
    series = {}
    for e in range(2, max(edims) + 1):
        series[e] = fiber.fiber_bass(H, comp, order)
        comp = fiber.fiber_component(H, comp)
    for e in edims:
        seq = series[e]
        want = [e] + [e ** (i - 1) * (e * e - 1) for i in range(1, order + 1)]
        out.append(_fx(f"example2 e={e}", seq.coeffs,
                       f"mu^0 = {e}, mu^i = {e}^(i-1)*{e * e - 1}", list(seq.coeffs) == want))
    return out


def fixtures_mugolod(order):
    out = []
    for r in range(1, 6):
        seq = golod.codim2_bass(0, r, order)
        table = [r, r + 1, r * (r + 1), 2 * r * (r + 1)]
        ok = list(seq.coeffs[:4]) == table[: order + 1]
        ok = ok and all(seq[i] == seq[i - 1] + r * seq[i - 2] for i in range(4, order + 1))
        ok = ok and all(golod.codim2_closed_form(r, i) == seq[i] for i in range(3, order + 1))
        out.append(_fx(f"mugolod r={r}", seq.coeffs,
                       "r, r+1, r(r+1), 2r(r+1), mu_i = mu_(i-1) + r mu_(i-2)", ok))
    seq = golod.codim2_bass(0, 1, order)
    out.append(_fx("mugolod r=1 fibonacci", seq.coeffs, "mu_i = 2F_i",
                   all(seq[i] == 2 * golod.fibonacci(i) for i in range(1, order + 1))))
    seq = golod.codim2_bass(0, 2, order)
    out.append(_fx("mugolod r=2", seq.coeffs, "mu_i = 3*2^(i-1)",
                   all(seq[i] == 3 * 2 ** (i - 1) for i in range(1, order + 1))))
    return out


def fixtures_exceptions(order):
    n = max(order, 3)
    R1, R2 = fiber.FiberComponent.regular(1), fiber.FiberComponent.regular(2)
    H = fiber.zero_dim_hypersurface()
    out = []
    s = fiber.fiber_bass(R1, R1, n)
    out.append(_fx("exceptions regular(1) x regular(1)", s.coeffs, "I = t, hypersurface",
                   list(s.coeffs) == [0, 1] + [0] * (n - 1)
                   and fiber.classify_exception(R1, R1).tag == "Hypersurface"))
    for name, S, T in (("regular(1) x regular(2)", R1, R2), ("k[x]/(x^2) x regular(1)", H, R1)):
        s = fiber.fiber_bass(S, T, n)
        d = fiber.fiber_depth(S.component_depth, T.component_depth)
        out.append(_fx(f"exceptions {name}", s.coeffs, "mu_(d+1) = 2 = mu_(d+2)",
                       s[d + 1] == 2 == s[d + 2]
                       and fiber.classify_exception(S, T).tag == "GolodException"))
    return out


def fixtures_teter(order):
    spec = teter.TeterSpec(RationalFunction(Polynomial((1,)), Polynomial((1, -2, 1))))
    seq = teter.teter_bass(spec, order)
    want = [2] + [3 * 2 ** (i - 1) for i in range(1, order + 1)]
    return [_fx("teter e=2", seq.coeffs, "mu^0 = 2, mu^i = 3*2^(i-1)", list(seq.coeffs) == want)]


def fixtures_rtable():
    out = []
    for e in (1, 2):
        t = teter.r_min(e)
        out.append(_fx(f"R_{e}", [t.minimum], "1", t.minimum == 1))
    for e in range(3, 10):
        t = teter.r_min(e)
        want = teter.rho(e, e // 2)
        out.append(_fx(f"R_{e}", [t.minimum], f"rho_{e}({e // 2})", t.minimum == want))
    t = teter.r_min(10)
    out.append(_fx("R_10", [t.minimum], "rho_10(4) = 191/105",
                   t.argmin == 4 and t.minimum == Fraction(191, 105)))
    return out


def cmd_reproduce(args, order):
    target = args.target
    fixtures = []
    if target in ("example1", "all"):
        fixtures += fixtures_example1(order)
    if target in ("example2", "all"):
        edims = [args.edim] if args.edim is not None else [2, 3, 4, 5]
        if any(e < 2 for e in edims):
            raise InvalidSpec("example2 needs --edim >= 2")
        fixtures += fixtures_example2(order, edims)
    if target in ("mugolod", "all"):
        fixtures += fixtures_mugolod(order)
    if target in ("exceptions", "all"):
        fixtures += fixtures_exceptions(order)
    if target in ("teter", "all"):
        fixtures += fixtures_teter(order)
    if target in ("rtable", "all"):
        fixtures += fixtures_rtable()
    return fixtures


COMMANDS = {
    "golod": cmd_golod, "codim2": cmd_codim2, "fiber": cmd_fiber, "teter": cmd_teter,
    "rho": cmd_rho, "artinian": cmd_artinian, "analyze": cmd_analyze,
    "reproduce": cmd_reproduce,
}


# rendering


def _to_jsonable(result):
    if isinstance(result, list):
        return [_to_jsonable(r) for r in result]
    if hasattr(result, "to_json"):
        return result.to_json()
    return result


def render(result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_to_jsonable(result), indent=2)
    if isinstance(result, SeriesReport):
        if fmt == "csv":
            return ",".join(format_rational(c) for c in result.series)
        lines = [f"{result.name} to order {result.series.order}"]
        lines += [f"  {i:>4}  {format_rational(c)}" for i, c in enumerate(result.series)]
        lines += [f"  {k}: {json.dumps(v)}" for k, v in result.info.items()]
        return "\n".join(lines)
    if isinstance(result, teter.RhoTable):
        if fmt == "csv":
            return ",".join(str(v) for v in result.values)
        lines = [f"  i  rho_{result.e}(i)"]
        lines += [f"{i:>3}  {v}" for i, v in enumerate(result.values)]
        lines.append(f"R_{result.e} = {result.minimum} at i={result.argmin}")
        return "\n".join(lines)
    if isinstance(result, list) and all(isinstance(f, Fixture) for f in result):
        if fmt == "csv":
            return "\n".join(f"{f.name},{'PASS' if f.passed else 'FAIL'}" for f in result)
        width = max((len(f.name) for f in result), default=0)
        lines = []
        for f in result:
            shown = ", ".join(f.values[:8]) + (", ..." if len(f.values) > 8 else "")
            lines.append(f"{f.name:<{width}}  {shown}  [{f.expected}]  "
                         f"{'PASS' if f.passed else 'FAIL'}")
        return "\n".join(lines)
    data = _to_jsonable(result)
    if fmt == "csv":
        return ",".join(f"{k}={json.dumps(v)}" for k, v in data.items())
    return "\n".join(f"{k}: {json.dumps(v, ensure_ascii=False)}" for k, v in data.items())


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    order = getattr(args, "order", None)
    if order is None:
        order = default_order()
    fmt = getattr(args, "format", "table")
    try:
        result = COMMANDS[args.command](args, order)
    except BassforgeError as exc:
        print(json.dumps(exc.to_json()))
        return 1
    print(render(result, fmt))
    if isinstance(result, list) and any(isinstance(f, Fixture) and not f.passed for f in result):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
