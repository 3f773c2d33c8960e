"""Command-line interface: exact anomaly reports from theory files.

Commands: compute, table, qcd, seiberg, solve-r, compactify.  Reports are
"key = value" lines in a fixed key order (or the same keys as JSON with
--json); every rational is rendered as "p/q" so nothing ever passes
through floating point.  Exit codes: 0 success, 1 domain/configuration
error, 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import univariate
from .anomaly import (
    AnomalyReport,
    anomaly_polynomial,
    classify,
    context_for_theory,
    gauge_obstruction,
    mixed_monomials,
    multiplet_table,
    physical_ac,
    pure_gauge_monomials,
    solve_r,
    t_background_obstruction,
)
from .chern import pushforward_curve
from .duality import SQCDSpec, electric_anomalies, electric_theory, quark_charge, seiberg_match
from .ring import format_rational, parse_rational
from .theory import ConfigurationError, ConsistencyError, Theory, twist_content
from .theoryfile import TheoryParseError, parse_theory_file

Record = tuple[str, object]


def _rational_argument(token: str) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _render_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    return str(value)


def render_records(records: list[Record], as_json: bool) -> str:
    if as_json:
        payload = {
            key: (value if isinstance(value, bool) else _render_value(value))
            for key, value in records
        }
        return json.dumps(payload, indent=2)
    return "\n".join(f"{key} = {_render_value(value)}" for key, value in records)


def _report_records(theory: Theory, report: AnomalyReport) -> list[Record]:
    ctx = context_for_theory(theory)
    records: list[Record] = []
    if report.n == 2:
        a, c = physical_ac(report.a_hol, report.c_hol)
        records += [
            ("a_hol", report.a_hol),
            ("c_hol", report.c_hol),
            ("a", a),
            ("c", c),
        ]
    elif report.n == 1:
        records.append(("virasoro_c", report.virasoro_c))
    for name in pure_gauge_monomials(ctx, report.n):
        records.append((f"gauge.{name}", report.pure_gauge.get(name, Fraction(0))))
    for name in mixed_monomials(ctx, report.n):
        records.append((f"mixed.{name}", report.mixed.get(name, Fraction(0))))
    _, gauge_free = gauge_obstruction(report)
    _, t_free = t_background_obstruction(report)
    records += [("gauge_free", gauge_free), ("t_free", t_free)]
    return records


def _load_theory(path: str) -> Theory:
    return parse_theory_file(Path(path).read_text())


def _cmd_compute(args) -> list[Record]:
    theory = _load_theory(args.file)
    report = classify(
        anomaly_polynomial(twist_content(theory), context_for_theory(theory)),
        theory.dimension,
    )
    return _report_records(theory, report)


def _cmd_table(args) -> list[Record]:
    records: list[Record] = []
    for label, a, c, a_hol, c_hol in multiplet_table():
        records += [
            (f"{label}.a", a),
            (f"{label}.c", c),
            (f"{label}.a_hol", a_hol),
            (f"{label}.c_hol", c_hol),
        ]
    return records


def _cmd_qcd(args) -> list[Record]:
    spec = SQCDSpec(args.colors, args.flavors)
    theory = electric_theory(spec)
    a_hol, c_hol = electric_anomalies(spec)
    report = classify(
        anomaly_polynomial(twist_content(theory), context_for_theory(theory)), 2
    )
    a, c = physical_ac(a_hol, c_hol)
    _, gauge_free = gauge_obstruction(report)
    _, t_free = t_background_obstruction(report)
    return [
        ("colors", args.colors),
        ("flavors", args.flavors),
        ("r", quark_charge(spec)),
        ("a_hol", a_hol),
        ("c_hol", c_hol),
        ("a", a),
        ("c", c),
        ("gauge_free", gauge_free),
        ("t_free", t_free),
    ]


def _cmd_seiberg(args) -> list[Record]:
    spec = SQCDSpec(args.colors, args.flavors)
    result = seiberg_match(spec)
    records: list[Record] = [
        ("colors", args.colors),
        ("flavors", args.flavors),
    ]
    if result.r_meson is None:
        records += [
            ("matched", False),
            ("residual", univariate.format_poly(result.residual, "r_M")),
        ]
        return records
    a, c = physical_ac(result.a_hol, result.c_hol)
    records += [
        ("r_M", result.r_meson),
        ("matched", result.matched),
        ("a_hol", result.a_hol),
        ("c_hol", result.c_hol),
        ("a", a),
        ("c", c),
    ]
    return records


def _cmd_solve_r(args) -> list[Record]:
    theory = _load_theory(args.file)
    result = solve_r(theory, args.target)
    records: list[Record] = [("target", result.target)]
    for name, coeffs in result.polynomials.items():
        records.append((f"poly.{name}", univariate.format_poly(coeffs)))
    if result.unconstrained:
        records.append(("unconstrained", True))
    else:
        records.append(("unconstrained", False))
        records.append(
            ("roots", ", ".join(format_rational(r) for r in result.roots) or "none")
        )
    return records


def _cmd_compactify(args) -> list[Record]:
    theory = _load_theory(args.file)
    if theory.dimension != 2:
        raise ConfigurationError("compactify expects a dimension-2 theory file")
    content = twist_content(theory)
    if any(not atom.rep.is_gauge_trivial for _, atom in content.pieces):
        raise ConfigurationError("compactify expects gravitational-only content")
    poly = anomaly_polynomial(content, context_for_theory(theory))
    pushed = pushforward_curve(poly, 1, args.fiber_chi)
    report = classify(pushed, 1)
    records: list[Record] = [("fiber_chi", args.fiber_chi)]
    ctx = pushed.ctx
    records.append(("virasoro_c", report.virasoro_c))
    for name in pure_gauge_monomials(ctx, 1):
        records.append((f"gauge.{name}", report.pure_gauge.get(name, Fraction(0))))
    for name in mixed_monomials(ctx, 1):
        records.append((f"mixed.{name}", report.mixed.get(name, Fraction(0))))
    _, gauge_free = gauge_obstruction(report)
    _, t_free = t_background_obstruction(report)
    records += [("gauge_free", gauge_free), ("t_free", t_free)]
    return records


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holanom",
        description="Exact anomaly polynomials of holomorphically twisted 4d theories.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="anomaly report for a theory file")
    compute.add_argument("file")
    compute.add_argument("--json", action="store_true")
    compute.set_defaults(handler=_cmd_compute)

    table = sub.add_parser("table", help="a, c, a_hol, c_hol of the basic multiplets")
    table.add_argument("--json", action="store_true")
    table.set_defaults(handler=_cmd_table)

    qcd = sub.add_parser("qcd", help="electric SQCD at the anomaly-free R-charge")
    qcd.add_argument("--colors", type=int, required=True)
    qcd.add_argument("--flavors", type=int, required=True)
    qcd.add_argument("--json", action="store_true")
    qcd.set_defaults(handler=_cmd_qcd)

    seiberg = sub.add_parser("seiberg", help="match electric and magnetic anomalies")
    seiberg.add_argument("--colors", type=int, required=True)
    seiberg.add_argument("--flavors", type=int, required=True)
    seiberg.add_argument("--json", action="store_true")
    seiberg.set_defaults(handler=_cmd_seiberg)

    solve = sub.add_parser("solve-r", help="solve for anomaly-free R-charges")
    solve.add_argument("file")
    solve.add_argument("--target", default="all-mixed")
    solve.add_argument("--json", action="store_true")
    solve.set_defaults(handler=_cmd_solve_r)

    compactify = sub.add_parser(
        "compactify", help="push the anomaly forward along a curve fiber"
    )
    compactify.add_argument("file")
    compactify.add_argument("--fiber-chi", type=_rational_argument, required=True)
    compactify.add_argument("--json", action="store_true")
    compactify.set_defaults(handler=_cmd_compactify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        records = args.handler(args)
    except TheoryParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConfigurationError, ConsistencyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(render_records(records, getattr(args, "json", False)))
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
