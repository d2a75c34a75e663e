"""Command-line front end: exact evaluation, verification reports, family
dataset emission, and a static SVG plot of the norm unit ball against the
length ellipse.

Exit codes: 0 when every check holds, 1 when some check fails, 2 on usage
or data errors.  Pass/fail is always decided on exact values; decimals in
the output are annotations.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from .families import fig8_dataset, FamilySpec
from .manifold import ManifoldData, ManifoldFormatError, load, save, to_document
from .slopes import MERIDIAN, Slope, distance
from .verify import (
    VerifyReport,
    corollary_euler,
    prop4_hypothesis,
    prop6_condition,
    standard_reports,
    sweep_norm_vs_length,
    verify_cor_ubdiam,
    verify_norm_ge_length,
    verify_prop_length,
    verify_prop_norm,
    verify_thm_diam,
    verify_thm_length_norm,
)

__all__ = ["run", "main"]

_SLOPE_ARG = re.compile(r"-\d+(?:/\d+)?")

VERIFY_STATEMENTS = (
    "thm1",
    "thm2",
    "thm3",
    "prop-length",
    "prop-norm",
    "prop4",
    "prop6",
    "cor-ubdiam",
    "cor-euler",
    "all",
)


class _UsageError(Exception):
    pass


def _merge_slope_flags(argv: list[str]) -> list[str]:
    # argparse mistakes "-4/1" for an option; fold it into "--slope=-4/1"
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in ("-r", "--slope") and i + 1 < len(argv) and _SLOPE_ARG.fullmatch(argv[i + 1]):
            out.append(f"--slope={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slopenorm",
        description="Exact slope lengths, boundary-slope norms and diameter bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="print an exact value")
    p_eval.add_argument("quantity", choices=["length", "norm", "distance"])
    p_eval.add_argument("-m", "--manifold", metavar="PATH")
    p_eval.add_argument("-r", "--slope", action="append", default=[], metavar="P/Q")
    p_eval.add_argument("--format", choices=["text", "json"], default="text")

    p_verify = sub.add_parser("verify", help="run a verification report")
    p_verify.add_argument("statement", choices=VERIFY_STATEMENTS)
    p_verify.add_argument("-m", "--manifold", required=True, metavar="PATH")
    p_verify.add_argument("-r", "--slope", action="append", default=[], metavar="P/Q")
    p_verify.add_argument("--range", type=int, dest="sweep", metavar="N")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")

    p_family = sub.add_parser("family", help="emit a built-in dataset")
    p_family.add_argument("which", choices=["fig8", "pretzel", "twobridge"])
    p_family.add_argument("--n", type=int, metavar="K")
    p_family.add_argument("--crossings", type=int, metavar="C")
    p_family.add_argument("--out", metavar="PATH")

    p_plot = sub.add_parser("plot", help="write a static SVG figure")
    p_plot.add_argument("what", choices=["unit-ball"])
    p_plot.add_argument("-m", "--manifold", required=True, metavar="PATH")
    p_plot.add_argument("--out", required=True, metavar="FILE.svg")

    p_report = sub.add_parser("report", help="summarize every check on a manifold")
    p_report.add_argument("-m", "--manifold", required=True, metavar="PATH")
    p_report.add_argument("--range", type=int, dest="sweep", metavar="N")
    p_report.add_argument("--format", choices=["text", "json"], default="text")

    return parser


def _parse_slopes(texts: list[str], want: int | None = None) -> list[Slope]:
    slopes = [Slope.parse(t) for t in texts]
    if want is not None and len(slopes) != want:
        raise _UsageError(f"expected {want} slope argument(s), got {len(slopes)}")
    return slopes


def _load_manifold(path: str | None) -> ManifoldData:
    if path is None:
        raise _UsageError("a manifold file is required (-m/--manifold)")
    return load(path)


def _emit_reports(reports: list[VerifyReport], fmt: str) -> int:
    if fmt == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            line = f"{r.statement}: {r.summary}"
            if r.detail:
                line += f"  ({r.detail})"
            print(line)
    return 0 if all(r.ok for r in reports) else 1


def _cmd_eval(args) -> int:
    if args.quantity == "distance":
        r, s = _parse_slopes(args.slope, 2)
        value = distance(r, s)
        payload = {"quantity": "distance", "slopes": [str(r), str(s)], "value": str(value)}
        print(json.dumps(payload, sort_keys=True) if args.format == "json" else value)
        return 0
    m = _load_manifold(args.manifold)
    (r,) = _parse_slopes(args.slope, 1)
    if args.quantity == "norm":
        if m.norm is None:
            raise _UsageError("manifold has no norm data")
        value = m.norm.evaluate(r)
        payload = {"quantity": "norm", "slope": str(r), "value": str(value)}
        print(json.dumps(payload, sort_keys=True) if args.format == "json" else value)
        return 0
    if m.cusp is None:
        raise _UsageError("manifold has no cusp data")
    sq = m.cusp.squared_length(r)
    payload = {
        "quantity": "squared_length",
        "slope": str(r),
        "value": str(sq),
        "decimal_length": f"{math.sqrt(sq):.12g}",
    }
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{sq} (length {math.sqrt(sq):.12g})")
    return 0


def _extremal_pair(m: ManifoldData) -> tuple[Slope, Slope]:
    finite = m.boundary_slopes.finite
    if len(finite) < 2:
        raise _UsageError("need two finite boundary slopes or two -r arguments")
    return finite[-1], finite[0]


def _integral_extremal_pair(m: ManifoldData) -> tuple[Slope, Slope]:
    finite = m.boundary_slopes.finite
    if not finite:
        raise _UsageError("no finite boundary slopes")
    return (
        Slope(math.ceil(finite[-1].value()), 1),
        Slope(math.floor(finite[0].value()), 1),
    )


def _cmd_verify(args) -> int:
    m = _load_manifold(args.manifold)
    slopes = _parse_slopes(args.slope)
    stmt = args.statement
    reports: list[VerifyReport] = []

    if stmt == "all":
        reports = standard_reports(m, sweep_range=args.sweep)
    elif stmt == "thm1":
        if args.sweep:
            reports.append(sweep_norm_vs_length(m, args.sweep))
        elif slopes:
            reports.extend(verify_norm_ge_length(m, r) for r in slopes)
        else:
            checked = list(m.boundary_slopes)
            if MERIDIAN not in m.boundary_slopes:
                checked.append(MERIDIAN)
            reports.extend(verify_norm_ge_length(m, r) for r in checked)
    elif stmt == "thm2":
        r1, r2 = slopes if len(slopes) == 2 else _integral_extremal_pair(m)
        reports.append(verify_thm_length_norm(m, r1, r2))
    elif stmt == "thm3":
        targets = slopes if slopes else list(m.boundary_slopes.finite)
        if not targets:
            raise _UsageError("no finite boundary slopes to check")
        reports.extend(verify_thm_diam(m, r) for r in targets)
    elif stmt == "prop-length":
        if m.cusp is None:
            raise _UsageError("manifold has no cusp data")
        r1, r2 = slopes if len(slopes) == 2 else _extremal_pair(m)
        reports.append(verify_prop_length(m.cusp, r1, r2))
    elif stmt == "prop-norm":
        if m.norm is None:
            raise _UsageError("manifold has no norm data")
        r1, r2 = slopes if len(slopes) == 2 else _extremal_pair(m)
        reports.append(verify_prop_norm(m.norm, r1, r2, m.boundary_slopes))
    elif stmt == "prop4":
        reports.append(prop4_hypothesis(m))
    elif stmt == "prop6":
        pairs = [
            (s1, s2)
            for i, s1 in enumerate(m.surfaces)
            for s2 in m.surfaces[i + 1 :]
            if s1.slope != s2.slope
        ]
        if not pairs:
            raise _UsageError("no surface pairs with distinct slopes")
        reports.extend(prop6_condition(s1, s2) for s1, s2 in pairs)
    elif stmt == "cor-ubdiam":
        reports.append(verify_cor_ubdiam(m))
    elif stmt == "cor-euler":
        pairs = [
            (s1, s2)
            for i, s1 in enumerate(m.surfaces)
            for s2 in m.surfaces[i + 1 :]
            if s1.slope != s2.slope
            and not s1.slope.is_meridian
            and not s2.slope.is_meridian
            and s1.euler < 0
            and s2.euler < 0
        ]
        if not pairs:
            raise _UsageError("no eligible surface pairs")
        reports.extend(corollary_euler(s1.slope, s2.slope, s1, s2) for s1, s2 in pairs)

    return _emit_reports(reports, args.format)


def _cmd_family(args) -> int:
    if args.which == "fig8":
        m = fig8_dataset()
    elif args.which == "pretzel":
        if args.n is None:
            raise _UsageError("pretzel needs --n K")
        m = FamilySpec("pretzel_2_3_n", {"n": args.n}).build()
    else:
        if args.crossings is None:
            raise _UsageError("twobridge needs --crossings C")
        m = FamilySpec("two_bridge_abstract", {"crossings": args.crossings}).build()
    if args.out:
        save(m, args.out)
    else:
        print(json.dumps(to_document(m), indent=2, sort_keys=True))
    return 0


def _cmd_plot(args) -> int:
    m = _load_manifold(args.manifold)
    if m.norm is None or m.cusp is None:
        raise _UsageError("plot needs both norm and cusp data")
    _write_unit_ball_svg(m, args.out)
    return 0


def _cmd_report(args) -> int:
    m = _load_manifold(args.manifold)
    reports = standard_reports(m, sweep_range=args.sweep)
    if args.format == "json":
        return _emit_reports(reports, "json")
    print(f"manifold: {m.name}")
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    print(
        "checks: "
        + ", ".join(f"{status} {n}" for status, n in sorted(counts.items()))
    )
    width = max(len(r.statement) for r in reports) if reports else 0
    for r in reports:
        print(f"  {r.statement:<{width}}  {r.summary}")
    return 0 if all(r.ok for r in reports) else 1


def _write_unit_ball_svg(m: ManifoldData, path: str) -> None:
    """One polygon (the unit ball scaled by norm(m)) and one ellipse (the
    unit-length level set of the cusp metric), drawn to scale."""
    nm = m.norm.meridian_norm()
    points = [(float(x) * nm, -float(y) * nm) for x, y in m.norm.unit_ball_vertices()]

    a = float(m.cusp.g_mm)
    b = float(m.cusp.g_ml)
    c = float(m.cusp.g_ll)
    theta = 0.5 * math.atan2(2 * b, a - c)
    lam1 = a * math.cos(theta) ** 2 + 2 * b * math.cos(theta) * math.sin(theta) + c * math.sin(theta) ** 2
    lam2 = a * math.sin(theta) ** 2 - 2 * b * math.cos(theta) * math.sin(theta) + c * math.cos(theta) ** 2
    rx, ry = 1.0 / math.sqrt(lam1), 1.0 / math.sqrt(lam2)

    extent = max(
        [abs(v) for p in points for v in p] + [rx, ry]
    )
    half = extent * 1.15
    stroke = half / 120.0
    point_text = " ".join(f"{x:.6g},{y:.6g}" for x, y in points)
    svg = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{-half:.6g} {-half:.6g} {2 * half:.6g} {2 * half:.6g}" width="520" height="520">',
        f"  <title>{m.name}: norm unit ball scaled by norm(m) = {nm}, against the unit-length ellipse</title>",
        f'  <line x1="{-half:.6g}" y1="0" x2="{half:.6g}" y2="0" stroke="#bbbbbb" stroke-width="{stroke / 2:.6g}"/>',
        f'  <line x1="0" y1="{-half:.6g}" x2="0" y2="{half:.6g}" stroke="#bbbbbb" stroke-width="{stroke / 2:.6g}"/>',
        f'  <polygon points="{point_text}" fill="none" stroke="#1f77b4" stroke-width="{stroke:.6g}"/>',
        f'  <ellipse cx="0" cy="0" rx="{rx:.6g}" ry="{ry:.6g}" transform="rotate({-math.degrees(theta):.6g})" fill="none" stroke="#d62728" stroke-width="{stroke:.6g}"/>',
        "</svg>",
    ]
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(svg) + "\n")


def run(argv=None) -> int:
    """Parse and execute one command line; returns the exit code."""
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_slope_flags(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "eval": _cmd_eval,
        "verify": _cmd_verify,
        "family": _cmd_family,
        "plot": _cmd_plot,
        "report": _cmd_report,
    }
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ManifoldFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
