"""Command-line front end.

Subcommands: critical, davis, table, verify, scan.  Human tables print 6
significant digits; csv/json emit 17 (lossless round-trip).  The table and
scan commands can also render a self-contained SVG plot.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .ball import Ball, Exponent, area, classify
from .critical import (
    critical_determinant,
    davis_constant,
    kappa_minkowski,
    packing_lattice,
)
from .lattice import (
    Lattice2,
    determinant,
    density,
    is_admissible,
    is_packing,
    moduli_scan,
)
from . import moduli

FORMATS = ("table", "csv", "json", "svg")


def _f6(x: float) -> str:
    return format(x, ".6g")


def _f17(x: float) -> str:
    return format(x, ".17g")


def _p_value(e: Exponent):
    # JSON has no portable infinity; emit the string "inf" instead.
    return e.p if e.is_finite else "inf"


def _p_csv(e: Exponent) -> str:
    return _f17(e.p) if e.is_finite else "inf"


def _basis_json(lat: Lattice2) -> list[list[float]]:
    return [[lat.a[0], lat.a[1]], [lat.b[0], lat.b[1]]]


def _basis_text(lat: Lattice2, fmt=_f6) -> str:
    return (
        f"({fmt(lat.a[0])}, {fmt(lat.a[1])}), "
        f"({fmt(lat.b[0])}, {fmt(lat.b[1])})"
    )


def _kv_table(rows: list[tuple[str, str]]) -> str:
    width = max(len(key) for key, _ in rows)
    return "".join(f"{key.ljust(width)}  {val}\n" for key, val in rows)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# SVG rendering (fixed 800x600 viewbox, no external assets)

_SVG_W, _SVG_H = 800, 600
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 80, 30, 50, 60
_COLORS = ("#1f77b4", "#2ca02c", "#d62728")


def _svg_plot(title, xlabel, ylabel, series, markers=(), vlines=()):
    """series: [(label, [(x, y), ...])]; markers: [(x, y, label)];
    vlines: [(x, label)]."""
    xs = [x for _, pts in series for x, _ in pts]
    ys = [y for _, pts in series for _, y in pts]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    pad = 0.05 * (y_hi - y_lo) or 0.05 * abs(y_hi) or 0.05
    y_lo, y_hi = y_lo - pad, y_hi + pad

    def px(x):
        return _MARGIN_L + (x - x_lo) / (x_hi - x_lo) * (_SVG_W - _MARGIN_L - _MARGIN_R)

    def py(y):
        return _SVG_H - _MARGIN_B - (y - y_lo) / (y_hi - y_lo) * (_SVG_H - _MARGIN_T - _MARGIN_B)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<text x="{_SVG_W / 2:.1f}" y="25" text-anchor="middle" font-size="16">{title}</text>',
    ]
    axis_y = _SVG_H - _MARGIN_B
    parts.append(
        f'<line x1="{_MARGIN_L}" y1="{axis_y}" x2="{_SVG_W - _MARGIN_R}" y2="{axis_y}" stroke="black"/>'
    )
    parts.append(
        f'<line x1="{_MARGIN_L}" y1="{_MARGIN_T}" x2="{_MARGIN_L}" y2="{axis_y}" stroke="black"/>'
    )
    for k in range(5):
        x = x_lo + (x_hi - x_lo) * k / 4
        y = y_lo + (y_hi - y_lo) * k / 4
        parts.append(
            f'<text x="{px(x):.1f}" y="{axis_y + 20}" text-anchor="middle" font-size="11">{_f6(x)}</text>'
        )
        parts.append(
            f'<text x="{_MARGIN_L - 8}" y="{py(y) + 4:.1f}" text-anchor="end" font-size="11">{_f6(y)}</text>'
        )
        parts.append(
            f'<line x1="{_MARGIN_L - 4}" y1="{py(y):.1f}" x2="{_MARGIN_L}" y2="{py(y):.1f}" stroke="black"/>'
        )
    parts.append(
        f'<text x="{_SVG_W / 2:.1f}" y="{_SVG_H - 15}" text-anchor="middle" font-size="13">{xlabel}</text>'
    )
    parts.append(
        f'<text x="20" y="{_SVG_H / 2:.1f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 20 {_SVG_H / 2:.1f})">{ylabel}</text>'
    )
    for x, label in vlines:
        parts.append(
            f'<line x1="{px(x):.1f}" y1="{_MARGIN_T}" x2="{px(x):.1f}" y2="{axis_y}" '
            f'stroke="#888888" stroke-dasharray="5,4"/>'
        )
        parts.append(
            f'<text x="{px(x) + 4:.1f}" y="{_MARGIN_T + 14}" font-size="12" fill="#555555">{label}</text>'
        )
    for idx, (label, pts) in enumerate(series):
        color = _COLORS[idx % len(_COLORS)]
        coords = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in pts)
        parts.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        parts.append(
            f'<text x="{_SVG_W - _MARGIN_R - 10}" y="{_MARGIN_T + 18 * idx + 14}" '
            f'text-anchor="end" font-size="12" fill="{color}">{label}</text>'
        )
    for x, y, label in markers:
        parts.append(f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="4" fill="#d62728"/>')
        if label:
            parts.append(
                f'<text x="{px(x) + 6:.2f}" y="{py(y) - 6:.2f}" font-size="11">{label}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_critical(args) -> str:
    e = Exponent.parse(args.p)
    res = critical_determinant(e)
    pack = packing_lattice(e)
    dens = density(pack, e)
    k_mink = kappa_minkowski(e.p) if e.is_finite else None
    branch = res.branch.value
    if args.format == "json":
        return _json_text(
            {
                "p": _p_value(e),
                "ball_class": classify(e, davis_constant()).value,
                "delta": res.delta,
                "branch": branch,
                "both_branches": res.both_branches,
                "kappa_optimal": res.kappa,
                "kappa_minkowski": k_mink,
                "critical_lattice": _basis_json(res.lattice),
                "packing_lattice": _basis_json(pack),
                "packing_determinant": determinant(pack),
                "density": dens,
            }
        )
    if args.format == "csv":
        header = [
            "p", "class", "delta", "branch", "both_branches",
            "kappa_optimal", "kappa_minkowski",
            "crit_ax", "crit_ay", "crit_bx", "crit_by",
            "pack_ax", "pack_ay", "pack_bx", "pack_by",
            "packing_determinant", "density",
        ]
        row = [
            _p_csv(e), classify(e, davis_constant()).value, _f17(res.delta), branch,
            str(res.both_branches).lower(),
            _f17(res.kappa), _f17(k_mink) if k_mink is not None else "",
            _f17(res.lattice.a[0]), _f17(res.lattice.a[1]),
            _f17(res.lattice.b[0]), _f17(res.lattice.b[1]),
            _f17(pack.a[0]), _f17(pack.a[1]), _f17(pack.b[0]), _f17(pack.b[1]),
            _f17(determinant(pack)), _f17(dens),
        ]
        return _csv_text(header, [row])
    branch_note = branch + (" (both branches agree)" if res.both_branches else "")
    rows = [
        ("p", str(e)),
        ("class", classify(e, davis_constant()).value),
        ("delta", _f6(res.delta)),
        ("branch", branch_note),
        ("kappa_optimal", _f6(res.kappa)),
        ("kappa_minkowski", _f6(k_mink) if k_mink is not None else "-"),
        ("critical lattice", _basis_text(res.lattice)),
        ("packing lattice", _basis_text(pack)),
        ("packing determinant", _f6(determinant(pack))),
        ("density", _f6(dens)),
    ]
    return _kv_table(rows)


def _cmd_davis(args) -> str:
    p0 = davis_constant()
    d0 = moduli.delta0(p0)
    d1 = moduli.delta1(p0)
    if args.format == "json":
        return _json_text(
            {"p0": p0, "delta0": d0, "delta1": d1, "difference": abs(d0 - d1)}
        )
    if args.format == "csv":
        return _csv_text(
            ["p0", "delta0", "delta1", "difference"],
            [[_f17(p0), _f17(d0), _f17(d1), _f17(abs(d0 - d1))]],
        )
    return _kv_table(
        [
            ("p0", f"{p0:.10f}"),
            ("delta0(p0)", f"{d0:.10f}"),
            ("delta1(p0)", f"{d1:.10f}"),
            ("difference", format(abs(d0 - d1), ".3g")),
        ]
    )


def _table_rows(p_min: float, p_max: float, steps: int):
    p0 = davis_constant()
    rows = []
    for i in range(steps):
        p = p_min + (p_max - p_min) * i / (steps - 1)
        e = Exponent(p)
        res = critical_determinant(e)
        pack_det = 4.0 * res.delta
        rows.append(
            {
                "p": p,
                "class": classify(e, p0).value,
                "delta": res.delta,
                "branch": res.branch.value,
                "kappa_optimal": res.kappa,
                "kappa_minkowski": kappa_minkowski(p),
                "packing_determinant": pack_det,
                "density": area(e) / pack_det,
            }
        )
    return rows


_TABLE_COLUMNS = [
    "p", "class", "delta", "branch", "kappa_optimal", "kappa_minkowski",
    "packing_determinant", "density",
]


def _cmd_table(args) -> str:
    if not (1.0 <= args.p_min < args.p_max):
        raise ValueError(f"need 1 <= p-min < p-max, got {args.p_min!r}, {args.p_max!r}")
    if args.steps < 2:
        raise ValueError(f"steps must be >= 2, got {args.steps!r}")
    rows = _table_rows(args.p_min, args.p_max, args.steps)
    if args.format == "json":
        return _json_text({"p0": davis_constant(), "rows": rows})
    if args.format == "csv":
        out = []
        for r in rows:
            out.append(
                [
                    _f17(r["p"]), r["class"], _f17(r["delta"]), r["branch"],
                    _f17(r["kappa_optimal"]), _f17(r["kappa_minkowski"]),
                    _f17(r["packing_determinant"]), _f17(r["density"]),
                ]
            )
        return _csv_text(_TABLE_COLUMNS, out)
    if args.format == "svg":
        delta_curve = [(r["p"], r["delta"]) for r in rows]
        density_curve = [(r["p"], r["density"]) for r in rows]
        vlines = []
        p0 = davis_constant()
        if args.p_min < p0 < args.p_max:
            vlines.append((p0, f"p0 = {p0:.4f}"))
        return _svg_plot(
            "critical determinant and optimal packing density",
            "p", "value",
            [("delta(D_p)", delta_curve), ("density", density_curve)],
            vlines=vlines,
        )
    widths = {c: max(len(c), 14) for c in _TABLE_COLUMNS}
    header = "  ".join(c.ljust(widths[c]) for c in _TABLE_COLUMNS)
    lines = [header, "-" * len(header)]
    for r in rows:
        cells = [
            _f6(r["p"]), r["class"], _f6(r["delta"]), r["branch"],
            _f6(r["kappa_optimal"]), _f6(r["kappa_minkowski"]),
            _f6(r["packing_determinant"]), _f6(r["density"]),
        ]
        lines.append("  ".join(c.ljust(widths[col]) for col, c in zip(_TABLE_COLUMNS, cells)))
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> str:
    parts = [t for t in args.basis.replace(";", ",").split(",") if t.strip()]
    if len(parts) != 4:
        raise ValueError(f"--basis needs 4 comma-separated reals, got {args.basis!r}")
    ax, ay, bx, by = (float(t) for t in parts)
    lat = Lattice2((ax, ay), (bx, by))
    if args.doubled:
        lat = lat.scaled(2.0)
    e = Exponent.parse(args.p)
    unit = is_admissible(lat, Ball(e, 1.0))
    doubled = is_admissible(lat, Ball(e, 2.0))
    packing = is_packing(lat, e)
    dens = density(lat, e) if packing else None
    if args.format == "json":
        return _json_text(
            {
                "p": _p_value(e),
                "basis": _basis_json(lat),
                "determinant": determinant(lat),
                "admissible": unit.admissible,
                "min_gauge": unit.min_gauge,
                "boundary_pairs": unit.boundary_pairs,
                "enumerated": unit.enumerated,
                "admissible_doubled": doubled.admissible,
                "is_packing": packing,
                "density": dens,
            }
        )
    if args.format == "csv":
        header = [
            "p", "determinant", "admissible", "min_gauge", "boundary_pairs",
            "enumerated", "admissible_doubled", "is_packing", "density",
        ]
        row = [
            _p_csv(e), _f17(determinant(lat)), str(unit.admissible).lower(),
            _f17(unit.min_gauge), str(unit.boundary_pairs), str(unit.enumerated),
            str(doubled.admissible).lower(), str(packing).lower(),
            _f17(dens) if dens is not None else "",
        ]
        return _csv_text(header, [row])
    return _kv_table(
        [
            ("p", str(e)),
            ("basis", _basis_text(lat)),
            ("determinant", _f6(determinant(lat))),
            ("min_gauge", _f6(unit.min_gauge)),
            ("boundary_pairs", str(unit.boundary_pairs)),
            ("enumerated", str(unit.enumerated)),
            ("admissible for D_p", "yes" if unit.admissible else "no"),
            ("admissible for 2D_p", "yes" if doubled.admissible else "no"),
            ("packing", "yes" if packing else "no"),
            ("density", _f6(dens) if dens is not None else "- (not a packing)"),
        ]
    )


def _cmd_scan(args) -> str:
    e = Exponent.parse(args.p)
    if not e.is_finite:
        raise ValueError("scan needs a finite p > 1")
    report = moduli_scan(e.p, args.samples)
    if args.format == "json":
        return _json_text(
            {
                "p": report.p,
                "sigma_max": report.points[-1].sigma,
                "argmin_sigma": report.argmin_sigma,
                "min_delta": report.min_delta,
                "delta_at_unit": report.delta_at_unit,
                "delta_at_sigma_p": report.delta_at_sigma_p,
                "rows": [
                    {"sigma": pt.sigma, "tau": pt.tau, "delta": pt.delta}
                    for pt in report.points
                ],
            }
        )
    if args.format == "csv":
        rows = [[_f17(pt.sigma), _f17(pt.tau), _f17(pt.delta)] for pt in report.points]
        return _csv_text(["sigma", "tau", "delta"], rows)
    if args.format == "svg":
        curve = [(pt.sigma, pt.delta) for pt in report.points]
        first, last = report.points[0], report.points[-1]
        markers = [
            (first.sigma, first.delta, f"delta(p,1) = {_f6(first.delta)}"),
            (last.sigma, last.delta, f"delta(p,sigma_p) = {_f6(last.delta)}"),
            (report.argmin_sigma, report.min_delta, f"min at sigma = {_f6(report.argmin_sigma)}"),
        ]
        return _svg_plot(
            f"determinant surface slice at p = {_f6(report.p)}",
            "sigma", "delta(p, sigma)",
            [("delta(p, sigma)", curve)],
            markers=markers,
        )
    lines = [f"{'sigma'.ljust(22)}  {'tau'.ljust(22)}  delta"]
    for pt in report.points:
        lines.append(f"{_f6(pt.sigma).ljust(22)}  {_f6(pt.tau).ljust(22)}  {_f6(pt.delta)}")
    lines.append(
        f"argmin: sigma = {_f6(report.argmin_sigma)}, delta = {_f6(report.min_delta)}"
    )
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critlat",
        description="Critical determinants and optimal lattice packings of planar p-balls.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("table", "csv", "json")):
        p.add_argument("--format", choices=choices, default="table", help="output format")

    p_crit = sub.add_parser("critical", help="critical determinant and lattices at one p")
    p_crit.add_argument("--p", required=True, help="ball exponent (>= 1, or 'inf')")
    add_format(p_crit)
    p_crit.set_defaults(handler=_cmd_critical)

    p_davis = sub.add_parser("davis", help="the branch-crossing constant p0")
    add_format(p_davis)
    p_davis.set_defaults(handler=_cmd_davis)

    p_table = sub.add_parser("table", help="grid of constants over a p range")
    p_table.add_argument("--p-min", type=float, required=True)
    p_table.add_argument("--p-max", type=float, required=True)
    p_table.add_argument("--steps", type=int, default=21)
    add_format(p_table, FORMATS)
    p_table.set_defaults(handler=_cmd_table)

    p_verify = sub.add_parser("verify", help="check a user-supplied lattice")
    p_verify.add_argument("--p", required=True, help="ball exponent (>= 1, or 'inf')")
    p_verify.add_argument(
        "--basis", required=True, metavar="a1x,a1y,a2x,a2y",
        help="basis vectors as 4 comma-separated reals",
    )
    p_verify.add_argument(
        "--doubled", action="store_true",
        help="scale the supplied basis by 2 before checking",
    )
    add_format(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_scan = sub.add_parser("scan", help="sample the determinant surface at fixed p")
    p_scan.add_argument("--p", required=True, help="ball exponent (finite, > 1)")
    p_scan.add_argument("--samples", type=int, default=101)
    add_format(p_scan, FORMATS)
    p_scan.set_defaults(handler=_cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        output = args.handler(args)
    except (ValueError, OverflowError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
