"""Command line interface and serialization formats.

Subcommands: analyze, enumerate, classify, family, equiv, blowup, check, svg.
Vertex lists are always passed as "x,y;x,y;...".  Exit codes: 0 success,
1 catalog verification found counterexamples, 2 bad input (parse or
validation errors).

Data outputs are deterministic: identical flags give byte-identical JSON and
SVG.  Run metadata (timestamps, worker counts) goes to a sidecar file next to
the catalog, never into the data itself.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Sequence

from .polygon import (
    FanValidationError,
    LdpPolygon,
    NotCounterclockwise,
    format_vertices,
    parse_vertices,
    validate_fan,
    validate_ldp_polygon,
)
from .surface import ConeSingular, SurfaceReport, analyze, blow_up
from .equivalence import are_equivalent
from .enumeration import (
    BoxSpec,
    CatalogEntry,
    classify_catalog,
    enumerate_ldp,
    verify_catalog,
)
from .families import FamilyParams, generate


def _fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def report_to_dict(report: SurfaceReport) -> dict:
    return {
        "d": report.d,
        "rho": report.picard_number,
        "dets": list(report.dets),
        "f": list(report.f_values),
        "degrees": [_fraction_str(x) for x in report.anticanonical_degrees],
        "ldp": report.is_log_del_pezzo,
        "singular": report.singular_count,
    }


def entry_to_dict(entry: CatalogEntry) -> dict:
    return {
        "vertices": [list(v) for v in entry.vertices],
        "d": entry.d,
        "rho": entry.picard_number,
        "dets": list(entry.dets),
        "f": list(entry.f_values),
        "singular": entry.singular_count,
        "family": entry.family.to_dict() if entry.family is not None else None,
        "three_case": entry.three_case,
    }


def entry_from_dict(data: dict) -> CatalogEntry:
    family = None
    if data.get("family") is not None:
        fd = dict(data["family"])
        family = FamilyParams(fd.pop("family"), **fd)
    return CatalogEntry(
        vertices=tuple(tuple(v) for v in data["vertices"]),
        d=data["d"],
        picard_number=data["rho"],
        dets=tuple(data["dets"]),
        f_values=tuple(data["f"]),
        singular_count=data["singular"],
        family=family,
        three_case=data.get("three_case"),
    )


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def write_catalog(entries: list[CatalogEntry], path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for entry in entries:
            fh.write(_dump(entry_to_dict(entry)) + "\n")


def read_catalog(path: str) -> list[CatalogEntry]:
    entries = []
    with open(path, "r", encoding="ascii") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                entries.append(entry_from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"bad catalog line {line_no}: {exc}") from None
    return entries


def _parse_polygon_lenient(text: str) -> LdpPolygon:
    """Parse a polygon, also accepting a clockwise vertex listing."""
    points = parse_vertices(text)
    try:
        return validate_ldp_polygon(points)
    except NotCounterclockwise:
        return validate_ldp_polygon(list(reversed(points)))


def emit_svg(poly: LdpPolygon, path: str) -> None:
    """Write a deterministic SVG: lattice grid, origin marker, the polygon,
    and one determinant label per edge.  Byte-stable for a fixed input."""
    scale = 40
    xs = [v.x for v in poly.vertices]
    ys = [v.y for v in poly.vertices]
    x_lo, x_hi = min(xs) - 1, max(xs) + 1
    y_lo, y_hi = min(ys) - 1, max(ys) + 1
    width = (x_hi - x_lo) * scale
    height = (y_hi - y_lo) * scale

    def px(x_half: int) -> int:
        # Positions arrive doubled so that edge midpoints stay integral.
        return (x_half - 2 * x_lo) * scale // 2

    def py(y_half: int) -> int:
        return (2 * y_hi - y_half) * scale // 2

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for gx in range(x_lo, x_hi + 1):
        parts.append(
            f'<line x1="{px(2 * gx)}" y1="0" x2="{px(2 * gx)}" y2="{height}" stroke="#dddddd" stroke-width="1"/>'
        )
    for gy in range(y_lo, y_hi + 1):
        parts.append(
            f'<line x1="0" y1="{py(2 * gy)}" x2="{width}" y2="{py(2 * gy)}" stroke="#dddddd" stroke-width="1"/>'
        )
    for gx in range(x_lo, x_hi + 1):
        for gy in range(y_lo, y_hi + 1):
            parts.append(f'<circle cx="{px(2 * gx)}" cy="{py(2 * gy)}" r="2" fill="#bbbbbb"/>')
    points_attr = " ".join(f"{px(2 * v.x)},{py(2 * v.y)}" for v in poly.vertices)
    parts.append(
        f'<polygon points="{points_attr}" fill="#6699cc" fill-opacity="0.25" stroke="#336699" stroke-width="2"/>'
    )
    parts.append(f'<circle cx="{px(0)}" cy="{py(0)}" r="4" fill="#cc3333"/>')
    cycle = poly.cycle
    for i in range(1, poly.d + 1):
        a, b = cycle.ray(i), cycle.ray(i + 1)
        parts.append(
            f'<text x="{px(a.x + b.x)}" y="{py(a.y + b.y)}" font-size="14" '
            f'font-family="monospace" fill="#336699" text-anchor="middle">{cycle.cone_det(i)}</text>'
        )
    parts.append("</svg>")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(parts) + "\n")


def _print_report_text(report: SurfaceReport) -> None:
    rows = [
        ("d", str(report.d)),
        ("rho", str(report.picard_number)),
        ("dets", " ".join(map(str, report.dets))),
        ("f", " ".join(map(str, report.f_values))),
        ("degrees", " ".join(_fraction_str(x) for x in report.anticanonical_degrees)),
        ("ldp", "yes" if report.is_log_del_pezzo else "no"),
        ("singular", str(report.singular_count)),
    ]
    for key, value in rows:
        print(f"{key:<10}{value}")


def _cmd_analyze(args: argparse.Namespace) -> int:
    cycle = validate_fan(parse_vertices(args.vertices))
    report = analyze(cycle)
    if args.json:
        print(_dump(report_to_dict(report)))
    else:
        _print_report_text(report)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    started = time.time()
    entries = enumerate_ldp(BoxSpec(args.box), jobs=args.jobs)
    if args.out is None:
        for entry in entries:
            print(_dump(entry_to_dict(entry)))
    else:
        write_catalog(entries, args.out)
        sidecar = {
            "box": args.box,
            "jobs": args.jobs,
            "classes": len(entries),
            "elapsed_seconds": round(time.time() - started, 3),
            "generated_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        with open(args.out + ".meta.json", "w", encoding="ascii") as fh:
            fh.write(json.dumps(sidecar, indent=2) + "\n")
        print(f"{len(entries)} classes -> {args.out}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    entries = classify_catalog(read_catalog(args.infile))
    if args.out is None:
        for entry in entries:
            print(_dump(entry_to_dict(entry)))
    else:
        write_catalog(entries, args.out)
        print(f"{len(entries)} classes -> {args.out}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    report = verify_catalog(read_catalog(args.infile))
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.ok else 1


def _cmd_family(args: argparse.Namespace) -> int:
    given = {
        name: getattr(args, name)
        for name in ("p", "q", "r", "s", "t")
        if getattr(args, name) is not None
    }
    params = FamilyParams(args.family, **given)
    instance = generate(params)
    print(format_vertices(instance.polygon.vertices))
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    poly_a = _parse_polygon_lenient(args.a)
    poly_b = _parse_polygon_lenient(args.b)
    m = are_equivalent(poly_a, poly_b)
    if m is None:
        print("inequivalent")
    else:
        print(_dump([[m.a, m.b], [m.c, m.d]]))
    return 0


def _cmd_blowup(args: argparse.Namespace) -> int:
    cycle = validate_fan(parse_vertices(args.vertices))
    print(format_vertices(blow_up(cycle, args.cone).rays))
    return 0


def _cmd_svg(args: argparse.Namespace) -> int:
    emit_svg(validate_ldp_polygon(parse_vertices(args.vertices)), args.out)
    print(args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ldptoric",
        description="Exact tools for complete lattice fans and LDP polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="singularity and degree report for a fan")
    p_analyze.add_argument("vertices", help='ray cycle as "x,y;x,y;..."')
    p_analyze.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_enum = sub.add_parser("enumerate", help="all classes with vertices in a box")
    p_enum.add_argument("--box", type=int, required=True, help="coordinate bound n")
    p_enum.add_argument("--out", default=None, help="JSONL output path (default stdout)")
    p_enum.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count(),
        help="worker processes (default: logical cores)",
    )
    p_enum.set_defaults(func=_cmd_enumerate)

    p_classify = sub.add_parser("classify", help="fill family and case tags in a catalog")
    p_classify.add_argument("--in", dest="infile", required=True, help="JSONL catalog path")
    p_classify.add_argument("--out", default=None, help="JSONL output path (default stdout)")
    p_classify.set_defaults(func=_cmd_classify)

    p_check = sub.add_parser("check", help="run catalog-wide structural checks")
    p_check.add_argument("--in", dest="infile", required=True, help="JSONL catalog path")
    p_check.set_defaults(func=_cmd_check)

    p_family = sub.add_parser("family", help="generate a family polygon from parameters")
    p_family.add_argument("--family", required=True, help="family tag, e.g. two1")
    for name in ("p", "q", "r", "s", "t"):
        p_family.add_argument(f"--{name}", type=int, default=None)
    p_family.set_defaults(func=_cmd_family)

    p_equiv = sub.add_parser("equiv", help="find a unimodular map between two polygons")
    p_equiv.add_argument("--a", required=True, help="first polygon")
    p_equiv.add_argument("--b", required=True, help="second polygon")
    p_equiv.set_defaults(func=_cmd_equiv)

    p_blow = sub.add_parser("blowup", help="subdivide a smooth cone by its ray sum")
    p_blow.add_argument("--vertices", required=True, help="ray cycle")
    p_blow.add_argument("--cone", type=int, required=True, help="1-based cone index")
    p_blow.set_defaults(func=_cmd_blowup)

    p_svg = sub.add_parser("svg", help="draw a polygon with its edge determinants")
    p_svg.add_argument("--vertices", required=True, help="polygon vertex cycle")
    p_svg.add_argument("--out", required=True, help="SVG output path")
    p_svg.set_defaults(func=_cmd_svg)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FanValidationError, ConeSingular, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
