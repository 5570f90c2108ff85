#!/usr/bin/env python3
"""Render comparison figures from benchmark CSV files.

Reads the iteration-count CSV written by the sigames bench command and draws
one line-plus-markers series per distinct value of a chosen column, with the
per-series mean in the legend.  Output is SVG by default: the file is a pure
function of the CSV content and the flags, with no timestamps or random ids,
so rendered figures can be compared byte for byte.  PNG output goes through
Pillow when the output path ends in .png.

Usage:
    plots.py --csv bench.csv --x param --series algorithm --y iterations \
             [--logy] --out fig.svg
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

EXPECTED_HEADER = (
    "generator",
    "param",
    "seed",
    "algorithm",
    "rule",
    "iterations",
    "evaluations",
    "wall_ms",
    "winners_digest",
)

WIDTH, HEIGHT = 800.0, 500.0
MARGIN_LEFT, MARGIN_RIGHT = 70.0, 20.0
MARGIN_TOP, MARGIN_BOTTOM = 40.0, 55.0

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

AXIS_COLOUR = "#333333"
GRID_COLOUR = "#dddddd"


class PlotError(Exception):
    """Anything wrong with the input data or the requested mapping."""


@dataclass(frozen=True)
class PlotSpec:
    input_csv: str
    x: str = "param"
    series_by: str = "algorithm"
    y: str = "iterations"
    logy: bool = False
    out: str = "figure.svg"
    title: str = ""
    xlabel: str = ""
    ylabel: str = ""


@dataclass
class Series:
    name: str
    colour: str
    points: list[tuple[float, float]] = field(default_factory=list)

    @property
    def mean(self) -> float:
        return sum(y for _, y in self.points) / len(self.points)

    def mean_line(self) -> list[tuple[float, float]]:
        by_x: dict[float, list[float]] = {}
        for x, y in self.points:
            by_x.setdefault(x, []).append(y)
        return [(x, sum(ys) / len(ys)) for x, ys in sorted(by_x.items())]


def fmt(v: float) -> str:
    """Fixed-precision number formatting so output never depends on repr."""
    text = f"{v:.2f}".rstrip("0").rstrip(".")
    return text if text != "-0" else "0"


def _parse_number(raw: str, column: str, line_no: int) -> float:
    try:
        return float(raw)
    except ValueError:
        raise PlotError(f"line {line_no}: column {column!r} has non-numeric value {raw!r}")


def read_series(spec: PlotSpec) -> list[Series]:
    try:
        text = Path(spec.input_csv).read_text(encoding="utf-8")
    except OSError as exc:
        raise PlotError(f"cannot read {spec.input_csv}: {exc}")
    rows = list(csv.reader(text.splitlines()))
    if not rows:
        raise PlotError("empty file, expected a benchmark CSV")
    header = tuple(rows[0])
    if header != EXPECTED_HEADER:
        raise PlotError(
            f"unexpected CSV header {','.join(header)!r}; "
            f"expected {','.join(EXPECTED_HEADER)!r}"
        )
    for column in (spec.x, spec.series_by, spec.y):
        if column not in header:
            raise PlotError(f"missing column {column!r}")
    if len(rows) == 1:
        raise PlotError("no data rows")
    col = {name: i for i, name in enumerate(header)}
    grouped: dict[str, list[tuple[float, float]]] = {}
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise PlotError(f"line {line_no}: expected {len(header)} fields, got {len(row)}")
        xv = _parse_number(row[col[spec.x]], spec.x, line_no)
        yv = _parse_number(row[col[spec.y]], spec.y, line_no)
        if spec.logy and yv <= 0:
            raise PlotError(f"line {line_no}: log scale needs positive {spec.y!r}, got {fmt(yv)}")
        grouped.setdefault(row[col[spec.series_by]], []).append((xv, yv))
    series = []
    for i, name in enumerate(sorted(grouped)):
        pts = sorted(grouped[name])
        series.append(Series(name, PALETTE[i % len(PALETTE)], pts))
    return series


# ---------------------------------------------------------------------------
# scales and ticks

def _x_scale(series: list[Series]):
    xs = sorted({x for s in series for x, _ in s.points})
    lo, hi = xs[0], xs[-1]
    if lo == hi:
        lo, hi = lo - 1.0, hi + 1.0
    span = MARGIN_LEFT, WIDTH - MARGIN_RIGHT

    def to_px(x: float) -> float:
        return span[0] + (x - lo) * (span[1] - span[0]) / (hi - lo)

    ticks = xs if len(xs) <= 12 else xs[:: math.ceil(len(xs) / 12)]
    return to_px, ticks


def _y_scale(series: list[Series], logy: bool):
    ys = [y for s in series for _, y in s.points]
    top, bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM
    if logy:
        lo = math.floor(math.log10(min(ys)))
        hi = math.ceil(math.log10(max(ys)))
        if lo == hi:
            hi = lo + 1

        def to_px(y: float) -> float:
            return bottom - (math.log10(y) - lo) * (bottom - top) / (hi - lo)

        ticks = [10.0 ** k for k in range(lo, hi + 1)]
        return to_px, ticks
    lo = min(0.0, min(ys))
    hi = max(ys)
    if hi == lo:
        hi = lo + 1.0

    def to_px(y: float) -> float:
        return bottom - (y - lo) * (bottom - top) / (hi - lo)

    ticks = [lo + k * (hi - lo) / 5 for k in range(6)]
    return to_px, ticks


# ---------------------------------------------------------------------------
# scene construction: a flat list of primitives both writers understand

def build_scene(spec: PlotSpec, series: list[Series]) -> list[tuple]:
    to_px_x, x_ticks = _x_scale(series)
    to_px_y, y_ticks = _y_scale(series, spec.logy)
    left, right = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    top, bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM
    scene: list[tuple] = [("rect", 0.0, 0.0, WIDTH, HEIGHT, "#ffffff")]

    for yt in y_ticks:
        py = to_px_y(yt)
        scene.append(("line", left, py, right, py, GRID_COLOUR, 1.0))
        scene.append(("text", left - 8, py + 4, fmt(yt), AXIS_COLOUR, "end", 12))
    for xt in x_ticks:
        px = to_px_x(xt)
        scene.append(("line", px, bottom, px, bottom + 5, AXIS_COLOUR, 1.0))
        scene.append(("text", px, bottom + 20, fmt(xt), AXIS_COLOUR, "middle", 12))

    scene.append(("line", left, bottom, right, bottom, AXIS_COLOUR, 1.5))
    scene.append(("line", left, top, left, bottom, AXIS_COLOUR, 1.5))

    for s in series:
        line = [(to_px_x(x), to_px_y(y)) for x, y in s.mean_line()]
        scene.append(("polyline", tuple(line), s.colour, 1.5))
        for x, y in s.points:
            scene.append(("circle", to_px_x(x), to_px_y(y), 3.0, s.colour))

    legend_x = right - 240
    legend_y = top + 12
    for i, s in enumerate(series):
        ly = legend_y + 18 * i
        scene.append(("line", legend_x, ly - 4, legend_x + 24, ly - 4, s.colour, 2.0))
        scene.append(("text", legend_x + 32, ly, f"{s.name} (mean {fmt(s.mean)})",
                      AXIS_COLOUR, "start", 12))

    if spec.title:
        scene.append(("text", WIDTH / 2, MARGIN_TOP - 14, spec.title, AXIS_COLOUR,
                      "middle", 15))
    scene.append(("text", (left + right) / 2, HEIGHT - 14,
                  spec.xlabel or spec.x, AXIS_COLOUR, "middle", 13))
    scene.append(("vtext", 18.0, (top + bottom) / 2,
                  spec.ylabel or spec.y, AXIS_COLOUR, 13))
    return scene


# ---------------------------------------------------------------------------
# writers

def scene_to_svg(scene: list[tuple]) -> str:
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(WIDTH)}" '
        f'height="{fmt(HEIGHT)}" viewBox="0 0 {fmt(WIDTH)} {fmt(HEIGHT)}" '
        'font-family="Helvetica,Arial,sans-serif">'
    ]
    for prim in scene:
        kind = prim[0]
        if kind == "rect":
            _, x, y, w, h, fill = prim
            parts.append(f'<rect x="{fmt(x)}" y="{fmt(y)}" width="{fmt(w)}" '
                         f'height="{fmt(h)}" fill="{fill}"/>')
        elif kind == "line":
            _, x1, y1, x2, y2, colour, width = prim
            parts.append(f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" '
                         f'y2="{fmt(y2)}" stroke="{colour}" stroke-width="{fmt(width)}"/>')
        elif kind == "polyline":
            _, pts, colour, width = prim
            coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pts)
            parts.append(f'<polyline class="series-line" points="{coords}" fill="none" '
                         f'stroke="{colour}" stroke-width="{fmt(width)}"/>')
        elif kind == "circle":
            _, cx, cy, r, colour = prim
            parts.append(f'<circle class="series-pt" cx="{fmt(cx)}" cy="{fmt(cy)}" '
                         f'r="{fmt(r)}" fill="{colour}"/>')
        elif kind == "text":
            _, x, y, s, colour, anchor, size = prim
            parts.append(f'<text x="{fmt(x)}" y="{fmt(y)}" fill="{colour}" '
                         f'font-size="{size}" text-anchor="{anchor}">{_escape(s)}</text>')
        elif kind == "vtext":
            _, x, y, s, colour, size = prim
            parts.append(f'<text x="{fmt(x)}" y="{fmt(y)}" fill="{colour}" '
                         f'font-size="{size}" text-anchor="middle" '
                         f'transform="rotate(-90 {fmt(x)} {fmt(y)})">{_escape(s)}</text>')
        else:
            raise PlotError(f"unknown scene primitive {kind!r}")
    parts.append("</svg>\n")
    return "\n".join(parts)


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def scene_to_png(scene: list[tuple], path: str) -> None:
    try:
        from PIL import Image, ImageDraw
    except ImportError:
        raise PlotError("PNG output needs the Pillow package; use an .svg path instead")
    img = Image.new("RGB", (int(WIDTH), int(HEIGHT)), "#ffffff")
    draw = ImageDraw.Draw(img)
    for prim in scene:
        kind = prim[0]
        if kind == "rect":
            _, x, y, w, h, fill = prim
            draw.rectangle([x, y, x + w, y + h], fill=fill)
        elif kind == "line":
            _, x1, y1, x2, y2, colour, width = prim
            draw.line([x1, y1, x2, y2], fill=colour, width=max(1, round(width)))
        elif kind == "polyline":
            _, pts, colour, width = prim
            if len(pts) > 1:
                draw.line(list(pts), fill=colour, width=max(1, round(width)))
        elif kind == "circle":
            _, cx, cy, r, colour = prim
            draw.ellipse([cx - r, cy - r, cx + r, cy + r], fill=colour)
        elif kind == "text":
            _, x, y, s, colour, anchor, size = prim
            anchor_code = {"start": "ls", "middle": "ms", "end": "rs"}[anchor]
            draw.text((x, y), s, fill=colour, anchor=anchor_code)
        elif kind == "vtext":
            _, x, y, s, colour, size = prim
            draw.text((x, y), s, fill=colour, anchor="mm")
    img.save(path, format="PNG")


def render(spec: PlotSpec) -> None:
    series = read_series(spec)
    scene = build_scene(spec, series)
    suffix = Path(spec.out).suffix.lower()
    if suffix == ".svg":
        Path(spec.out).write_text(scene_to_svg(scene), encoding="utf-8")
    elif suffix == ".png":
        scene_to_png(scene, spec.out)
    else:
        raise PlotError(f"unsupported output format {suffix!r}, use .svg or .png")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--csv", required=True, help="benchmark CSV file")
    parser.add_argument("--x", default="param", help="column for the x axis")
    parser.add_argument("--series", default="algorithm",
                        help="column whose values become separate series")
    parser.add_argument("--y", default="iterations", help="column for the y axis")
    parser.add_argument("--logy", action="store_true", help="log-scale y axis")
    parser.add_argument("--out", required=True, help="output path (.svg or .png)")
    parser.add_argument("--title", default="")
    parser.add_argument("--xlabel", default="")
    parser.add_argument("--ylabel", default="")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(
        input_csv=args.csv,
        x=args.x,
        series_by=args.series,
        y=args.y,
        logy=args.logy,
        out=args.out,
        title=args.title,
        xlabel=args.xlabel,
        ylabel=args.ylabel,
    )
    try:
        render(spec)
    except PlotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
