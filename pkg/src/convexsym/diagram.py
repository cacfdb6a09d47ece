"""CSV and SVG emission for the two region diagrams.

The alpha diagram scatters (s, alpha) over the interpolation sweep against the
boundary curves 2/(s+1) and min(1, s/(s^2-1)); the dw diagram scatters
(s, D/w) over the pseudo-completeness gauge sweep against (s+1)/2, s^2/(s^2-1)
and s/(2(s-1)).  The SVG is hand-rolled (polyline + circle elements) so the
output is dependency-free and byte-reproducible.
"""

from __future__ import annotations

import math

import numpy as np

from . import complete as comp
from . import families as fam
from . import symm
from .gauges import minkowski_asymmetry
from .verify import CSV_HEADER, SampleRecord, crossing_number, record_csv_line

CURVE_POINTS = 257


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def alpha_rows(grid: int) -> tuple[list[SampleRecord], list[tuple[str, list]]]:
    records = []
    for s in np.linspace(1.0, 2.0, grid) if grid else []:
        for t in np.linspace(0.0, 1.0, grid):
            K = fam.interpolate(float(s), float(t))
            res = minkowski_asymmetry(K)
            a, tv = symm.alpha_tau(K)
            records.append(SampleRecord(
                family="interpolate", params=f"s={s:.6f};t={t:.6f}",
                s=res.s, alpha=a, tau=tv,
                crossings=crossing_number(symm.crossing_count(K))))
    ss = np.linspace(1.0, 2.0, CURVE_POINTS)
    curves = [
        ("2/(s+1)", [(float(s), 2.0 / (s + 1.0)) for s in ss]),
        ("min(1, s/(s^2-1))",
         [(float(s), 1.0 if s * s - 1.0 <= s else min(1.0, s / (s * s - 1.0)))
          for s in ss]),
    ]
    return records, curves


def dw_rows(grid: int) -> tuple[list[str], list[tuple[str, list]]]:
    header = "family,params,s,gauge,D,w,r,R,dw_ratio,pseudo_complete,complete"
    rows = [header]
    for s in np.linspace(1.05, 2.0, grid) if grid else []:
        K = fam.k_max(float(s))
        for lam in np.linspace(0.0, 1.0, grid):
            C = fam.c_lambda(K, float(lam))
            rep = comp.completeness_report(K, C, tol=1e-6)
            rows.append(",".join([
                "k_max", f"s={s:.6f}", repr(rep.s), f"c_lambda(lambda={lam:.6f})",
                repr(rep.D), repr(rep.w), repr(rep.r), repr(rep.R),
                repr(rep.dw_ratio), str(rep.pseudo_complete).lower(),
                str(rep.complete).lower()]))
    ss = np.linspace(1.0, 2.0, CURVE_POINTS)
    curves = [
        ("(s+1)/2", [(float(s), (s + 1.0) / 2.0) for s in ss]),
        ("s^2/(s^2-1)", [(float(s), s * s / (s * s - 1.0)) for s in ss if s > 1.02]),
        ("s/(2(s-1))", [(float(s), s / (2.0 * (s - 1.0))) for s in ss if s > 1.25]),
    ]
    return rows, curves


def write_alpha_csv(path: str, grid: int) -> list[SampleRecord]:
    records, curves = alpha_rows(grid)
    lines = [CSV_HEADER]
    lines += [record_csv_line(r) for r in records]
    for name, pts in curves:
        for x, y in pts:
            lines.append(f"curve,{name},{x!r},{y!r},,")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return records


def write_dw_csv(path: str, rows: list[str], curves) -> None:
    rows = list(rows)
    for name, pts in curves:
        for x, y in pts:
            rows.append(f"curve,{name},{x!r},,,,,{y!r},,,")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(rows) + "\n")


_SVG_W, _SVG_H = 640, 480
_MARGIN = 48


def _svg_scatter(path: str, title: str, xlim, ylim, curves, scatter) -> None:
    def sx(x):
        return _MARGIN + (x - xlim[0]) / (xlim[1] - xlim[0]) * (_SVG_W - 2 * _MARGIN)

    def sy(y):
        return _SVG_H - _MARGIN - (y - ylim[0]) / (ylim[1] - ylim[0]) * (_SVG_H - 2 * _MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" '
        f'height="{_SVG_H}" viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<text x="{_SVG_W // 2}" y="24" text-anchor="middle" '
        f'font-family="monospace" font-size="14">{title}</text>',
        f'<line x1="{_MARGIN}" y1="{_SVG_H - _MARGIN}" x2="{_SVG_W - _MARGIN}" '
        f'y2="{_SVG_H - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
        f'y2="{_SVG_H - _MARGIN}" stroke="black"/>',
    ]
    colors = ["#1f77b4", "#2ca02c", "#d62728", "#9467bd"]
    for i, (name, pts) in enumerate(curves):
        if not pts:
            continue
        coords = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in pts
                          if ylim[0] <= y <= ylim[1])
        parts.append(f'<polyline fill="none" stroke="{colors[i % 4]}" '
                     f'stroke-width="1.5" points="{coords}"/>')
        parts.append(f'<text x="{_SVG_W - _MARGIN}" y="{_MARGIN + 16 * i}" '
                     f'text-anchor="end" font-family="monospace" font-size="11" '
                     f'fill="{colors[i % 4]}">{name}</text>')
    for x, y in scatter:
        parts.append(f'<circle cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="1.6" '
                     f'fill="#ff7f0e" fill-opacity="0.6"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def write_alpha_diagram(csv_path: str, svg_path: str, grid: int) -> int:
    records = write_alpha_csv(csv_path, grid)
    _, curves = alpha_rows(0)
    _svg_scatter(svg_path, "covering ratio vs asymmetry",
                 (1.0, 2.02), (0.6, 1.05), curves,
                 [(r.s, r.alpha) for r in records])
    return len(records)


def write_dw_diagram(csv_path: str, svg_path: str, grid: int) -> int:
    rows, curves = dw_rows(grid)
    write_dw_csv(csv_path, rows, curves)
    scatter = []
    for row in rows[1:]:
        cells = row.split(",")
        if cells[0] != "k_max":
            continue
        scatter.append((float(cells[2]), float(cells[8])))
    _svg_scatter(svg_path, "diameter-width ratio vs asymmetry",
                 (1.0, 2.02), (0.95, 1.5), curves, scatter)
    return len(scatter)
