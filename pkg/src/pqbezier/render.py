"""Standalone SVG rendering of planar curves with their control polygons."""

from __future__ import annotations

import numpy as np

from .curve import ControlPolygon, sample
from .errors import DomainError

__all__ = ["convex_hull_2d", "render_svg"]

WIDTH, HEIGHT, MARGIN = 640.0, 480.0, 24.0


def convex_hull_2d(points) -> np.ndarray:
    """Counter-clockwise hull vertices (monotone chain); collinear points dropped."""
    pts = sorted({(float(x), float(y)) for x, y in np.asarray(points, dtype=float)})
    if len(pts) <= 2:
        return np.array(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for pt in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    for pt in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    return np.array(lower[:-1] + upper[:-1])


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _coords(pts) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)


def render_svg(poly: ControlPolygon, samples: int = 256, show_hull: bool = False,
               stroke_width: float = 1.5) -> str:
    """Return an SVG 1.1 document showing the curve, its polygon and control points."""
    if poly.dim != 2:
        raise DomainError("only planar (2D) curves can be rendered")
    if samples < 2:
        raise DomainError("samples must be at least 2")
    ctrl = poly.points
    lo, hi = ctrl.min(axis=0), ctrl.max(axis=0)
    span = np.where(hi - lo > 0, hi - lo, 1.0)
    scale = min((WIDTH - 2 * MARGIN) / span[0], (HEIGHT - 2 * MARGIN) / span[1])
    offset = np.array([WIDTH, HEIGHT]) / 2 - scale * (lo + hi) / 2 * np.array([1.0, -1.0])

    def to_view(pts):
        pts = np.atleast_2d(pts)
        return np.column_stack([pts[:, 0] * scale, -pts[:, 1] * scale]) + offset

    curve = to_view(sample(poly, np.linspace(0.0, 1.0, samples)))
    view_ctrl = to_view(ctrl)
    sw = _fmt(stroke_width)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0f}" '
        f'height="{HEIGHT:.0f}" viewBox="0 0 {WIDTH:.0f} {HEIGHT:.0f}">',
        f"<!-- p={poly.params.p!r} q={poly.params.q!r} n={poly.degree} -->",
    ]
    if show_hull:
        hull = to_view(convex_hull_2d(ctrl))
        lines.append(f'<polygon class="hull" points="{_coords(hull)}" fill="#e8eef8" stroke="none"/>')
    lines.append(
        f'<polyline class="control-polygon" points="{_coords(view_ctrl)}" fill="none" '
        f'stroke="#888888" stroke-width="{sw}" stroke-dasharray="6,4"/>'
    )
    for x, y in view_ctrl:
        lines.append(f'<circle class="control-point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#cc3333"/>')
    lines.append(
        f'<polyline class="curve" points="{_coords(curve)}" fill="none" '
        f'stroke="#1f4e9c" stroke-width="{sw}"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
