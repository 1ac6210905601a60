"""Deterministic SVG figures for dimension-2 instances.

One panel per fixed ideal: semigroup lattice points as circles, the cone
boundary as solid lines, the shifted region boundary dashed, the base
point as an open circle, and the monomial span of the ideal shaded in
40 percent gray.  All geometry is computed over exact rationals and
formatted through integer arithmetic, so output bytes depend only on the
input.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

from .errors import UnsupportedPlotError
from .linalg import dot
from .polyhedral import iter_box

UNIT = 32  # pixels per lattice step
DOT = 3
PAD = 24
LABEL_BAND = 28


def _fmt(q):
    """Exact two-decimal rendering of a rational, no float rounding."""
    q = Fraction(q)
    scaled = q * 100
    n = scaled.numerator // scaled.denominator
    if scaled != n and 2 * (scaled - n) >= 1:
        n += 1
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 100}.{n % 100:02d}"


def _clip_polygon(rows, lower, upper):
    """Vertices of {x : rows hold} ∩ box, in counterclockwise order."""
    all_rows = list(rows)
    all_rows.append(((1, 0), Fraction(lower[0])))
    all_rows.append(((-1, 0), Fraction(-upper[0])))
    all_rows.append(((0, 1), Fraction(lower[1])))
    all_rows.append(((0, -1), Fraction(-upper[1])))
    pts = set()
    for i in range(len(all_rows)):
        for j in range(i + 1, len(all_rows)):
            (a1, b1), (a2, b2) = all_rows[i], all_rows[j]
            det = a1[0] * a2[1] - a1[1] * a2[0]
            if det == 0:
                continue
            x = Fraction(b1 * a2[1] - b2 * a1[1], det)
            y = Fraction(a1[0] * b2 - a2[0] * b1, det)
            if all(dot(a, (x, y)) >= b for a, b in all_rows):
                pts.add((x, y))
    pts = sorted(pts)
    if len(pts) < 3:
        return pts
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy, dx) > (0, 0) else 1

    def compare(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        cross = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return -1 if p < q else (0 if p == q else 1)

    return sorted(pts, key=cmp_to_key(compare))


def _boundary_segments(polygon, rows):
    """Edges of the clipped polygon lying on the given facet lines."""
    segments = []
    for a, b in rows:
        chain = [p for p in polygon if dot(a, p) == b]
        if len(chain) >= 2:
            chain = sorted(chain)
            segments.append((chain[0], chain[-1]))
    return segments


class _PanelContext:
    def __init__(self, lower, upper):
        self.lower = lower
        self.upper = upper
        self.width = (upper[0] - lower[0]) * UNIT + 2 * PAD
        self.height = (upper[1] - lower[1]) * UNIT + 2 * PAD + LABEL_BAND

    def px(self, point, offset_x):
        x = offset_x + PAD + (Fraction(point[0]) - self.lower[0]) * UNIT
        y = PAD + (Fraction(self.upper[1]) - Fraction(point[1])) * UNIT
        return _fmt(x), _fmt(y)


def _polygon_path(ctx, polygon, offset_x):
    coords = [ctx.px(p, offset_x) for p in polygon]
    body = " L ".join(f"{x} {y}" for x, y in coords)
    return f"M {body} Z"


def render_fixed_ideals(sn, records, box):
    """Multi-panel SVG for the fixed-ideal records of a 2-dimensional
    instance; panels are labeled by record label."""
    if sn.ambient.dim != 2:
        raise UnsupportedPlotError("figures are only emitted in dimension 2")
    lower, upper = box.lower, box.upper
    ctx = _PanelContext(lower, upper)
    sigma_rows = [(n, 0) for n in sn.ambient.cone.normals]
    sigma_poly = _clip_polygon([(a, Fraction(b)) for a, b in sigma_rows], lower, upper)
    shifted_rows = [(a, Fraction(b)) for a, b in sn.shifted.hrep]
    shifted_poly = _clip_polygon(shifted_rows, lower, upper)
    lattice = [x for x in iter_box(lower, upper) if sn.ambient.contains(x)]

    parts = []
    total_w = ctx.width * len(records)
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{ctx.height}" '
        f'viewBox="0 0 {total_w} {ctx.height}">'
    )
    parts.append(f'<rect width="{total_w}" height="{ctx.height}" fill="white"/>')
    for k, record in enumerate(records):
        off = k * ctx.width
        if not record.ideal.is_zero:
            span_rows = [(a, Fraction(b)) for a, b in record.ideal.newton().hrep]
            shaded = _clip_polygon(span_rows, lower, upper)
            if len(shaded) >= 3:
                parts.append(f'<path d="{_polygon_path(ctx, shaded, off)}" fill="gray" fill-opacity="0.4" stroke="none"/>')
        for seg in _boundary_segments(sigma_poly, sigma_rows):
            (x1, y1), (x2, y2) = ctx.px(seg[0], off), ctx.px(seg[1], off)
            parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="1.5"/>')
        for seg in _boundary_segments(shifted_poly, shifted_rows):
            (x1, y1), (x2, y2) = ctx.px(seg[0], off), ctx.px(seg[1], off)
            parts.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="1" stroke-dasharray="6 4"/>'
            )
        for pt in lattice:
            x, y = ctx.px(pt, off)
            parts.append(f'<circle cx="{x}" cy="{y}" r="{DOT}" fill="black"/>')
        bx, by = ctx.px(sn.base, off)
        parts.append(f'<circle cx="{bx}" cy="{by}" r="{DOT + 2}" fill="white" stroke="black" stroke-width="1.5"/>')
        lx = off + ctx.width // 2
        ly = ctx.height - LABEL_BAND // 2
        parts.append(f'<text x="{lx}" y="{ly}" text-anchor="middle" font-family="serif" font-size="16">{record.label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
